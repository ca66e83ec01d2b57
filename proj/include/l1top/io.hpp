#ifndef L1TOP_IO_HPP
#define L1TOP_IO_HPP

#include <string>

#include <json.hpp>

#include "l1top/comb_types.hpp"
#include "l1top/corpus.hpp"
#include "l1top/flex.hpp"
#include "l1top/homology.hpp"
#include "l1top/l1_norm.hpp"

namespace l1top::io
{

// Objects keep insertion order so every dump is byte-stable.
using Json = nlohmann::ordered_json;

/// Thrown for well-formed JSON that does not match a schema.
struct FormatError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// {"dims": n, "cells": [c_0, ..., c_n], "faces": {"1": [[f0, f1], ...], ...}}
Json to_json(const DeltaComplex& complex);
DeltaComplex complex_from_json(const Json& j);

// {"degree": n, "coeffs": [[cell, "p/q"], ...]}, cells increasing
Json to_json(const Chain& c);
Json to_json(const IntChain& c);
Chain chain_from_json(const Json& j, const ComplexPtr& complex);

// {"degree": n, "values": [[cell, "p/q"], ...]}
Json cochain_to_json(const Chain& phi);
Chain cochain_from_json(const Json& j, const ComplexPtr& complex);

// {"assign": {"0": [...], "1": [...], ...}}
Json to_json(const CellMap& f);
CellMap cell_map_from_json(const Json& j, const ComplexPtr& source, const ComplexPtr& target);

// {"degree": n, "betti": b, "torsion": [...], "generators": [<chain>, ...]}
Json to_json(const HomologyGroup& group);

// {"k": k, "n": n, "pairs": [[[j, l], [j2, l2]], ...], "eps": [...]}; j is 1-based
Json to_json(const CombinatorialType& t, const SignVector& eps);
std::pair<CombinatorialType, SignVector> type_from_json(const Json& j);

Json to_json(const NormReport& report);
Json to_json(const NormSequence& seq);
Json to_json(const StableNorm& stable);
Json to_json(const FlexReport& report);
Json to_json(const CorpusEntry& entry);
Json to_json(const ValidationReport& report);

std::string sequence_csv(const NormSequence& seq);

Json read_json_file(const std::string& path);  // throws nlohmann parse errors

}  // namespace l1top::io

#endif
