#ifndef L1TOP_FLEX_HPP
#define L1TOP_FLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "l1top/l1_norm.hpp"

namespace l1top
{

/// A verified instance of f_*(beta) = d * alpha.
struct DegreeWitness
{
    BigInt d;
    CellMap map;
    HomologyClass source_class;
    HomologyClass target_class;
    bool verified = false;
    /// u with boundary(u) == f_*(rep beta) - d * rep alpha, checked at chain level.
    IntChain chain_witness;
};

/// Solves push(beta) = d * alpha in homology coordinates; for classes with
/// no free part the least nonnegative d is returned.
std::optional<DegreeWitness> verify_degree_witness(const CellMap& f, const HomologyClass& beta,
                                                   const HomologyClass& alpha);

/// Recomputes the chain-level identity boundary(u) == f_* z_beta - d z_alpha.
bool recheck_witness(const DegreeWitness& w);

struct FamilyMember
{
    HomologyClass source_class;
    CellMap map;
};

struct FlexReport
{
    struct Entry
    {
        BigInt d;
        Rational source_norm;
        std::optional<Rational> bound;  // source_norm / |d| for d != 0
    };

    std::vector<BigInt> achieved_degrees;  // sorted, distinct
    std::vector<Entry> witnesses;
    std::optional<Rational> implied_bound;  // empty means +infinity
    std::optional<Rational> target_norm;
    bool single_source = true;
    std::optional<NormSequence> sequence;
    Index window = 0;
    std::vector<std::string> notes;
};

FlexReport degree_set(const std::vector<FamilyMember>& family, const HomologyClass& alpha);

/// Degrees 1 + k m for k = 1..max_k through the identity map.
/// Throws std::domain_error if alpha has infinite order.
FlexReport torsion_flexibility(const HomologyClass& alpha, Index max_k);

FlexReport weak_flex_evidence(const HomologyClass& alpha, Index window, const SequenceOptions& options = {});

}  // namespace l1top

#endif
