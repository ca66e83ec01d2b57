#include "l1top/io.hpp"

#include <fstream>
#include <sstream>

namespace l1top::io
{

namespace
{

template <typename T>
T get_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    try
    {
        return j.at(key).get<T>();
    }
    catch (const nlohmann::json::exception&)
    {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

Rational coefficient_from_json(const Json& v)
{
    if (v.is_number_integer())
        return Rational(BigInt(v.get<long long>()));
    if (v.is_string())
    {
        try
        {
            return parse_rational(v.get<std::string>());
        }
        catch (const std::invalid_argument& e)
        {
            throw FormatError(e.what());
        }
    }
    throw FormatError("coefficients must be integers or \"p/q\" strings");
}

template <typename Scalar>
Json sparse_entries(const BasicChain<Scalar>& c)
{
    Json entries = Json::array();
    for (const auto& [cell, value] : c.coeffs())
        entries.push_back(Json::array({cell, to_string(value)}));
    return entries;
}

Chain sparse_from_json(const Json& j, const ComplexPtr& complex, const char* key)
{
    const int degree = get_field<int>(j, "degree");
    if (degree < 0 || degree > complex->dims())
        throw FormatError("degree " + std::to_string(degree) + " is outside the complex");
    const Json& entries = j.at(key);
    if (!entries.is_array())
        throw FormatError(std::string("'") + key + "' must be an array");
    Chain c(complex, degree);
    for (const Json& entry : entries)
    {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
            throw FormatError("chain entries must be [cell, coefficient]");
        const Index cell = entry[0].get<Index>();
        if (cell < 0 || cell >= complex->cell_count(degree))
            throw FormatError("cell " + std::to_string(cell) + " is not a " + std::to_string(degree) + "-cell");
        c.add(cell, coefficient_from_json(entry[1]));
    }
    return c;
}

Json interval_json(const IntegralInterval& e)
{
    Json j;
    j["lower"] = to_string(e.lower);
    j["upper"] = to_string(e.upper);
    j["status"] = e.status == SearchStatus::exact ? "exact" : "truncated";
    return j;
}

Json big_list(const std::vector<BigInt>& values)
{
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(to_string(v));
    return out;
}

}  // namespace

Json to_json(const DeltaComplex& complex)
{
    Json j;
    j["dims"] = complex.dims();
    j["cells"] = complex.cell_counts();
    Json faces = Json::object();
    for (int n = 1; n <= complex.dims(); ++n)
        faces[std::to_string(n)] = complex.face_table(n);
    j["faces"] = faces;
    return j;
}

DeltaComplex complex_from_json(const Json& j)
{
    const int dims = get_field<int>(j, "dims");
    auto counts = get_field<std::vector<Index>>(j, "cells");
    if (dims < 0 || static_cast<int>(counts.size()) != dims + 1)
        throw FormatError("'cells' must list one count per dimension 0..dims");
    if (!j.contains("faces") || !j.at("faces").is_object())
        throw FormatError("missing object 'faces'");
    std::vector<DeltaComplex::FaceTable> faces(dims);
    for (int n = 1; n <= dims; ++n)
    {
        const std::string key = std::to_string(n);
        if (!j.at("faces").contains(key))
        {
            if (counts[n] != 0)
                throw FormatError("missing face table for dimension " + key);
            continue;
        }
        try
        {
            faces[n - 1] = j.at("faces").at(key).get<DeltaComplex::FaceTable>();
        }
        catch (const nlohmann::json::exception&)
        {
            throw FormatError("face table " + key + " must be an array of integer arrays");
        }
    }
    return DeltaComplex(std::move(counts), std::move(faces));
}

Json to_json(const Chain& c)
{
    Json j;
    j["degree"] = c.degree();
    j["coeffs"] = sparse_entries(c);
    return j;
}

Json to_json(const IntChain& c)
{
    Json j;
    j["degree"] = c.degree();
    j["coeffs"] = sparse_entries(c);
    return j;
}

Chain chain_from_json(const Json& j, const ComplexPtr& complex)
{
    if (!j.is_object() || !j.contains("coeffs"))
        throw FormatError("missing field 'coeffs'");
    return sparse_from_json(j, complex, "coeffs");
}

Json cochain_to_json(const Chain& phi)
{
    Json j;
    j["degree"] = phi.degree();
    j["values"] = sparse_entries(phi);
    return j;
}

Chain cochain_from_json(const Json& j, const ComplexPtr& complex)
{
    if (!j.is_object() || !j.contains("values"))
        throw FormatError("missing field 'values'");
    return sparse_from_json(j, complex, "values");
}

Json to_json(const CellMap& f)
{
    Json assign = Json::object();
    for (std::size_t n = 0; n < f.assign.size(); ++n)
        assign[std::to_string(n)] = f.assign[n];
    Json j;
    j["assign"] = assign;
    return j;
}

CellMap cell_map_from_json(const Json& j, const ComplexPtr& source, const ComplexPtr& target)
{
    if (!j.is_object() || !j.contains("assign") || !j.at("assign").is_object())
        throw FormatError("missing object 'assign'");
    CellMap f{source, target, {}};
    for (int n = 0; n <= source->dims(); ++n)
    {
        const std::string key = std::to_string(n);
        if (!j.at("assign").contains(key))
            throw FormatError("missing assignment for dimension " + key);
        try
        {
            f.assign.push_back(j.at("assign").at(key).get<std::vector<Index>>());
        }
        catch (const nlohmann::json::exception&)
        {
            throw FormatError("assignment " + key + " must be an integer array");
        }
    }
    return f;
}

Json to_json(const HomologyGroup& group)
{
    Json j;
    j["degree"] = group.degree();
    j["betti"] = group.betti();
    Json torsion = Json::array();
    for (const auto& m : group.torsion())
        torsion.push_back(m.convert_to<long long>());
    j["torsion"] = torsion;
    Json gens = Json::array();
    for (const auto& g : group.generators())
        gens.push_back(to_json(g));
    j["generators"] = gens;
    return j;
}

Json to_json(const CombinatorialType& t, const SignVector& eps)
{
    Json j;
    j["k"] = t.k();
    j["n"] = t.n();
    Json pairs = Json::array();
    for (const auto& [a, b] : t.pairs())
        pairs.push_back(Json::array({Json::array({a.slot + 1, a.face}), Json::array({b.slot + 1, b.face})}));
    j["pairs"] = pairs;
    j["eps"] = eps;
    return j;
}

std::pair<CombinatorialType, SignVector> type_from_json(const Json& j)
{
    const Index k = get_field<Index>(j, "k");
    const int n = get_field<int>(j, "n");
    std::vector<std::pair<FaceSlot, FaceSlot>> pairs;
    if (j.contains("pairs"))
    {
        if (!j.at("pairs").is_array())
            throw FormatError("'pairs' must be an array");
        for (const Json& p : j.at("pairs"))
        {
            try
            {
                auto a = p.at(0).get<std::pair<Index, int>>();
                auto b = p.at(1).get<std::pair<Index, int>>();
                pairs.push_back({{a.first - 1, a.second}, {b.first - 1, b.second}});
            }
            catch (const nlohmann::json::exception&)
            {
                throw FormatError("pairs must look like [[j, l], [j2, l2]]");
            }
        }
    }
    SignVector eps;
    if (j.contains("eps"))
        eps = get_field<SignVector>(j, "eps");
    else
        eps.assign(k, 1);
    if (static_cast<Index>(eps.size()) != k)
        throw FormatError("'eps' must have k entries");
    try
    {
        return {CombinatorialType(k, n, std::move(pairs)), eps};
    }
    catch (const std::invalid_argument& e)
    {
        throw FormatError(e.what());
    }
}

Json to_json(const NormReport& report)
{
    Json j;
    switch (report.kind)
    {
        case NormReport::Kind::rational:
            j["kind"] = "rational";
            j["value"] = to_string(report.value);
            break;
        case NormReport::Kind::integral:
            j["kind"] = "integral";
            j["value"] = interval_json(report.interval);
            break;
        case NormReport::Kind::stable:
            j["kind"] = "stable";
            j["value"] = to_string(report.value);
            break;
    }
    j["cycle"] = to_json(report.optimal_cycle);
    if (report.dual)
        j["dual"] = cochain_to_json(report.dual->cochain);
    else
        j["dual"] = nullptr;
    if (report.kind == NormReport::Kind::integral)
    {
        j["box"] = to_string(report.box);
        j["box_complete"] = report.box_complete;
    }
    if (report.degenerate_probe_value)
        j["degenerate_probe"] = to_string(*report.degenerate_probe_value);
    Json stats;
    stats["iterations"] = report.stats.iterations;
    stats["nodes"] = report.stats.nodes;
    j["stats"] = stats;
    return j;
}

Json to_json(const NormSequence& seq)
{
    Json j;
    j["rational"] = to_string(seq.rational);
    Json entries = Json::array();
    for (std::size_t i = 0; i < seq.entries.size(); ++i)
    {
        Json e = interval_json(seq.entries[i]);
        e["d"] = i + 1;
        e["cycle"] = to_json(seq.cycles[i]);
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["stable_estimate"] = to_string(seq.stable_estimate);
    j["stable_argmin"] = seq.stable_argmin;
    j["bounded_subsequence"] = seq.bounded_subsequence;
    j["bounded_subsequence_detected"] = seq.bounded_subsequence_detected();
    j["window"] = seq.entries.size();
    Json stats;
    stats["iterations"] = seq.stats.iterations;
    stats["nodes"] = seq.stats.nodes;
    j["stats"] = stats;
    return j;
}

Json to_json(const StableNorm& stable)
{
    Json j;
    j["kind"] = "stable";
    Json value;
    value["estimate"] = to_string(stable.estimate);
    value["rational"] = to_string(stable.rational);
    value["argmin_d"] = stable.sequence.stable_argmin;
    value["window"] = stable.sequence.entries.size();
    value["status"] = stable.sequence.any_truncated() ? "truncated" : "exact";
    j["value"] = value;
    j["sequence"] = to_json(stable.sequence);
    return j;
}

Json to_json(const FlexReport& report)
{
    Json j;
    j["achieved_degrees"] = big_list(report.achieved_degrees);
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses)
    {
        Json e;
        e["d"] = to_string(w.d);
        e["source_norm"] = to_string(w.source_norm);
        e["bound"] = w.bound ? Json(to_string(*w.bound)) : Json(nullptr);
        witnesses.push_back(e);
    }
    j["witnesses"] = witnesses;
    j["implied_bound"] = report.implied_bound ? to_string(*report.implied_bound) : std::string("inf");
    j["target_norm"] = report.target_norm ? Json(to_string(*report.target_norm)) : Json(nullptr);
    j["single_source"] = report.single_source;
    j["window"] = report.window;
    j["sequence"] = report.sequence ? to_json(*report.sequence) : Json(nullptr);
    j["notes"] = report.notes;
    return j;
}

Json to_json(const CorpusEntry& entry)
{
    Json j;
    j["name"] = entry.name;
    j["complex"] = to_json(*entry.complex);
    Json cycles = Json::object();
    for (const auto& [name, c] : entry.cycles)
        cycles[name] = to_json(c);
    j["cycles"] = cycles;
    Json documented = Json::array();
    for (const auto& sig : entry.documented)
    {
        Json s;
        s["degree"] = sig.degree;
        s["betti"] = sig.betti;
        s["torsion"] = sig.torsion;
        documented.push_back(s);
    }
    j["homology"] = documented;
    return j;
}

Json to_json(const ValidationReport& report)
{
    Json out = Json::array();
    for (const auto& v : report.violations)
    {
        Json e;
        switch (v.kind)
        {
            case Violation::Kind::dangling_face: e["kind"] = "dangling_face"; break;
            case Violation::Kind::simplicial_identity: e["kind"] = "simplicial_identity"; break;
            case Violation::Kind::malformed_table: e["kind"] = "malformed_table"; break;
        }
        e["dim"] = v.dim;
        e["cell"] = v.cell;
        e["message"] = v.message;
        out.push_back(e);
    }
    return out;
}

std::string sequence_csv(const NormSequence& seq)
{
    std::ostringstream out;
    out << "d,lower,upper,status,ratio\n";
    for (std::size_t i = 0; i < seq.entries.size(); ++i)
    {
        const auto& e = seq.entries[i];
        out << (i + 1) << ',' << to_string(e.lower) << ',' << to_string(e.upper) << ','
            << (e.status == SearchStatus::exact ? "exact" : "truncated") << ','
            << to_string(Rational(e.upper) / Rational(static_cast<long>(i + 1))) << '\n';
    }
    return out.str();
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return Json::parse(in);
}

}  // namespace l1top::io
