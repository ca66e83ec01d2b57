#include "l1top/flex.hpp"

#include <algorithm>

namespace l1top
{

std::optional<DegreeWitness> verify_degree_witness(const CellMap& f, const HomologyClass& beta,
                                                   const HomologyClass& alpha)
{
    const int n = alpha.group()->degree();
    if (beta.group()->degree() != n)
        throw std::domain_error("degree witness: classes have different degrees");
    if (!same_complex(f.source, beta.group()->complex()) || !same_complex(f.target, alpha.group()->complex()))
        throw std::domain_error("degree witness: map does not run from beta's complex to alpha's complex");
    const ValidationReport report = validate_cell_map(f);
    if (!report.ok())
    {
        const Violation& v = report.violations.front();
        throw std::domain_error("degree witness: map fails face commutation at " + std::to_string(v.dim)
                                + "-cell " + std::to_string(v.cell) + ": " + v.message);
    }

    const HomologyGroup& group = *alpha.group();
    const IntChain pushed = push_chain(f, beta.representative());
    const IntVector g = group.coordinates(pushed);
    const IntVector& a = alpha.coords();

    std::optional<BigInt> degree;
    Index pivot = -1;
    for (Index i = 0; i < a.size() && pivot < 0; ++i)
        if (group.generator_order(i) == 0 && a(i) != 0)
            pivot = i;
    if (pivot >= 0)
    {
        if (g(pivot) % a(pivot) == 0)
        {
            BigInt d = g(pivot) / a(pivot);
            if (group.normalize(a * d) == g)
                degree = d;
        }
    }
    else
    {
        // alpha is torsion: d is only defined modulo its order.
        const BigInt order = *torsion_order(alpha);
        for (BigInt d = 0; d < order; ++d)
            if (group.normalize(a * d) == g)
            {
                degree = d;
                break;
            }
    }
    if (!degree)
        return std::nullopt;

    const IntChain difference = pushed - (*degree) * alpha.representative();
    auto u = is_boundary(group, difference);
    if (!u)
        throw std::logic_error("degree witness: coordinates agree but the difference is not a boundary");
    return DegreeWitness{*degree, f, beta, alpha, true, *u};
}

bool recheck_witness(const DegreeWitness& w)
{
    const IntChain pushed = push_chain(w.map, w.source_class.representative());
    const IntChain difference = pushed - w.d * w.target_class.representative();
    if (w.chain_witness.degree() != difference.degree() + 1)
        return false;
    return boundary(w.chain_witness) == difference;
}

namespace
{

const char* finite_window_note =
    "degrees are verified for the listed witnesses only; no claim is made that the degree set is infinite";

}  // namespace

FlexReport degree_set(const std::vector<FamilyMember>& family, const HomologyClass& alpha)
{
    FlexReport report;
    report.target_norm = rational_norm(alpha).value;
    report.window = static_cast<Index>(family.size());
    for (const auto& member : family)
    {
        if (!same_complex(member.source_class.group()->complex(), family.front().source_class.group()->complex()))
            report.single_source = false;
        auto w = verify_degree_witness(member.map, member.source_class, alpha);
        if (!w)
            continue;
        FlexReport::Entry entry{w->d, rational_norm(member.source_class).value, std::nullopt};
        if (w->d != 0)
        {
            entry.bound = entry.source_norm / Rational(abs(w->d));
            if (!report.implied_bound || *entry.bound < *report.implied_bound)
                report.implied_bound = entry.bound;
        }
        report.witnesses.push_back(std::move(entry));
        report.achieved_degrees.push_back(w->d);
    }
    std::sort(report.achieved_degrees.begin(), report.achieved_degrees.end());
    report.achieved_degrees.erase(std::unique(report.achieved_degrees.begin(), report.achieved_degrees.end()),
                                  report.achieved_degrees.end());

    report.notes.emplace_back(finite_window_note);
    if (report.single_source)
        report.notes.emplace_back("all witnesses share one source complex");
    else
        report.notes.emplace_back("witnesses use distinct source complexes (possibly homeomorphic as spaces); "
                                  "weak flexibility asks for a single source");
    if (std::any_of(report.witnesses.begin(), report.witnesses.end(), [](const auto& e) { return e.d == 0; }))
        report.notes.emplace_back("degree-0 witnesses are excluded from the implied bound");
    if (report.implied_bound && *report.implied_bound < *report.target_norm)
        throw std::logic_error("functoriality violated: implied bound below the target norm");
    return report;
}

FlexReport torsion_flexibility(const HomologyClass& alpha, Index max_k)
{
    const auto order = torsion_order(alpha);
    if (!order)
        throw std::domain_error("torsion_flexibility: class has infinite order");
    FlexReport report;
    report.window = max_k;
    report.target_norm = rational_norm(alpha).value;
    for (Index k = 1; k <= max_k; ++k)
    {
        const BigInt d = 1 + BigInt(k) * (*order);
        if (!classes_equal(scale_class(d, alpha), alpha))
            continue;
        // identity map: d * rep - rep must bound
        if (!is_boundary(*alpha.group(), (d - 1) * alpha.representative()))
            continue;
        const Rational bound = *report.target_norm / Rational(d);
        report.witnesses.push_back({d, *report.target_norm, bound});
        report.achieved_degrees.push_back(d);
        if (!report.implied_bound || bound < *report.implied_bound)
            report.implied_bound = bound;
    }
    report.notes.emplace_back(finite_window_note);
    report.notes.emplace_back("witnesses use the identity map; torsion of order " + to_string(*order)
                              + " gives m Z + 1 inside the self-map degrees");
    return report;
}

FlexReport weak_flex_evidence(const HomologyClass& alpha, Index window, const SequenceOptions& options)
{
    FlexReport report;
    NormSequence seq = norm_sequence(alpha, window, options);
    report.window = window;
    report.target_norm = seq.rational;

    const bool hits_zero = std::any_of(seq.entries.begin(), seq.entries.end(),
                                       [](const IntegralInterval& e) { return e.upper == 0; });
    if (hits_zero && seq.rational != 0)
        throw std::logic_error("a vanishing integral multiple forces a vanishing rational norm");

    const std::string range = "1 <= d <= " + std::to_string(window);
    if (seq.bounded_subsequence_detected())
        report.notes.push_back("bounded subsequence detected within " + range
                               + " (evidence over a finite window, not a proof)");
    else
        report.notes.push_back("no bounded subsequence within " + range
                               + " (evidence over a finite window, not a proof)");
    if (seq.any_truncated())
        report.notes.emplace_back("some entries are truncated intervals");
    report.sequence = std::move(seq);
    return report;
}

}  // namespace l1top
