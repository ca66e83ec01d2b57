#include <random>

#include <catch_amalgamated.hpp>

#include "l1top/corpus.hpp"
#include "l1top/l1_norm.hpp"
#include "oracles.hpp"

using namespace l1top;

namespace
{

HomologyClass fundamental(const CorpusEntry& e, const std::string& name = "fundamental")
{
    const IntChain& z = e.cycles.at(name);
    return class_of(homology(e.complex, z.degree()), z);
}

std::vector<HomologyClass> corpus_classes()
{
    std::vector<HomologyClass> out;
    for (const auto& entry : standard_corpus())
        for (const auto& [name, z] : entry.cycles)
            out.push_back(class_of(homology(entry.complex, z.degree()), z));
    return out;
}

IntChain random_chain(const ComplexPtr& k, int n, int spread, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-spread, spread);
    IntChain c(k, n);
    for (Index cell = 0; cell < k->cell_count(n); ++cell)
        c.add(cell, coeff(rng));
    return c;
}

HomologyClass random_class(const GroupPtr& group, std::mt19937_64& rng, int spread = 2)
{
    std::uniform_int_distribution<int> coeff(-spread, spread);
    IntChain z(group->complex(), group->degree());
    for (const auto& g : group->generators())
        z += BigInt(coeff(rng)) * g;
    if (group->degree() < group->complex()->dims())
        z += boundary(random_chain(group->complex(), group->degree() + 1, 1, rng));
    return class_of(group, z);
}

void check_rational_report(const HomologyClass& a, const NormReport& r)
{
    CHECK(r.kind == NormReport::Kind::rational);
    CHECK(l1_norm_chain(r.optimal_cycle) == r.value);
    CHECK(is_cycle(r.optimal_cycle));
    REQUIRE(r.dual);
    CHECK(verify_dual(*r.dual, a));
    CHECK(r.dual->objective == r.value);
    // the optimal cycle differs from the representative by a rational boundary
    const Chain diff = r.optimal_cycle - to_rational_chain(a.representative());
    CHECK(pairing(r.dual->cochain, a.representative()) == r.value);
    for (const auto& [cell, value] : r.dual->cochain.coeffs())
        CHECK(abs(value) <= 1);
    if (a.group()->degree() < a.group()->complex()->dims())
    {
        // diff lies in the rational span of the boundary columns
        const RationalMatrix b = boundary_matrix<Rational>(*a.group()->complex(), a.group()->degree() + 1);
        RationalMatrix extended(b.rows(), b.cols() + 1);
        extended << b, diff.dense();
        CHECK(oracle::rank_q(extended) == oracle::rank_q(b));
    }
    else
        CHECK(diff.is_zero());
}

}  // namespace

TEST_CASE("zero class has norm zero", "[l1]")
{
    const CorpusEntry sphere = make_sphere(2);
    const HomologyClass zero = zero_class(homology(sphere.complex, 2));
    const NormReport r = rational_norm(zero);
    CHECK(r.value == 0);
    CHECK(r.optimal_cycle.is_zero());
    REQUIRE(r.dual);
    CHECK(verify_dual(*r.dual, zero));
    const NormReport i = integral_norm(zero);
    CHECK(i.interval.lower == 0);
    CHECK(i.interval.upper == 0);
    CHECK(i.interval.status == SearchStatus::exact);
}

TEST_CASE("sphere fundamental classes have norm n + 2", "[l1]")
{
    for (int n = 1; n <= 3; ++n)
    {
        const HomologyClass a = fundamental(make_sphere(n));
        const NormReport r = rational_norm(a);
        CHECK(r.value == n + 2);
        check_rational_report(a, r);
        const NormReport i = integral_norm(a);
        CHECK(i.interval.lower == n + 2);
        CHECK(i.interval.upper == n + 2);
        CHECK(i.interval.status == SearchStatus::exact);
    }
}

TEST_CASE("torus and surface fundamental classes", "[l1]")
{
    const HomologyClass t = fundamental(make_torus());
    CHECK(rational_norm(t).value == 2);
    const NormReport i = integral_norm(t);
    CHECK(i.interval.lower == 2);
    CHECK(i.interval.upper == 2);
    const CorpusEntry s = make_surface(2);
    CHECK(rational_norm(fundamental(s)).value == s.complex->cell_count(2));
    CHECK(rational_norm(fundamental(make_circle(3))).value == 3);
    CHECK(rational_norm(fundamental(make_torus(), "a")).value == 1);
}

TEST_CASE("corpus classes satisfy strong duality", "[l1][property]")
{
    for (const auto& a : corpus_classes())
        check_rational_report(a, rational_norm(a));
}

TEST_CASE("dual certificates", "[l1]")
{
    const CorpusEntry sphere = make_sphere(2);
    const HomologyClass a = fundamental(sphere);
    Chain phi = to_rational_chain(sphere.cycles.at("fundamental"));
    CHECK(pairing(phi, a.representative()) == 4);
    CHECK(verify_dual(DualCertificate{phi, Rational(4)}, a));
    Chain too_big = phi;
    too_big.add(0, Rational(1, 2) * phi[0]);
    CHECK_FALSE(verify_dual(DualCertificate{too_big, pairing(too_big, a.representative())}, a));
    CHECK_FALSE(verify_dual(DualCertificate{phi, Rational(3)}, a));

    const CorpusEntry torus = make_torus();
    // phi(a) = 1 on edges only; it does not vanish on boundaries
    CHECK_FALSE(verify_dual(DualCertificate{Chain(torus.complex, 1, {{0, Rational(1)}}), Rational(1)},
                            fundamental(torus, "a")));
    CHECK_THROWS_AS(verify_dual(DualCertificate{phi, Rational(4)}, fundamental(torus)), std::domain_error);
}

TEST_CASE("the rational norm is homogeneous", "[l1][property]")
{
    for (const auto& a : corpus_classes())
    {
        const Rational base = rational_norm(a).value;
        for (int d = -3; d <= 3; ++d)
            CHECK(rational_norm(scale_class(d, a)).value == Rational(std::abs(d)) * base);
    }
}

TEST_CASE("the rational norm is subadditive", "[l1][property]")
{
    std::mt19937_64 rng(8);
    for (const auto& entry : {make_torus(), make_surface(2), make_rp2()})
    {
        const GroupPtr h1 = homology(entry.complex, 1);
        for (int trial = 0; trial < 15; ++trial)
        {
            const HomologyClass a = random_class(h1, rng), b = random_class(h1, rng);
            CHECK(rational_norm(add_classes(a, b)).value <= rational_norm(a).value + rational_norm(b).value);
        }
    }
}

TEST_CASE("cover maps do not increase norms", "[l1][property]")
{
    for (int d = 1; d <= 3; ++d)
        for (const CoverEntry& cover : {circle_cover(d), torus_cover(d)})
        {
            const HomologyClass beta = fundamental(cover.source);
            const IntChain pushed = push_chain(cover.map, beta.representative());
            const HomologyClass image = class_of(homology(cover.map.target, pushed.degree()), pushed);
            CHECK(rational_norm(image).value <= rational_norm(beta).value);
            CHECK(rational_norm(image).value == rational_norm(beta).value);
        }
}

TEST_CASE("multiples of the tetrahedron class", "[l1]")
{
    const HomologyClass a = fundamental(make_sphere(2));
    for (int d = 1; d <= 5; ++d)
    {
        const NormReport r = integral_norm(scale_class(d, a));
        CHECK(r.interval.lower == 4 * d);
        CHECK(r.interval.upper == 4 * d);
        CHECK(r.interval.status == SearchStatus::exact);
    }
}

TEST_CASE("torsion classes", "[l1]")
{
    const HomologyClass alpha = fundamental(make_rp2(), "generator");
    CHECK(rational_norm(alpha).value == 0);
    const NormReport one = integral_norm(alpha);
    CHECK(one.interval.lower >= 1);
    CHECK(one.interval.upper == 1);
    const NormReport two = integral_norm(scale_class(2, alpha));
    CHECK(two.interval.lower == 0);
    CHECK(two.interval.upper == 0);
}

TEST_CASE("a too-small box is not mistaken for the global optimum", "[l1]")
{
    // 6 alpha on RP^2 is null-homologous, but its representative needs |u| = 3
    const CorpusEntry rp2 = make_rp2();
    const IntChain z = BigInt(6) * rp2.cycles.at("generator");
    const HomologyClass six = class_of(homology(rp2.complex, 1), z);
    IntegralOptions small{BigInt(1), 20000};
    const NormReport r = integral_norm(six, small);
    CHECK(r.interval.lower == 0);
    CHECK(r.interval.upper >= r.interval.lower);
    if (r.interval.upper > 0)
        CHECK(r.interval.status == SearchStatus::truncated);
    const NormReport wide = integral_norm(six, IntegralOptions{BigInt(3), 20000});
    CHECK(wide.interval.upper == 0);
    CHECK(wide.interval.status == SearchStatus::exact);
}

TEST_CASE("branch and bound matches box enumeration", "[l1][oracle]")
{
    std::mt19937_64 rng(77);
    std::vector<std::pair<ComplexPtr, int>> small;
    for (const auto& entry : standard_corpus())
        for (int n = 0; n < entry.complex->dims(); ++n)
            if (entry.complex->cell_count(n + 1) <= 6)
                small.emplace_back(entry.complex, n);
    REQUIRE(small.size() >= 5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const auto& [k, n] = small[trial % small.size()];
        const HomologyClass a = random_class(homology(k, n), rng);
        const NormReport r = integral_norm(a, IntegralOptions{BigInt(3), 200000});
        const BigInt brute = oracle::brute_force_integral_norm(a.representative(), 3);
        CHECK(r.box_complete);
        CHECK(r.interval.upper == brute);
        CHECK(r.interval.lower <= brute);
        CHECK(l1_norm_chain(r.optimal_cycle) == r.interval.upper);
        CHECK(classes_equal(class_of(a.group(), to_integer_chain(r.optimal_cycle)), a));
    }
}

TEST_CASE("norm sequences", "[l1]")
{
    const HomologyClass a = fundamental(make_sphere(2));
    const NormSequence seq = norm_sequence(a, 5);
    REQUIRE(seq.entries.size() == 5);
    for (int d = 1; d <= 5; ++d)
    {
        CHECK(seq.entries[d - 1].upper == 4 * d);
        CHECK(l1_norm_chain(seq.cycles[d - 1]) == 4 * d);
    }
    CHECK_FALSE(seq.bounded_subsequence_detected());
    CHECK(seq.stable_estimate == 4);

    const HomologyClass alpha = fundamental(make_rp2(), "generator");
    const NormSequence torsion = norm_sequence(alpha, 4);
    for (int d = 1; d <= 4; ++d)
    {
        if (d % 2 == 0)
        {
            CHECK(torsion.entries[d - 1].lower == 0);
            CHECK(torsion.entries[d - 1].upper == 0);
        }
        else
            CHECK(torsion.entries[d - 1].upper == torsion.entries[0].upper);
    }
    CHECK(torsion.bounded_subsequence_detected());
    CHECK(torsion.stable_estimate == 0);
    CHECK(torsion.stable_argmin == 2);

    const NormSequence zero = norm_sequence(zero_class(alpha.group()), 3);
    for (const auto& e : zero.entries)
        CHECK(e.upper == 0);
    CHECK_THROWS_AS(norm_sequence(a, 0), std::invalid_argument);
}

TEST_CASE("sequence sandwich bounds", "[l1][property]")
{
    for (const auto& a : corpus_classes())
    {
        const NormSequence seq = norm_sequence(a, 4);
        for (std::size_t i = 0; i < seq.entries.size(); ++i)
        {
            const Rational d(static_cast<long>(i + 1));
            const auto& e = seq.entries[i];
            CHECK(Rational(e.lower) >= d * seq.rational);
            CHECK(e.lower <= e.upper);
            CHECK(e.lower >= 0);
            CHECK(Rational(e.upper) / d >= seq.rational);
            CHECK(l1_norm_chain(seq.cycles[i]) == e.upper);
        }
        CHECK(seq.stable_estimate >= seq.rational);
    }
}

TEST_CASE("threaded sequences match sequential ones", "[l1]")
{
    const HomologyClass a = fundamental(make_torus());
    SequenceOptions serial, parallel;
    parallel.threads = 3;
    const NormSequence s1 = norm_sequence(a, 5, serial), s2 = norm_sequence(a, 5, parallel);
    for (std::size_t i = 0; i < s1.entries.size(); ++i)
    {
        CHECK(s1.entries[i].upper == s2.entries[i].upper);
        CHECK(s1.entries[i].lower == s2.entries[i].lower);
        CHECK(s1.cycles[i] == s2.cycles[i]);
    }
}

TEST_CASE("stable norm", "[l1]")
{
    const StableNorm s = stable_norm(fundamental(make_sphere(2)), 3);
    CHECK(s.estimate == 4);
    CHECK(s.rational == 4);
    const StableNorm t = stable_norm(fundamental(make_torus()), 4);
    CHECK(t.estimate == 2);
    const StableNorm r = stable_norm(fundamental(make_rp2(), "generator"), 4);
    CHECK(r.estimate == 0);
    CHECK(r.rational == 0);
}

TEST_CASE("optimal cycles are reproducible", "[l1]")
{
    for (const auto& a : corpus_classes())
    {
        CHECK(rational_norm(a).optimal_cycle == rational_norm(a).optimal_cycle);
        CHECK(integral_norm(a).optimal_cycle == integral_norm(a).optimal_cycle);
    }
}

TEST_CASE("degenerate-simplex probe", "[l1]")
{
    for (const auto& a : corpus_classes())
    {
        const NormReport r = rational_norm(a, RationalOptions{true});
        REQUIRE(r.degenerate_probe_value);
        CHECK(*r.degenerate_probe_value <= r.value);
        CHECK(*r.degenerate_probe_value == r.value);
    }
}
