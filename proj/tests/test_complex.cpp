#include <random>

#include <catch_amalgamated.hpp>

#include "l1top/corpus.hpp"

using namespace l1top;

namespace
{

ComplexPtr one_gon()
{
    return std::make_shared<const DeltaComplex>(std::vector<Index>{1, 1}, std::vector<DeltaComplex::FaceTable>{{{0, 0}}});
}

// Boundary of the 3-simplex on vertices 0..3, written out by hand.
// Edges: 01 02 03 12 13 23; triangles: 012 013 023 123.
ComplexPtr hand_tetrahedron()
{
    DeltaComplex::FaceTable edges{{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}};
    DeltaComplex::FaceTable triangles{{3, 1, 0}, {4, 2, 0}, {5, 2, 1}, {5, 4, 3}};
    return std::make_shared<const DeltaComplex>(std::vector<Index>{4, 6, 4},
                                                std::vector<DeltaComplex::FaceTable>{edges, triangles});
}

Chain random_chain(const ComplexPtr& k, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    Chain c(k, n);
    for (Index cell = 0; cell < k->cell_count(n); ++cell)
        c.add(cell, Rational(coeff(rng), 1 + (coeff(rng) + 3) % 3));
    return c;
}

}  // namespace

TEST_CASE("valid complexes produce empty reports", "[complex]")
{
    CHECK(validate_complex(*hand_tetrahedron()).ok());
    CHECK(validate_complex(*one_gon()).ok());
    for (const auto& entry : standard_corpus())
        CHECK(validate_complex(*entry.complex).ok());
}

TEST_CASE("a face pointing at a missing cell is reported", "[complex]")
{
    // face(e, 0) names vertex 1, but only vertex 0 exists
    DeltaComplex bad({1, 1}, {{{1, 0}}});
    const auto report = validate_complex(bad);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::dangling_face);
    CHECK(report.violations[0].dim == 1);
    CHECK(report.violations[0].cell == 0);
}

TEST_CASE("wrong face arity is malformed", "[complex]")
{
    DeltaComplex bad({1, 1}, {{{0}}});
    const auto report = validate_complex(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].kind == Violation::Kind::malformed_table);
}

TEST_CASE("every single-entry mutation of a corpus complex is rejected or still valid", "[complex][fuzz]")
{
    // A mutation either breaks an identity or yields another valid complex;
    // mutations that point out of range must always be caught.
    Index rejected = 0, total = 0;
    for (const auto& entry : standard_corpus())
    {
        const DeltaComplex& k = *entry.complex;
        for (int n = 1; n <= k.dims(); ++n)
            for (Index c = 0; c < k.cell_count(n); ++c)
                for (int i = 0; i <= n; ++i)
                {
                    std::vector<DeltaComplex::FaceTable> faces;
                    for (int m = 1; m <= k.dims(); ++m)
                        faces.push_back(k.face_table(m));
                    faces[n - 1][c][i] = k.cell_count(n - 1);
                    CHECK_FALSE(validate_complex(DeltaComplex(k.cell_counts(), faces)).ok());
                    ++total;
                    if (k.cell_count(n - 1) > 1)
                    {
                        faces[n - 1][c][i] = (k.face(n, c, i) + 1) % k.cell_count(n - 1);
                        rejected += validate_complex(DeltaComplex(k.cell_counts(), faces)).ok() ? 0 : 1;
                    }
                }
    }
    CHECK(total > 0);
    CHECK(rejected > 0);
}

TEST_CASE("an in-range mutation of the tetrahedron breaks an identity", "[complex][fuzz]")
{
    const auto k = hand_tetrahedron();
    for (int n = 1; n <= 2; ++n)
        for (Index c = 0; c < k->cell_count(n); ++c)
            for (int i = 0; i <= n; ++i)
                for (Index other = 0; other < k->cell_count(n - 1); ++other)
                {
                    if (other == k->face(n, c, i))
                        continue;
                    std::vector<DeltaComplex::FaceTable> faces{k->face_table(1), k->face_table(2)};
                    faces[n - 1][c][i] = other;
                    CHECK_FALSE(validate_complex(DeltaComplex(k->cell_counts(), faces)).ok());
                }
}

TEST_CASE("boundary of a degree-0 chain is a domain error", "[complex]")
{
    CHECK_THROWS_AS(boundary(Chain(one_gon(), 0)), std::domain_error);
}

TEST_CASE("the loop edge has zero boundary", "[complex]")
{
    const auto k = one_gon();
    CHECK(boundary(Chain(k, 1, {{0, Rational(1)}})).is_zero());
}

TEST_CASE("hand-expanded boundary of the tetrahedron cancels", "[complex]")
{
    const auto k = hand_tetrahedron();
    // d[123] - d[023] + d[013] - d[012]
    const IntChain z(k, 2, {{3, 1}, {2, -1}, {1, 1}, {0, -1}});
    CHECK(boundary(z).is_zero());
    CHECK(l1_norm_chain(z) == 4);
    // d[012] = [12] - [02] + [01]
    const IntChain face(k, 2, {{0, 1}});
    CHECK(boundary(face) == IntChain(k, 1, {{3, 1}, {1, -1}, {0, 1}}));
    CHECK(make_sphere(2).complex->cell_counts() == k->cell_counts());
}

TEST_CASE("boundary of a boundary vanishes", "[complex][property]")
{
    std::mt19937_64 rng(11);
    for (const auto& entry : standard_corpus())
        for (int n = 2; n <= entry.complex->dims(); ++n)
            for (int trial = 0; trial < 10; ++trial)
                CHECK(boundary(boundary(random_chain(entry.complex, n, rng))).is_zero());
}

TEST_CASE("chain norm and arithmetic", "[complex]")
{
    const auto k = make_sphere(2).complex;
    CHECK(l1_norm_chain(Chain(k, 2)) == 0);
    const Chain c(k, 2, {{1, Rational(3, 2)}, {2, Rational(-1, 2)}});
    CHECK(l1_norm_chain(c) == 2);
    CHECK((c - c).is_zero());
    CHECK((Rational(2) * c)[1] == 3);
    CHECK_THROWS_AS(Chain(k, 2).add(4, 1), std::out_of_range);
    CHECK_THROWS_AS(c + Chain(k, 1), std::domain_error);
    CHECK_THROWS_AS(to_integer_chain(c), std::domain_error);
    CHECK(to_rational_chain(to_integer_chain(Rational(2) * c)) == Rational(2) * c);
}

TEST_CASE("identity pushforward is the identity", "[complex]")
{
    std::mt19937_64 rng(3);
    for (const auto& entry : standard_corpus())
    {
        const CellMap id = identity_map(entry.complex);
        CHECK(validate_cell_map(id).ok());
        for (int n = 0; n <= entry.complex->dims(); ++n)
        {
            const Chain c = random_chain(entry.complex, n, rng);
            CHECK(push_chain(id, c) == c);
        }
    }
}

TEST_CASE("cover maps push fundamental cycles to multiples", "[complex]")
{
    for (int d = 1; d <= 5; ++d)
    {
        const CoverEntry cover = circle_cover(d);
        CHECK(validate_cell_map(cover.map).ok());
        const IntChain pushed = push_chain(cover.map, cover.source.cycles.at("fundamental"));
        CHECK(pushed == IntChain(cover.map.target, 1, {{0, d}}));
    }
}

TEST_CASE("pushforward is a chain map and does not increase norms", "[complex][property]")
{
    std::mt19937_64 rng(5);
    for (int d = 1; d <= 4; ++d)
    {
        const CoverEntry cover = torus_cover(d);
        CHECK(validate_cell_map(cover.map).ok());
        for (int trial = 0; trial < 20; ++trial)
            for (int n = 1; n <= 2; ++n)
            {
                const Chain c = random_chain(cover.source.complex, n, rng);
                CHECK(boundary(push_chain(cover.map, c)) == push_chain(cover.map, boundary(c)));
                CHECK(l1_norm_chain(push_chain(cover.map, c)) <= l1_norm_chain(c));
            }
    }
}

TEST_CASE("a map that breaks face commutation is reported", "[complex]")
{
    const CoverEntry cover = torus_cover(2);
    CellMap broken = cover.map;
    broken.assign[2][1] = 0;
    CHECK_FALSE(validate_cell_map(broken).ok());
    CellMap short_map = cover.map;
    short_map.assign[1].pop_back();
    CHECK_FALSE(validate_cell_map(short_map).ok());
    CHECK_THROWS_AS(push_chain(cover.map, IntChain(make_torus().complex, 1)), std::domain_error);
}

TEST_CASE("faces by vertex subsets", "[complex]")
{
    const auto k = hand_tetrahedron();
    // triangle 123 (cell 3); keeping its vertices 0 and 2 gives the edge 13
    CHECK(k->face_by_vertices(2, 3, 0b101) == std::pair<int, Index>{1, 4});
    CHECK(k->face_by_vertices(2, 3, 0b111) == std::pair<int, Index>{2, 3});
    CHECK(k->face_by_vertices(2, 3, 0b100) == std::pair<int, Index>{0, 3});
    CHECK(k->face_by_vertices(2, 0, 0b001) == std::pair<int, Index>{0, 0});
}
