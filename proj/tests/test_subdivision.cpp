#include <random>

#include <catch_amalgamated.hpp>

#include "l1top/corpus.hpp"
#include "oracles.hpp"

using namespace l1top;

namespace
{

ComplexPtr triangle()
{
    DeltaComplex::FaceTable edges{{1, 0}, {2, 0}, {2, 1}};
    return std::make_shared<const DeltaComplex>(std::vector<Index>{3, 3, 1},
                                                std::vector<DeltaComplex::FaceTable>{edges, {{2, 1, 0}}});
}

IntChain random_int_chain(const ComplexPtr& k, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-2, 2);
    IntChain c(k, n);
    for (Index cell = 0; cell < k->cell_count(n); ++cell)
        c.add(cell, coeff(rng));
    return c;
}

}  // namespace

TEST_CASE("subdividing the loop gives a 2-gon", "[subdivision]")
{
    const CorpusEntry circle = make_circle(1);
    const Subdivision sd = barycentric_subdivide(circle.complex);
    CHECK(sd.complex->cell_counts() == std::vector<Index>{2, 2});
    CHECK(validate_complex(*sd.complex).ok());
}

TEST_CASE("subdividing a triangle gives 7 vertices, 12 edges and 6 triangles", "[subdivision]")
{
    const Subdivision sd = barycentric_subdivide(triangle());
    CHECK(sd.complex->cell_counts() == std::vector<Index>{7, 12, 6});
    CHECK(validate_complex(*sd.complex).ok());
    CHECK(oracle::betti(*sd.complex, 0) == 1);
    CHECK(oracle::betti(*sd.complex, 1) == 0);
    CHECK(oracle::betti(*sd.complex, 2) == 0);
}

TEST_CASE("subdivisions of corpus complexes are valid and keep homology", "[subdivision]")
{
    for (const auto& entry : {make_sphere(1), make_sphere(2), make_torus(), make_rp2(), make_circle(3)})
    {
        const Subdivision sd = barycentric_subdivide(entry.complex);
        REQUIRE(validate_complex(*sd.complex).ok());
        for (int n = 0; n <= entry.complex->dims(); ++n)
        {
            CHECK(oracle::betti(*sd.complex, n) == oracle::betti(*entry.complex, n));
            for (long p : {2L, 3L})
                CHECK(oracle::torsion_divisible_by(*sd.complex, n, p)
                      == oracle::torsion_divisible_by(*entry.complex, n, p));
        }
    }
}

TEST_CASE("subdivide and project are chain maps", "[subdivision][property]")
{
    std::mt19937_64 rng(17);
    for (const auto& entry : {make_sphere(2), make_torus(), make_rp2(), make_surface(2)})
    {
        const Subdivision sd = barycentric_subdivide(entry.complex);
        for (int trial = 0; trial < 10; ++trial)
            for (int n = 1; n <= entry.complex->dims(); ++n)
            {
                const IntChain c = random_int_chain(entry.complex, n, rng);
                CHECK(boundary(sd.subdivide(c)) == sd.subdivide(boundary(c)));
                const IntChain e = random_int_chain(sd.complex, n, rng);
                CHECK(boundary(sd.project(e)) == sd.project(boundary(e)));
            }
    }
}

TEST_CASE("projecting a subdivided chain recovers it", "[subdivision][property]")
{
    std::mt19937_64 rng(19);
    for (const auto& entry : standard_corpus())
    {
        const Subdivision sd = barycentric_subdivide(entry.complex);
        for (int n = 0; n <= entry.complex->dims(); ++n)
        {
            const IntChain c = random_int_chain(entry.complex, n, rng);
            CHECK(sd.project(sd.subdivide(c)) == c);
            const Chain r = to_rational_chain(c);
            CHECK(sd.project(sd.subdivide(r)) == r);
        }
    }
}

TEST_CASE("the subdivided fundamental cycle is a cycle with (n+1)! times the cells", "[subdivision]")
{
    const CorpusEntry sphere = make_sphere(2);
    const Subdivision sd = barycentric_subdivide(sphere.complex);
    const IntChain z = sd.subdivide(sphere.cycles.at("fundamental"));
    CHECK(is_cycle(z));
    CHECK(l1_norm_chain(z) == 24);
}

TEST_CASE("chains on the wrong complex are rejected", "[subdivision]")
{
    const Subdivision sd = barycentric_subdivide(make_torus().complex);
    CHECK_THROWS_AS(sd.subdivide(IntChain(make_rp2().complex, 1)), std::domain_error);
    CHECK_THROWS_AS(sd.project(IntChain(make_torus().complex, 1)), std::domain_error);
}
