#include <catch_amalgamated.hpp>

#include "l1top/corpus.hpp"
#include "l1top/homology.hpp"
#include "l1top/l1_norm.hpp"

using namespace l1top;

TEST_CASE("corpus entries are valid and their cycles close", "[corpus]")
{
    for (const auto& entry : standard_corpus())
    {
        INFO(entry.name);
        CHECK(validate_complex(*entry.complex).ok());
        CHECK_FALSE(entry.cycles.empty());
        for (const auto& [name, z] : entry.cycles)
            CHECK(is_cycle(z));
        CHECK(static_cast<int>(entry.documented.size()) == entry.complex->dims() + 1);
    }
}

TEST_CASE("spheres", "[corpus]")
{
    CHECK(make_sphere(1).complex->cell_counts() == std::vector<Index>{3, 3});
    CHECK(make_sphere(2).complex->cell_counts() == std::vector<Index>{4, 6, 4});
    CHECK(make_sphere(3).complex->cell_counts() == std::vector<Index>{5, 10, 10, 5});
    CHECK(make_sphere(4).complex->cell_counts() == std::vector<Index>{6, 15, 20, 15, 6});
    for (int n = 1; n <= 4; ++n)
        CHECK(homology(make_sphere(n).complex, n)->betti() == 1);
    CHECK_THROWS_AS(make_sphere(0), std::invalid_argument);
    CHECK_THROWS_AS(make_sphere(5), std::invalid_argument);
}

TEST_CASE("circles and their covers", "[corpus]")
{
    CHECK(make_circle(1).complex->cell_counts() == std::vector<Index>{1, 1});
    const CoverEntry one = circle_cover(1);
    CHECK(one.map.assign == identity_map(one.map.target).assign);
    const CoverEntry three = circle_cover(3);
    CHECK(push_chain(three.map, three.source.cycles.at("fundamental")) == IntChain(three.map.target, 1, {{0, 3}}));
    CHECK_THROWS_AS(make_circle(0), std::invalid_argument);
}

TEST_CASE("torus and its covers", "[corpus]")
{
    const CorpusEntry torus = make_torus();
    CHECK(torus.complex->cell_counts() == std::vector<Index>{1, 3, 2});
    const GroupPtr h2 = homology(torus.complex, 2);
    const HomologyClass t = class_of(h2, torus.cycles.at("fundamental"));
    for (int d = 1; d <= 4; ++d)
    {
        const CoverEntry cover = torus_cover(d);
        CHECK(cover.source.complex->cell_counts() == std::vector<Index>{d, 3 * d, 2 * d});
        CHECK(validate_cell_map(cover.map).ok());
        const IntChain pushed = push_chain(cover.map, cover.source.cycles.at("fundamental"));
        CHECK(classes_equal(class_of(h2, pushed), scale_class(d, t)));
        const IntChain& z = cover.source.cycles.at("fundamental");
        CHECK(rational_norm(class_of(homology(cover.source.complex, 2), z)).value == 2 * d);
    }
}

TEST_CASE("projective plane", "[corpus]")
{
    const CorpusEntry rp2 = make_rp2();
    CHECK(rp2.complex->cell_counts() == std::vector<Index>{2, 3, 2});
    const HomologyClass g = class_of(homology(rp2.complex, 1), rp2.cycles.at("generator"));
    CHECK(*torsion_order(g) == 2);
    CHECK(homology(rp2.complex, 2)->betti() == 0);
    const IntChain twice = BigInt(2) * rp2.cycles.at("generator");
    const auto u = is_boundary(twice);
    REQUIRE(u);
    CHECK(boundary(*u) == twice);
}

TEST_CASE("surfaces", "[corpus]")
{
    const CorpusEntry s1 = make_surface(1);
    CHECK(s1.complex->cell_counts() == std::vector<Index>{1, 3, 2});
    CHECK(homology(s1.complex, 1)->betti() == 2);
    for (int g = 1; g <= 4; ++g)
    {
        const CorpusEntry s = make_surface(g);
        INFO("genus " << g);
        CHECK(s.complex->cell_count(2) == 4 * g - 2);
        CHECK(homology(s.complex, 1)->betti() == 2 * g);
        CHECK(homology(s.complex, 2)->betti() == 1);
        const IntChain& z = s.cycles.at("fundamental");
        CHECK(rational_norm(class_of(homology(s.complex, 2), z)).value == 4 * g - 2);
    }
    CHECK(*make_surface(0).complex == *make_sphere(2).complex);
    CHECK_THROWS_AS(make_surface(-1), std::invalid_argument);
}
