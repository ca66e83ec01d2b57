#include "l1top/corpus.hpp"

#include <algorithm>
#include <bit>

#include <boost/pending/disjoint_sets.hpp>

namespace l1top
{

namespace
{

ComplexPtr build(std::vector<Index> counts, std::vector<DeltaComplex::FaceTable> faces)
{
    auto complex = std::make_shared<const DeltaComplex>(std::move(counts), std::move(faces));
    const ValidationReport report = validate_complex(*complex);
    if (!report.ok())
        throw std::logic_error("corpus complex failed validation: " + report.violations.front().message);
    return complex;
}

IntChain unit_chain(const ComplexPtr& complex, int degree, const std::vector<std::pair<Index, int>>& terms)
{
    IntChain c(complex, degree);
    for (auto [cell, coeff] : terms)
        c.add(cell, BigInt(coeff));
    return c;
}

void require_cycle(const IntChain& c, const std::string& name)
{
    if (!is_cycle(c))
        throw std::logic_error(name + ": distinguished chain is not a cycle");
}

// Spheres and surfaces: H_0 = Z, H_top = Z, middle degrees as given.
std::vector<HomologySignature> closed_surface_like(int top, Index middle_betti)
{
    std::vector<HomologySignature> out;
    for (int q = 0; q <= top; ++q)
    {
        Index b = (q == 0 || q == top) ? 1 : (q == 1 ? middle_betti : 0);
        out.push_back({q, b, {}});
    }
    return out;
}

}  // namespace

CorpusEntry make_sphere(int n)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("make_sphere: n must lie in 1..4");
    const int vertices = n + 2;
    const unsigned all = (1u << vertices) - 1;

    // Cells of dimension q are the (q+1)-subsets of the vertices, except the
    // full simplex; ordered by increasing mask.
    std::vector<std::vector<unsigned>> cells(n + 1);
    for (unsigned mask = 1; mask < all; ++mask)
        cells[std::popcount(mask) - 1].push_back(mask);
    auto id_of = [&](int q, unsigned mask) {
        return static_cast<Index>(std::lower_bound(cells[q].begin(), cells[q].end(), mask) - cells[q].begin());
    };

    std::vector<Index> counts(n + 1);
    std::vector<DeltaComplex::FaceTable> faces(n);
    for (int q = 0; q <= n; ++q)
        counts[q] = static_cast<Index>(cells[q].size());
    for (int q = 1; q <= n; ++q)
        for (unsigned mask : cells[q])
        {
            std::vector<Index> row;
            for (unsigned rest = mask; rest; rest &= rest - 1)
                row.push_back(id_of(q - 1, mask & ~(rest & -rest)));
            faces[q - 1].push_back(std::move(row));
        }

    CorpusEntry e{"sphere" + std::to_string(n), build(std::move(counts), std::move(faces)), n, {}, {}};
    std::vector<std::pair<Index, int>> terms;
    for (int v = 0; v < vertices; ++v)
        terms.emplace_back(id_of(n, all & ~(1u << v)), v % 2 == 0 ? 1 : -1);
    e.cycles.emplace("fundamental", unit_chain(e.complex, n, terms));
    require_cycle(e.cycles.at("fundamental"), e.name);
    e.documented = closed_surface_like(n, n == 1 ? 1 : 0);
    return e;
}

CorpusEntry make_circle(int d)
{
    if (d < 1)
        throw std::invalid_argument("make_circle: d must be positive");
    DeltaComplex::FaceTable edges;
    for (int i = 0; i < d; ++i)
        edges.push_back({(i + 1) % d, i});
    CorpusEntry e{"circle" + std::to_string(d), build({d, d}, {edges}), 1, {}, {}};
    std::vector<std::pair<Index, int>> terms;
    for (int i = 0; i < d; ++i)
        terms.emplace_back(i, 1);
    e.cycles.emplace("fundamental", unit_chain(e.complex, 1, terms));
    require_cycle(e.cycles.at("fundamental"), e.name);
    e.documented = {{0, 1, {}}, {1, 1, {}}};
    return e;
}

CoverEntry circle_cover(int d)
{
    CorpusEntry source = make_circle(d);
    CorpusEntry base = make_circle(1);
    CellMap f{source.complex, base.complex, {std::vector<Index>(d, 0), std::vector<Index>(d, 0)}};
    return {std::move(source), std::move(f), d};
}

namespace
{

// d copies of the one-vertex torus square glued cyclically along a.
ComplexPtr torus_complex(int d)
{
    DeltaComplex::FaceTable edges, triangles;
    for (int i = 0; i < d; ++i)
    {
        const Index next = (i + 1) % d;
        edges.push_back({next, i});  // a_i
        edges.push_back({i, i});     // b_i
        edges.push_back({next, i});  // c_i
    }
    for (int i = 0; i < d; ++i)
    {
        const Index a = 3 * i, b = 3 * i + 1, c = 3 * i + 2;
        const Index b_next = 3 * ((i + 1) % d) + 1;
        triangles.push_back({b_next, c, a});  // lower: (i,0) (i+1,0) (i+1,1)
        triangles.push_back({a, c, b});       // upper: (i,0) (i,1) (i+1,1)
    }
    return build({d, 3 * d, 2 * d}, {edges, triangles});
}

}  // namespace

CorpusEntry make_torus()
{
    CorpusEntry e{"torus", torus_complex(1), 2, {}, {}};
    e.cycles.emplace("fundamental", unit_chain(e.complex, 2, {{0, 1}, {1, -1}}));
    e.cycles.emplace("a", unit_chain(e.complex, 1, {{0, 1}}));
    e.cycles.emplace("b", unit_chain(e.complex, 1, {{1, 1}}));
    for (const auto& [name, c] : e.cycles)
        require_cycle(c, e.name + "/" + name);
    e.documented = closed_surface_like(2, 2);
    return e;
}

CoverEntry torus_cover(int d)
{
    if (d < 1)
        throw std::invalid_argument("torus_cover: d must be positive");
    CorpusEntry source{"torus_cover" + std::to_string(d), torus_complex(d), 2, {}, {}};
    std::vector<std::pair<Index, int>> terms;
    for (int i = 0; i < d; ++i)
    {
        terms.emplace_back(2 * i, 1);
        terms.emplace_back(2 * i + 1, -1);
    }
    source.cycles.emplace("fundamental", unit_chain(source.complex, 2, terms));
    require_cycle(source.cycles.at("fundamental"), source.name);
    source.documented = closed_surface_like(2, 2);

    CorpusEntry base = make_torus();
    CellMap f{source.complex, base.complex, std::vector<std::vector<Index>>(3)};
    for (int i = 0; i < d; ++i)
    {
        f.assign[0].push_back(0);
        for (Index edge : {0, 1, 2})
            f.assign[1].push_back(edge);
        f.assign[2].push_back(0);
        f.assign[2].push_back(1);
    }
    return {std::move(source), std::move(f), d};
}

CorpusEntry make_rp2()
{
    // Square with antipodal boundary identification; v = (0,0) ~ (1,1),
    // w = (1,0) ~ (0,1); a bottom/top, b left/right, c the diagonal.
    DeltaComplex::FaceTable edges{{1, 0}, {1, 0}, {0, 0}};
    DeltaComplex::FaceTable triangles{{1, 0, 2}, {0, 1, 2}};
    CorpusEntry e{"rp2", build({2, 3, 2}, {edges, triangles}), 2, {}, {}};
    e.cycles.emplace("generator", unit_chain(e.complex, 1, {{2, 1}}));
    require_cycle(e.cycles.at("generator"), e.name);
    e.documented = {{0, 1, {}}, {1, 0, {2}}, {2, 0, {}}};
    return e;
}

CorpusEntry make_surface(int g)
{
    if (g < 0)
        throw std::invalid_argument("make_surface: genus must be nonnegative");
    if (g == 0)
    {
        CorpusEntry e = make_sphere(2);
        e.name = "surface0";
        return e;
    }
    const int sides = 4 * g;

    // Boundary position s runs from polygon vertex p_s to p_{s+1}.
    struct Side
    {
        Index label;
        bool forward;
    };
    std::vector<Side> word;
    for (int m = 0; m < g; ++m)
    {
        word.push_back({2 * m, true});
        word.push_back({2 * m + 1, true});
        word.push_back({2 * m, false});
        word.push_back({2 * m + 1, false});
    }
    auto tail = [&](int s) { return word[s].forward ? s : (s + 1) % sides; };
    auto head = [&](int s) { return word[s].forward ? (s + 1) % sides : s; };

    boost::disjoint_sets_with_storage<> corners(sides);
    for (int s = 0; s < sides; ++s)
        corners.make_set(s);
    for (int s = 0; s < sides; ++s)
        for (int t = s + 1; t < sides; ++t)
            if (word[s].label == word[t].label)
            {
                corners.union_set(tail(s), tail(t));
                corners.union_set(head(s), head(t));
            }
    std::vector<Index> vertex_of(sides, -1), root_id(sides, -1);
    Index vertex_count = 0;
    for (int p = 0; p < sides; ++p)
    {
        const auto root = corners.find_set(p);
        if (root_id[root] < 0)
            root_id[root] = vertex_count++;
        vertex_of[p] = root_id[root];
    }

    // Edges: the 2g labels, then diagonals p_0 -> p_k for k = 2..4g-2.
    DeltaComplex::FaceTable edges(2 * g);
    for (int s = 0; s < sides; ++s)
        edges[word[s].label] = {vertex_of[head(s)], vertex_of[tail(s)]};
    auto diagonal = [&](int k) { return static_cast<Index>(2 * g + (k - 2)); };
    for (int k = 2; k <= sides - 2; ++k)
        edges.push_back({vertex_of[k], vertex_of[0]});

    DeltaComplex::FaceTable triangles;
    std::vector<std::pair<Index, int>> terms;
    for (int k = 1; k <= sides - 2; ++k)
    {
        const Index to_k = k == 1 ? word[0].label : diagonal(k);
        const Index to_next = k + 1 == sides - 1 ? word[sides - 1].label : diagonal(k + 1);
        const Index side = word[k].label;
        const Index id = static_cast<Index>(triangles.size());
        if (word[k].forward)
        {
            triangles.push_back({side, to_next, to_k});  // (p0, p_k, p_{k+1})
            terms.emplace_back(id, 1);
        }
        else
        {
            triangles.push_back({side, to_k, to_next});  // (p0, p_{k+1}, p_k)
            terms.emplace_back(id, -1);
        }
    }

    const Index edge_count = static_cast<Index>(edges.size());
    const Index triangle_count = static_cast<Index>(triangles.size());
    CorpusEntry e{"surface" + std::to_string(g),
                  build({vertex_count, edge_count, triangle_count}, {edges, triangles}), 2, {}, {}};
    e.cycles.emplace("fundamental", unit_chain(e.complex, 2, terms));
    require_cycle(e.cycles.at("fundamental"), e.name);
    e.documented = closed_surface_like(2, 2 * g);
    return e;
}

std::vector<CorpusEntry> standard_corpus()
{
    return {make_sphere(1), make_sphere(2), make_sphere(3), make_circle(1), make_circle(3),
            make_torus(),   make_rp2(),     make_surface(2)};
}

}  // namespace l1top
