#include "l1top/comb_types.hpp"

#include <algorithm>
#include <bit>

#include <boost/pending/disjoint_sets.hpp>

namespace l1top
{

CombinatorialType::CombinatorialType(Index k, int n, std::vector<std::pair<FaceSlot, FaceSlot>> pairs)
    : k_(k), n_(n)
{
    if (k < 0 || n < 0 || n > 20)
        throw std::invalid_argument("combinatorial type sizes out of range");
    for (auto [a, b] : pairs)
    {
        for (const FaceSlot& s : {a, b})
            if (s.slot < 0 || s.slot >= k || s.face < 0 || s.face > n)
                throw std::invalid_argument("combinatorial type index (" + std::to_string(s.slot) + ", "
                                            + std::to_string(s.face) + ") out of range");
        if (a == b)
            continue;
        if (b < a)
            std::swap(a, b);
        pairs_.emplace_back(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

IntChain UnitChain::to_chain() const
{
    IntChain c(complex, degree);
    for (std::size_t j = 0; j < cells.size(); ++j)
        c.add(cells[j], BigInt(signs[j]));
    return c;
}

UnitChain expand_to_unit(const IntChain& c)
{
    UnitChain out{c.complex(), c.degree(), {}, {}};
    for (const auto& [cell, value] : c.coeffs())
    {
        const int sign = value > 0 ? 1 : -1;
        for (BigInt i = 0; i < abs(value); ++i)
        {
            out.cells.push_back(cell);
            out.signs.push_back(sign);
        }
    }
    return out;
}

UnitChain as_unit_chain(const IntChain& c)
{
    UnitChain out{c.complex(), c.degree(), {}, {}};
    for (const auto& [cell, value] : c.coeffs())
    {
        if (value != 1 && value != -1)
            throw std::domain_error("coefficient " + to_string(value) + " on cell " + std::to_string(cell)
                                    + " is not a unit; expand the chain first");
        out.cells.push_back(cell);
        out.signs.push_back(value > 0 ? 1 : -1);
    }
    return out;
}

std::pair<CombinatorialType, SignVector> extract_type(const UnitChain& c)
{
    const int n = c.degree;
    const Index k = c.k();
    std::vector<std::pair<FaceSlot, FaceSlot>> pairs;
    if (n >= 1)
    {
        std::vector<FaceSlot> slots;
        for (Index j = 0; j < k; ++j)
            for (int l = 0; l <= n; ++l)
                slots.push_back({j, l});
        for (std::size_t a = 0; a < slots.size(); ++a)
            for (std::size_t b = a + 1; b < slots.size(); ++b)
            {
                const Index fa = c.complex->face(n, c.cells[slots[a].slot], slots[a].face);
                const Index fb = c.complex->face(n, c.cells[slots[b].slot], slots[b].face);
                if (fa == fb)
                    pairs.emplace_back(slots[a], slots[b]);
            }
    }
    return {CombinatorialType(k, n, std::move(pairs)), c.signs};
}

std::pair<CombinatorialType, SignVector> extract_type(const IntChain& c)
{
    return extract_type(as_unit_chain(c));
}

namespace
{

// Vertex mask of Delta^{n-1} carried into Delta^n by the l-th face inclusion.
unsigned face_inclusion(unsigned mask, int l)
{
    const unsigned low = mask & ((1u << l) - 1);
    const unsigned high = mask >> l;
    return low | (high << (l + 1));
}

unsigned drop_ith_vertex(unsigned mask, int i)
{
    unsigned m = mask;
    for (int seen = 0; m; ++seen)
    {
        unsigned bit = m & -m;
        if (seen == i)
            return mask & ~bit;
        m &= m - 1;
    }
    throw std::logic_error("vertex index out of range");
}

}  // namespace

GluedComplex realize(const CombinatorialType& t)
{
    const Index k = t.k();
    const int n = t.n();
    const unsigned subsets = 1u << (n + 1);
    const std::size_t total = static_cast<std::size_t>(k) * subsets;
    auto key = [subsets](Index j, unsigned mask) { return static_cast<std::size_t>(j) * subsets + mask; };

    boost::disjoint_sets_with_storage<> classes(total);
    for (std::size_t i = 0; i < total; ++i)
        classes.make_set(i);
    const unsigned face_subsets = 1u << n;
    for (const auto& [a, b] : t.pairs())
        for (unsigned sub = 1; sub < face_subsets; ++sub)
            classes.union_set(key(a.slot, face_inclusion(sub, a.face)), key(b.slot, face_inclusion(sub, b.face)));

    GluedComplex y;
    y.type = t;
    y.cell_origin.resize(n + 1);
    std::vector<Index> cell_id(total, -1);
    std::vector<Index> root_id(total, -1);
    for (Index j = 0; j < k; ++j)
        for (unsigned mask = 1; mask < subsets; ++mask)
        {
            const std::size_t root = classes.find_set(key(j, mask));
            const int dim = std::popcount(mask) - 1;
            if (root_id[root] < 0)
            {
                root_id[root] = static_cast<Index>(y.cell_origin[dim].size());
                y.cell_origin[dim].emplace_back();
            }
            cell_id[key(j, mask)] = root_id[root];
            y.cell_origin[dim][root_id[root]].push_back({j, mask});
        }

    std::vector<Index> counts(n + 1);
    for (int q = 0; q <= n; ++q)
        counts[q] = static_cast<Index>(y.cell_origin[q].size());
    std::vector<DeltaComplex::FaceTable> faces(n);
    for (int q = 1; q <= n; ++q)
    {
        auto& table = faces[q - 1];
        for (const auto& members : y.cell_origin[q])
        {
            std::vector<Index> row(q + 1);
            for (int i = 0; i <= q; ++i)
            {
                const auto& first = members.front();
                row[i] = cell_id[key(first.slot, drop_ith_vertex(first.vertices, i))];
                for (const auto& other : members)
                    if (cell_id[key(other.slot, drop_ith_vertex(other.vertices, i))] != row[i])
                        throw std::logic_error("realize: face maps are not well defined on a class");
            }
            table.push_back(std::move(row));
        }
    }
    y.complex = std::make_shared<const DeltaComplex>(std::move(counts), std::move(faces));
    for (Index j = 0; j < k; ++j)
        y.tau.push_back(cell_id[key(j, subsets - 1)]);
    return y;
}

CanonicalChain canonical_chain(const GluedComplex& y, const SignVector& eps)
{
    if (static_cast<Index>(eps.size()) != y.type.k())
        throw std::invalid_argument("sign vector length does not match k");
    CanonicalChain out{IntChain(y.complex, y.type.n()), false};
    for (std::size_t j = 0; j < eps.size(); ++j)
    {
        if (eps[j] < -1 || eps[j] > 1)
            throw std::invalid_argument("sign vector entries must lie in {-1, 0, 1}");
        out.chain.add(y.tau[j], BigInt(eps[j]));
    }
    out.is_cycle = is_cycle(out.chain);
    return out;
}

CellMap induced_map(const UnitChain& c, const GluedComplex& y)
{
    const int n = y.type.n();
    if (c.k() != y.type.k() || c.degree != n)
        throw std::invalid_argument("induced_map: chain does not match the combinatorial type");
    CellMap f{y.complex, c.complex, std::vector<std::vector<Index>>(n + 1)};
    for (int q = 0; q <= n; ++q)
        for (const auto& members : y.cell_origin[q])
        {
            Index image = -1;
            for (const auto& origin : members)
            {
                const Index cell = c.complex->face_by_vertices(n, c.cells[origin.slot], origin.vertices).second;
                if (image >= 0 && cell != image)
                    throw std::logic_error("induced_map: origin class maps to distinct cells");
                image = cell;
            }
            f.assign[q].push_back(image);
        }
    return f;
}

CombinatorialType random_type(Index k, int n, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<FaceSlot, FaceSlot>> pairs;
    for (Index j = 0; j < k; ++j)
        for (int l = 0; l <= n; ++l)
            for (Index j2 = 0; j2 < k; ++j2)
                for (int l2 = 0; l2 <= n; ++l2)
                    if (coin(rng))
                        pairs.push_back({{j, l}, {j2, l2}});
    return CombinatorialType(k, n, std::move(pairs));
}

}  // namespace l1top
