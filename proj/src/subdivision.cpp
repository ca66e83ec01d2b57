#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "l1top/complex.hpp"

namespace l1top
{

namespace
{

/// Packs the bits of `mask` selected by `within` into the low positions.
unsigned compress(unsigned mask, unsigned within)
{
    unsigned out = 0;
    int pos = 0;
    for (int b = 0; within >> b; ++b)
    {
        if (!(within & (1u << b)))
            continue;
        if (mask & (1u << b))
            out |= 1u << pos;
        ++pos;
    }
    return out;
}

int top_bit(unsigned mask)
{
    return std::bit_width(mask) - 1;
}

using FlagKey = std::tuple<int, Index, std::vector<unsigned>>;

// Strict chains of nonempty proper subsets below `top`, appended before it.
void collect_flags(unsigned top, std::vector<unsigned>& prefix, std::vector<std::vector<unsigned>>& out)
{
    // prefix is stored in decreasing order while recursing
    std::vector<unsigned> flag(prefix.rbegin(), prefix.rend());
    out.push_back(flag);
    unsigned current = prefix.back();
    for (unsigned sub = (current - 1) & current; sub != 0; sub = (sub - 1) & current)
    {
        prefix.push_back(sub);
        collect_flags(top, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Subdivision barycentric_subdivide(const ComplexPtr& source)
{
    const DeltaComplex& K = *source;
    const int dims = K.dims();
    if (dims > 16)
        throw std::domain_error("barycentric_subdivide: dimension too large");

    Subdivision sd;
    sd.source = source;
    sd.cells.resize(dims + 1);
    std::vector<std::map<FlagKey, Index>> lookup(dims + 1);

    for (int q = 0; q <= dims; ++q)
    {
        const unsigned full = (1u << (q + 1)) - 1;
        std::vector<std::vector<unsigned>> flags;
        std::vector<unsigned> prefix{full};
        collect_flags(full, prefix, flags);
        std::sort(flags.begin(), flags.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        for (Index tau = 0; tau < K.cell_count(q); ++tau)
            for (const auto& flag : flags)
            {
                const int m = static_cast<int>(flag.size()) - 1;
                auto id = static_cast<Index>(sd.cells[m].size());
                sd.cells[m].push_back({q, tau, flag});
                lookup[m].emplace(FlagKey{q, tau, flag}, id);
            }
    }

    std::vector<Index> counts(dims + 1);
    for (int m = 0; m <= dims; ++m)
        counts[m] = static_cast<Index>(sd.cells[m].size());

    std::vector<DeltaComplex::FaceTable> faces(dims);
    for (int m = 1; m <= dims; ++m)
    {
        auto& table = faces[m - 1];
        table.reserve(sd.cells[m].size());
        for (const auto& cell : sd.cells[m])
        {
            std::vector<Index> row(m + 1);
            for (int i = 0; i < m; ++i)
            {
                std::vector<unsigned> flag = cell.flag;
                flag.erase(flag.begin() + i);
                row[i] = lookup[m - 1].at({cell.carrier_dim, cell.carrier, flag});
            }
            const unsigned top = cell.flag[m - 1];
            auto [q2, tau2] = K.face_by_vertices(cell.carrier_dim, cell.carrier, top);
            std::vector<unsigned> flag(m);
            for (int k = 0; k < m; ++k)
                flag[k] = compress(cell.flag[k], top);
            row[m] = lookup[m - 1].at({q2, tau2, flag});
            table.push_back(std::move(row));
        }
    }
    sd.complex = std::make_shared<const DeltaComplex>(std::move(counts), std::move(faces));

    sd.projection.resize(dims + 1);
    for (int m = 0; m <= dims; ++m)
        for (const auto& cell : sd.cells[m])
        {
            unsigned image = 0;
            int last = -1;
            bool injective = true;
            for (unsigned a : cell.flag)
            {
                int v = top_bit(a);
                if (v <= last)
                {
                    injective = false;
                    break;
                }
                last = v;
                image |= 1u << v;
            }
            Index target = -1;
            if (injective)
                target = K.face_by_vertices(cell.carrier_dim, cell.carrier, image).second;
            sd.projection[m].push_back(target);
        }
    return sd;
}

namespace
{

template <typename Scalar>
BasicChain<Scalar> subdivide_impl(const Subdivision& sd, const BasicChain<Scalar>& c)
{
    if (!same_complex(sd.source, c.complex()))
        throw std::domain_error("subdivide: chain is not on the subdivided complex");
    const int q = c.degree();
    BasicChain<Scalar> out(sd.complex, q);
    if (c.is_zero())
        return out;

    // Map (carrier, flag) to cell ids for the top-dimensional flags of degree q.
    std::map<std::pair<Index, std::vector<unsigned>>, Index> ids;
    for (Index id = 0; id < static_cast<Index>(sd.cells[q].size()); ++id)
    {
        const auto& cell = sd.cells[q][id];
        if (cell.carrier_dim == q)
            ids.emplace(std::pair{cell.carrier, cell.flag}, id);
    }

    std::vector<int> perm(q + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do
    {
        int inversions = 0;
        for (int a = 0; a <= q; ++a)
            for (int b = a + 1; b <= q; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        std::vector<unsigned> flag(q + 1);
        unsigned acc = 0;
        for (int i = 0; i <= q; ++i)
        {
            acc |= 1u << perm[i];
            flag[i] = acc;
        }
        for (const auto& [tau, value] : c.coeffs())
        {
            Index id = ids.at({tau, flag});
            out.add(id, inversions % 2 == 0 ? value : Scalar(-value));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

template <typename Scalar>
BasicChain<Scalar> project_impl(const Subdivision& sd, const BasicChain<Scalar>& c)
{
    if (!same_complex(sd.complex, c.complex()))
        throw std::domain_error("project: chain is not on the subdivision");
    BasicChain<Scalar> out(sd.source, c.degree());
    for (const auto& [cell, value] : c.coeffs())
    {
        Index target = sd.projection[c.degree()][cell];
        if (target >= 0)
            out.add(target, value);
    }
    return out;
}

}  // namespace

Chain Subdivision::subdivide(const Chain& c) const { return subdivide_impl(*this, c); }
IntChain Subdivision::subdivide(const IntChain& c) const { return subdivide_impl(*this, c); }
Chain Subdivision::project(const Chain& c) const { return project_impl(*this, c); }
IntChain Subdivision::project(const IntChain& c) const { return project_impl(*this, c); }

}  // namespace l1top
