#include "l1top/homology.hpp"

namespace l1top
{

namespace
{

BigInt mod_floor(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return r;
}

BigInt gcd_big(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

HomologyGroup::HomologyGroup(ComplexPtr complex, int degree)
    : complex_(std::move(complex)), degree_(degree)
{
    if (degree_ < 0 || degree_ > complex_->dims())
        throw std::domain_error("homology degree " + std::to_string(degree_) + " out of range");

    const Index cells = complex_->cell_count(degree_);
    const IntMatrix d_n = boundary_matrix<BigInt>(*complex_, degree_);
    const SmithDecomposition<BigInt> kernel_snf = smith_normal_form(d_n);
    const Index k = cells - kernel_snf.rank;
    cycle_basis_ = kernel_snf.V.rightCols(k);
    cycle_coords_ = kernel_snf.V_inv.bottomRows(k);

    const IntMatrix d_next = boundary_matrix<BigInt>(*complex_, degree_ + 1);
    const IntMatrix W = cycle_coords_ * d_next;
    image_snf_ = smith_normal_form(W);

    // Row i of U_W gives coordinate i. Factors equal to 1 are killed.
    for (Index i = image_snf_.rank; i < k; ++i)
        generator_rows_.push_back(i);
    betti_ = k - image_snf_.rank;
    for (Index i = 0; i < image_snf_.rank; ++i)
    {
        const BigInt& d = image_snf_.D(i, i);
        if (d != 1)
        {
            generator_rows_.push_back(i);
            torsion_.push_back(d);
        }
    }

    const IntMatrix gens = cycle_basis_ * image_snf_.U_inv;
    for (Index row : generator_rows_)
        generators_.push_back(IntChain::from_dense(complex_, degree_, gens.col(row)));
}

IntVector HomologyGroup::cycle_coordinates(const IntChain& z) const
{
    if (z.degree() != degree_ || !same_complex(z.complex(), complex_))
        throw std::domain_error("cycle does not live in this homology group");
    if (!is_cycle(z))
        throw std::domain_error("chain is not a cycle");
    return cycle_coords_ * z.dense();
}

IntVector HomologyGroup::normalize(IntVector coords) const
{
    for (Index i = 0; i < coords.size(); ++i)
    {
        BigInt m = generator_order(i);
        if (m != 0)
            coords(i) = mod_floor(coords(i), m);
    }
    return coords;
}

IntVector HomologyGroup::coordinates(const IntChain& z) const
{
    const IntVector y = image_snf_.U * cycle_coordinates(z);
    IntVector coords(rank());
    for (Index i = 0; i < rank(); ++i)
        coords(i) = y(generator_rows_[i]);
    return normalize(coords);
}

std::optional<IntChain> HomologyGroup::boundary_preimage(const IntChain& z) const
{
    const IntVector y = image_snf_.U * cycle_coordinates(z);
    const Index r = complex_->cell_count(degree_ + 1);
    IntVector w = IntVector::Zero(r);
    for (Index i = 0; i < y.size(); ++i)
    {
        if (i < image_snf_.rank)
        {
            const BigInt& d = image_snf_.D(i, i);
            if (y(i) % d != 0)
                return std::nullopt;
            w(i) = y(i) / d;
        }
        else if (y(i) != 0)
        {
            return std::nullopt;
        }
    }
    if (r == 0)
        return IntChain(complex_, degree_ + 1);
    return IntChain::from_dense(complex_, degree_ + 1, image_snf_.V * w);
}

GroupPtr homology(const ComplexPtr& complex, int degree)
{
    return std::make_shared<const HomologyGroup>(complex, degree);
}

HomologyClass::HomologyClass(GroupPtr group, IntVector coords, IntChain representative)
    : group_(std::move(group)), coords_(std::move(coords)), representative_(std::move(representative))
{
}

bool HomologyClass::is_zero() const
{
    for (Index i = 0; i < coords_.size(); ++i)
        if (coords_(i) != 0)
            return false;
    return true;
}

std::optional<IntChain> is_boundary(const HomologyGroup& group, const IntChain& z)
{
    auto u = group.boundary_preimage(z);
    if (u && !(boundary(*u) == z))
        throw std::logic_error("is_boundary: preimage failed verification");
    return u;
}

std::optional<IntChain> is_boundary(const IntChain& z)
{
    if (!is_cycle(z))
        throw std::domain_error("is_boundary: chain is not a cycle");
    return is_boundary(HomologyGroup(z.complex(), z.degree()), z);
}

HomologyClass class_of(const GroupPtr& group, const IntChain& z)
{
    return HomologyClass(group, group->coordinates(z), z);
}

HomologyClass zero_class(const GroupPtr& group)
{
    return HomologyClass(group, IntVector::Zero(group->rank()),
                         IntChain(group->complex(), group->degree()));
}

HomologyClass generator_class(const GroupPtr& group, Index i)
{
    IntVector coords = IntVector::Zero(group->rank());
    coords(i) = 1;
    return HomologyClass(group, group->normalize(coords), group->generators().at(i));
}

namespace
{

void check_same_group(const HomologyClass& a, const HomologyClass& b)
{
    if (a.group() == b.group())
        return;
    if (a.group()->degree() != b.group()->degree()
        || !same_complex(a.group()->complex(), b.group()->complex()))
        throw std::domain_error("classes live in different homology groups");
}

}  // namespace

bool classes_equal(const HomologyClass& a, const HomologyClass& b)
{
    check_same_group(a, b);
    if (a.group() == b.group())
        return a.coords() == b.coords();
    // Structurally equal complexes built independently: compare in a's group.
    return a.coords() == a.group()->coordinates(b.representative());
}

HomologyClass scale_class(const BigInt& d, const HomologyClass& a)
{
    IntVector coords = a.coords() * d;
    return HomologyClass(a.group(), a.group()->normalize(coords), d * a.representative());
}

HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b)
{
    check_same_group(a, b);
    IntChain rep = a.representative() + b.representative();
    IntVector coords = a.coords() + a.group()->coordinates(b.representative());
    return HomologyClass(a.group(), a.group()->normalize(coords), rep);
}

std::optional<BigInt> torsion_order(const HomologyClass& a)
{
    const HomologyGroup& g = *a.group();
    BigInt order = 1;
    for (Index i = 0; i < a.coords().size(); ++i)
    {
        const BigInt& c = a.coords()(i);
        if (c == 0)
            continue;
        BigInt m = g.generator_order(i);
        if (m == 0)
            return std::nullopt;
        BigInt local = m / gcd_big(m, c);
        order = order / gcd_big(order, local) * local;
    }
    return order;
}

}  // namespace l1top
