#ifndef L1TOP_HOMOLOGY_HPP
#define L1TOP_HOMOLOGY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "l1top/complex.hpp"
#include "l1top/smith.hpp"

namespace l1top
{

/**
 * Integral homology H_n(K; Z) = ker d_n / im d_{n+1}.
 *
 * The group is stored through two Smith decompositions: one of d_n, whose V
 * gives an integral basis Z of the cycles, and one of W, the matrix of
 * d_{n+1} in that basis. Generators are the columns of Z * U_W^{-1} whose
 * invariant factor is not 1: free generators first, then torsion in
 * increasing order.
 */
class HomologyGroup
{
    public:
        HomologyGroup(ComplexPtr complex, int degree);

        const ComplexPtr& complex() const { return complex_; }
        int degree() const { return degree_; }
        Index betti() const { return betti_; }
        const std::vector<BigInt>& torsion() const { return torsion_; }
        const std::vector<IntChain>& generators() const { return generators_; }
        Index rank() const { return betti_ + static_cast<Index>(torsion_.size()); }

        /// Order of generator i, or 0 for free generators.
        BigInt generator_order(Index i) const
        {
            return i < betti_ ? BigInt(0) : torsion_[i - betti_];
        }

        /// Coordinates of a cycle in generator order; torsion entries reduced
        /// into [0, m). Throws std::domain_error for non-cycles.
        IntVector coordinates(const IntChain& z) const;

        /// Integral preimage u with boundary(u) == z, if z is a boundary.
        std::optional<IntChain> boundary_preimage(const IntChain& z) const;

        /// Reduce coordinates modulo the torsion orders.
        IntVector normalize(IntVector coords) const;

    private:
        ComplexPtr complex_;
        int degree_;
        Index betti_ = 0;
        std::vector<BigInt> torsion_;
        std::vector<IntChain> generators_;

        IntMatrix cycle_basis_;      // n-cells x k
        IntMatrix cycle_coords_;     // k x n-cells, valid on cycles
        SmithDecomposition<BigInt> image_snf_;
        std::vector<Index> generator_rows_;  // rows of U_W giving each coordinate

        IntVector cycle_coordinates(const IntChain& z) const;
};

using GroupPtr = std::shared_ptr<const HomologyGroup>;

GroupPtr homology(const ComplexPtr& complex, int degree);

class HomologyClass
{
    public:
        HomologyClass(GroupPtr group, IntVector coords, IntChain representative);

        const GroupPtr& group() const { return group_; }
        const IntVector& coords() const { return coords_; }
        const IntChain& representative() const { return representative_; }
        bool is_zero() const;

    private:
        GroupPtr group_;
        IntVector coords_;
        IntChain representative_;
};

/// Preimage under d_{n+1}; std::nullopt when z is not a boundary.
/// Throws std::domain_error if z is not a cycle.
std::optional<IntChain> is_boundary(const IntChain& z);
std::optional<IntChain> is_boundary(const HomologyGroup& group, const IntChain& z);

HomologyClass class_of(const GroupPtr& group, const IntChain& z);
HomologyClass zero_class(const GroupPtr& group);
HomologyClass generator_class(const GroupPtr& group, Index i);

bool classes_equal(const HomologyClass& a, const HomologyClass& b);
HomologyClass scale_class(const BigInt& d, const HomologyClass& a);
HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b);

/// Least m >= 1 with m * a == 0, or std::nullopt for infinite order.
std::optional<BigInt> torsion_order(const HomologyClass& a);

}  // namespace l1top

#endif
