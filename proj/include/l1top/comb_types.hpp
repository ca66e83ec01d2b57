#ifndef L1TOP_COMB_TYPES_HPP
#define L1TOP_COMB_TYPES_HPP

#include <random>
#include <utility>
#include <vector>

#include "l1top/complex.hpp"

namespace l1top
{

/// A simplex-face index (slot j, face l); slots are 0-based here.
struct FaceSlot
{
    Index slot;
    int face;
    auto operator<=>(const FaceSlot&) const = default;
};

/**
 * A relation on {slots} x {0..n}, recording which codimension-1 faces of k
 * n-simplices are identified. Stored canonically: each unordered pair once
 * as (a, b) with a < b; reflexive pairs are dropped since the generated
 * equivalence contains them anyway.
 */
class CombinatorialType
{
    public:
        CombinatorialType() = default;
        CombinatorialType(Index k, int n, std::vector<std::pair<FaceSlot, FaceSlot>> pairs);

        Index k() const { return k_; }
        int n() const { return n_; }
        const std::vector<std::pair<FaceSlot, FaceSlot>>& pairs() const { return pairs_; }

        bool operator==(const CombinatorialType&) const = default;

    private:
        Index k_ = 0;
        int n_ = 0;
        std::vector<std::pair<FaceSlot, FaceSlot>> pairs_;
};

using SignVector = std::vector<int>;  // entries in {-1, 0, 1}

/// A chain written as a list of n-cells with unit signs; cells may repeat.
struct UnitChain
{
    ComplexPtr complex;
    int degree = 0;
    std::vector<Index> cells;
    SignVector signs;

    Index k() const { return static_cast<Index>(cells.size()); }
    IntChain to_chain() const;
};

/// Each cell with coefficient a becomes |a| slots of sign sgn(a), in cell order.
UnitChain expand_to_unit(const IntChain& c);

/// Throws std::domain_error on coefficients outside {-1, 0, 1}.
UnitChain as_unit_chain(const IntChain& c);

std::pair<CombinatorialType, SignVector> extract_type(const UnitChain& c);
std::pair<CombinatorialType, SignVector> extract_type(const IntChain& c);

/**
 * The realization Y_t: cells are classes of (slot, nonempty vertex subset of
 * [n]) under the equivalence generated by t, where identifying face l of
 * slot j with face l' of slot j' matches their sub-faces through the
 * order-preserving vertex correspondence.
 */
struct GluedComplex
{
    struct Origin
    {
        Index slot;
        unsigned vertices;  // bit mask over 0..n
        auto operator<=>(const Origin&) const = default;
    };

    CombinatorialType type;
    ComplexPtr complex;
    std::vector<Index> tau;                              // top cell of each slot
    std::vector<std::vector<std::vector<Origin>>> cell_origin;  // [dim][cell] -> members
};

GluedComplex realize(const CombinatorialType& t);

struct CanonicalChain
{
    IntChain chain;
    bool is_cycle = false;
};

/// z_{t,eps} = sum_j eps_j tau_j on realize(t).
CanonicalChain canonical_chain(const GluedComplex& y, const SignVector& eps);

/// The map Y_t -> K sending tau_j to the j-th carrier cell of c. Throws
/// std::logic_error if some origin class straddles different cells of K.
CellMap induced_map(const UnitChain& c, const GluedComplex& y);

/// Uniform draw from all relations in T(k, n) (each ordered pair kept with
/// probability 1/2), canonicalized.
CombinatorialType random_type(Index k, int n, std::mt19937_64& rng);

}  // namespace l1top

#endif
