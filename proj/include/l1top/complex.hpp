#ifndef L1TOP_COMPLEX_HPP
#define L1TOP_COMPLEX_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "l1top/scalar.hpp"

namespace l1top
{

/**
 * A finite semi-simplicial set (Delta-complex).
 *
 * Cells are dense integers per dimension. For an n-cell c and i in 0..n,
 * face(n, c, i) is the (n-1)-cell obtained by omitting vertex i. Instances
 * are immutable; share them through ComplexPtr.
 */
class DeltaComplex
{
    public:
        using FaceTable = std::vector<std::vector<Index>>;

        DeltaComplex() = default;

        /// faces[n-1] holds the face table of dimension n (n >= 1). No
        /// validation happens here; see validate_complex.
        DeltaComplex(std::vector<Index> cell_counts, std::vector<FaceTable> faces);

        int dims() const { return static_cast<int>(counts_.size()) - 1; }
        Index cell_count(int n) const
        {
            return (n < 0 || n > dims()) ? 0 : counts_[n];
        }
        const std::vector<Index>& cell_counts() const { return counts_; }

        Index face(int n, Index cell, int i) const { return faces_[n - 1][cell][i]; }
        const std::vector<Index>& faces_of(int n, Index cell) const { return faces_[n - 1][cell]; }
        const FaceTable& face_table(int n) const { return faces_[n - 1]; }

        /// The face of an n-cell spanned by the vertex positions in `mask`
        /// (bit v set = vertex v kept). Returns {dimension, cell}.
        std::pair<int, Index> face_by_vertices(int n, Index cell, unsigned mask) const;

        bool operator==(const DeltaComplex& other) const = default;

    private:
        std::vector<Index> counts_;
        std::vector<FaceTable> faces_;
};

using ComplexPtr = std::shared_ptr<const DeltaComplex>;

/// Pointer-equal or structurally equal.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

struct Violation
{
    enum class Kind { dangling_face, simplicial_identity, malformed_table };
    Kind kind;
    int dim;
    Index cell;
    std::string message;
};

struct ValidationReport
{
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_complex(const DeltaComplex& complex);

/**
 * Sparse chain with exact coefficients. Zero coefficients are never stored;
 * every keyed cell has the chain's degree.
 */
template <typename Scalar>
class BasicChain
{
    public:
        using Coefficients = std::map<Index, Scalar>;

        BasicChain() = default;
        BasicChain(ComplexPtr complex, int degree) : complex_(std::move(complex)), degree_(degree) {}
        BasicChain(ComplexPtr complex, int degree, const Coefficients& coeffs)
            : complex_(std::move(complex)), degree_(degree)
        {
            for (const auto& [cell, value] : coeffs)
                add(cell, value);
        }

        const ComplexPtr& complex() const { return complex_; }
        int degree() const { return degree_; }
        const Coefficients& coeffs() const { return coeffs_; }
        bool is_zero() const { return coeffs_.empty(); }
        std::size_t size() const { return coeffs_.size(); }

        Scalar operator[](Index cell) const
        {
            auto it = coeffs_.find(cell);
            return it == coeffs_.end() ? Scalar(0) : it->second;
        }

        void add(Index cell, const Scalar& value)
        {
            if (cell < 0 || (complex_ && cell >= complex_->cell_count(degree_)))
                throw std::out_of_range("chain cell " + std::to_string(cell) + " not in degree "
                                        + std::to_string(degree_));
            if (value == 0)
                return;
            auto [it, inserted] = coeffs_.try_emplace(cell, value);
            if (!inserted)
            {
                it->second += value;
                if (it->second == 0)
                    coeffs_.erase(it);
            }
        }

        BasicChain& operator+=(const BasicChain& other)
        {
            check_compatible(other);
            for (const auto& [cell, value] : other.coeffs_)
                add(cell, value);
            return *this;
        }
        BasicChain& operator-=(const BasicChain& other)
        {
            check_compatible(other);
            for (const auto& [cell, value] : other.coeffs_)
                add(cell, -value);
            return *this;
        }
        BasicChain& operator*=(const Scalar& factor)
        {
            if (factor == 0)
                coeffs_.clear();
            for (auto& entry : coeffs_)
                entry.second *= factor;
            return *this;
        }

        friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
        friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
        friend BasicChain operator*(const Scalar& s, BasicChain a) { return a *= s; }
        friend BasicChain operator-(BasicChain a) { return a *= Scalar(-1); }

        bool operator==(const BasicChain& other) const
        {
            return degree_ == other.degree_ && coeffs_ == other.coeffs_
                   && same_complex(complex_, other.complex_);
        }

        /// Dense coefficient vector indexed by cell.
        VectorX<Scalar> dense() const
        {
            VectorX<Scalar> v = VectorX<Scalar>::Zero(complex_->cell_count(degree_));
            for (const auto& [cell, value] : coeffs_)
                v(cell) = value;
            return v;
        }

        static BasicChain from_dense(ComplexPtr complex, int degree, const VectorX<Scalar>& v)
        {
            BasicChain c(std::move(complex), degree);
            for (Index i = 0; i < v.size(); ++i)
                c.add(i, v(i));
            return c;
        }

        void check_compatible(const BasicChain& other) const
        {
            if (degree_ != other.degree_ || !same_complex(complex_, other.complex_))
                throw std::domain_error("chains live on different complexes or degrees");
        }

    private:
        ComplexPtr complex_;
        int degree_ = 0;
        Coefficients coeffs_;
};

using Chain = BasicChain<Rational>;
using IntChain = BasicChain<BigInt>;

IntChain to_integer_chain(const Chain& c);  // throws std::domain_error on fractions
Chain to_rational_chain(const IntChain& c);

template <typename Scalar>
BasicChain<Scalar> boundary(const BasicChain<Scalar>& c)
{
    if (c.degree() < 1)
        throw std::domain_error("boundary of a degree-0 chain");
    const int n = c.degree();
    BasicChain<Scalar> out(c.complex(), n - 1);
    for (const auto& [cell, value] : c.coeffs())
    {
        const auto& faces = c.complex()->faces_of(n, cell);
        for (int i = 0; i <= n; ++i)
            out.add(faces[i], (i % 2 == 0) ? value : Scalar(-value));
    }
    return out;
}

template <typename Scalar>
bool is_cycle(const BasicChain<Scalar>& c)
{
    return c.degree() == 0 || boundary(c).is_zero();
}

template <typename Scalar>
Scalar l1_norm_chain(const BasicChain<Scalar>& c)
{
    Scalar total = 0;
    for (const auto& entry : c.coeffs())
        total += abs(entry.second);
    return total;
}

/// Integer boundary matrix of degree n: rows are (n-1)-cells, columns n-cells.
/// Degree 0 yields a 0 x |cells_0| matrix.
template <typename Scalar = BigInt>
MatrixX<Scalar> boundary_matrix(const DeltaComplex& complex, int n)
{
    MatrixX<Scalar> m = MatrixX<Scalar>::Zero(complex.cell_count(n - 1), complex.cell_count(n));
    if (n < 1)
        return m;
    for (Index c = 0; c < complex.cell_count(n); ++c)
        for (int i = 0; i <= n; ++i)
            m(complex.face(n, c, i), c) += (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    return m;
}

/**
 * Dimension-preserving cell map commuting with faces:
 * assign[n][face(c, i)] == face(assign[n+1][c], i).
 */
struct CellMap
{
    ComplexPtr source;
    ComplexPtr target;
    std::vector<std::vector<Index>> assign;  // assign[n][source cell] = target cell

    Index operator()(int n, Index cell) const { return assign[n][cell]; }
};

CellMap identity_map(const ComplexPtr& complex);

/// Empty report iff the map is defined on every source cell, lands in the
/// target, and commutes with all faces.
ValidationReport validate_cell_map(const CellMap& f);

template <typename Scalar>
BasicChain<Scalar> push_chain(const CellMap& f, const BasicChain<Scalar>& c)
{
    if (!same_complex(f.source, c.complex()))
        throw std::domain_error("push_chain: chain is not on the map's source");
    if (c.degree() >= static_cast<int>(f.assign.size()))
        throw std::domain_error("push_chain: degree exceeds the map's assignment table");
    BasicChain<Scalar> out(f.target, c.degree());
    for (const auto& [cell, value] : c.coeffs())
        out.add(f.assign[c.degree()][cell], value);
    return out;
}

/**
 * Barycentric subdivision of a Delta-complex.
 *
 * An m-cell of the subdivision is a cell `carrier` of K (dimension q) with a
 * strict flag of vertex subsets A_0 < ... < A_m = all of [q]; its i-th vertex
 * is the barycenter of A_i. `subdivide` is the subdivision chain map
 * C(K) -> C(K'), `project` the chain map C(K') -> C(K) induced by sending the
 * barycenter of A to the last vertex of A. project(subdivide(c)) == c.
 */
struct Subdivision
{
    struct Cell
    {
        int carrier_dim;
        Index carrier;
        std::vector<unsigned> flag;  // vertex masks in the carrier, increasing
    };

    ComplexPtr source;
    ComplexPtr complex;
    std::vector<std::vector<Cell>> cells;              // cells[m][id]
    std::vector<std::vector<Index>> projection;        // image cell of K or -1 (degenerate)

    Chain subdivide(const Chain& c) const;
    Chain project(const Chain& c) const;
    IntChain subdivide(const IntChain& c) const;
    IntChain project(const IntChain& c) const;
};

Subdivision barycentric_subdivide(const ComplexPtr& complex);

}  // namespace l1top

#endif
