#ifndef L1TOP_SMITH_HPP
#define L1TOP_SMITH_HPP

#include <utility>
#include <vector>

#include "l1top/scalar.hpp"

namespace l1top
{

/**
 * Smith normal form U * B * V = D with U, V unimodular and
 * D = diag(d_1, ..., d_r, 0, ...), d_i > 0, d_i | d_{i+1}.
 * The inverses of U and V are tracked alongside so coordinate changes
 * never need a separate inversion.
 */
template <typename Integer>
struct SmithDecomposition
{
    MatrixX<Integer> U, U_inv, V, V_inv, D;
    Index rank = 0;

    std::vector<Integer> invariant_factors() const
    {
        std::vector<Integer> d;
        for (Index i = 0; i < rank; ++i)
            d.push_back(D(i, i));
        return d;
    }
};

namespace detail
{

template <typename Integer>
Integer abs_value(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

// Floor division for signed integers.
template <typename Integer>
Integer div_floor(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((q * b != a) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

template <typename Integer>
class SmithReducer
{
    public:
        explicit SmithReducer(const MatrixX<Integer>& B)
        {
            const Index m = B.rows(), n = B.cols();
            s_.D = B;
            s_.U = MatrixX<Integer>::Identity(m, m);
            s_.U_inv = MatrixX<Integer>::Identity(m, m);
            s_.V = MatrixX<Integer>::Identity(n, n);
            s_.V_inv = MatrixX<Integer>::Identity(n, n);
        }

        SmithDecomposition<Integer> run()
        {
            MatrixX<Integer>& D = s_.D;
            const Index limit = std::min(D.rows(), D.cols());
            Index t = 0;
            for (; t < limit; ++t)
            {
                if (!move_min_to(t))
                    break;
                while (true)
                {
                    bool clean = true;
                    for (Index i = t + 1; i < D.rows(); ++i)
                        if (D(i, t) != 0)
                        {
                            Integer q = div_floor(D(i, t), D(t, t));
                            add_row(i, t, -q);
                            if (D(i, t) != 0)
                                clean = false;
                        }
                    for (Index j = t + 1; j < D.cols(); ++j)
                        if (D(t, j) != 0)
                        {
                            Integer q = div_floor(D(t, j), D(t, t));
                            add_col(j, t, -q);
                            if (D(t, j) != 0)
                                clean = false;
                        }
                    if (!clean)
                    {
                        move_min_to(t);
                        continue;
                    }
                    // Row and column t are clear; enforce divisibility.
                    auto [bad_row, found] = find_non_divisible(t);
                    if (!found)
                        break;
                    add_row(t, bad_row, Integer(1));
                }
                if (D(t, t) < 0)
                    negate_row(t);
            }
            s_.rank = t;
            return std::move(s_);
        }

    private:
        SmithDecomposition<Integer> s_;

        // Least |entry| in the trailing block, ties by lowest row then column.
        bool move_min_to(Index t)
        {
            const MatrixX<Integer>& D = s_.D;
            Index best_r = -1, best_c = -1;
            Integer best = 0;
            for (Index i = t; i < D.rows(); ++i)
                for (Index j = t; j < D.cols(); ++j)
                {
                    if (D(i, j) == 0)
                        continue;
                    Integer a = abs_value(D(i, j));
                    if (best_r < 0 || a < best)
                    {
                        best = a;
                        best_r = i;
                        best_c = j;
                    }
                }
            if (best_r < 0)
                return false;
            swap_rows(t, best_r);
            swap_cols(t, best_c);
            return true;
        }

        std::pair<Index, bool> find_non_divisible(Index t) const
        {
            const MatrixX<Integer>& D = s_.D;
            for (Index i = t + 1; i < D.rows(); ++i)
                for (Index j = t + 1; j < D.cols(); ++j)
                    if (D(i, j) % D(t, t) != 0)
                        return {i, true};
            return {0, false};
        }

        void swap_rows(Index a, Index b)
        {
            if (a == b)
                return;
            s_.D.row(a).swap(s_.D.row(b));
            s_.U.row(a).swap(s_.U.row(b));
            s_.U_inv.col(a).swap(s_.U_inv.col(b));
        }

        void swap_cols(Index a, Index b)
        {
            if (a == b)
                return;
            s_.D.col(a).swap(s_.D.col(b));
            s_.V.col(a).swap(s_.V.col(b));
            s_.V_inv.row(a).swap(s_.V_inv.row(b));
        }

        // row[target] += factor * row[src]
        void add_row(Index target, Index src, const Integer& factor)
        {
            if (factor == 0)
                return;
            s_.D.row(target) += factor * s_.D.row(src);
            s_.U.row(target) += factor * s_.U.row(src);
            s_.U_inv.col(src) -= factor * s_.U_inv.col(target);
        }

        // col[target] += factor * col[src]
        void add_col(Index target, Index src, const Integer& factor)
        {
            if (factor == 0)
                return;
            s_.D.col(target) += factor * s_.D.col(src);
            s_.V.col(target) += factor * s_.V.col(src);
            s_.V_inv.row(src) -= factor * s_.V_inv.row(target);
        }

        void negate_row(Index t)
        {
            s_.D.row(t) *= Integer(-1);
            s_.U.row(t) *= Integer(-1);
            s_.U_inv.col(t) *= Integer(-1);
        }
};

}  // namespace detail

template <typename Integer>
SmithDecomposition<Integer> smith_normal_form(const MatrixX<Integer>& B)
{
    return detail::SmithReducer<Integer>(B).run();
}

}  // namespace l1top

#endif
