#ifndef L1TOP_SIMPLEX_HPP
#define L1TOP_SIMPLEX_HPP

#include <stdexcept>
#include <vector>

#include "l1top/scalar.hpp"

namespace l1top
{

/// minimize c.x subject to A x = b, x >= 0.
template <typename Scalar>
struct LinearProgram
{
    MatrixX<Scalar> A;
    VectorX<Scalar> b;
    VectorX<Scalar> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpSolution
{
    LpStatus status = LpStatus::infeasible;
    VectorX<Scalar> x;
    Scalar objective = 0;
    /// Optimal dual: A^T y <= c and b.y == objective.
    VectorX<Scalar> duals;
    Index iterations = 0;
};

/**
 * Two-phase primal simplex over an exact field with Bland's rule.
 *
 * Columns of A that already equal a unit vector e_i (after flipping rows so
 * that b >= 0) seed the starting basis; rows without one get an artificial
 * variable. Every row owns an artificial column, so B^{-1} and the duals can
 * be read off the tableau at any time. Artificials never re-enter.
 *
 * `tie_breaks` are secondary objectives minimized in order over the optimal
 * face (lexicographic simplex). Duals refer to the primary objective.
 */
template <typename Scalar>
class ExactSimplex
{
    public:
        explicit ExactSimplex(const LinearProgram<Scalar>& lp) : lp_(lp)
        {
            m_ = lp.A.rows();
            n_ = lp.A.cols();
            if (lp.b.size() != m_ || lp.c.size() != n_)
                throw std::invalid_argument("linear program has inconsistent dimensions");
        }

        LpSolution<Scalar> solve(const std::vector<VectorX<Scalar>>& tie_breaks = {})
        {
            build_tableau();
            LpSolution<Scalar> sol;

            if (needs_phase_one_)
            {
                VectorX<Scalar> cost = VectorX<Scalar>::Zero(n_ + m_);
                for (Index i = 0; i < m_; ++i)
                    if (basis_[i] >= n_)
                        cost(n_ + i) = 1;
                set_objective(cost);
                if (!iterate())
                    throw std::logic_error("phase one cannot be unbounded");
                if (objective_value() != 0)
                {
                    sol.status = LpStatus::infeasible;
                    sol.iterations = iterations_;
                    return sol;
                }
                drive_out_artificials();
            }

            VectorX<Scalar> cost = VectorX<Scalar>::Zero(n_ + m_);
            cost.head(n_) = lp_.c;
            set_objective(cost);
            if (!iterate())
            {
                sol.status = LpStatus::unbounded;
                sol.iterations = iterations_;
                return sol;
            }
            sol.status = LpStatus::optimal;
            sol.objective = objective_value();
            sol.duals = read_duals(cost);

            for (const auto& extra : tie_breaks)
            {
                freeze_positive_reduced_costs();
                VectorX<Scalar> lex = VectorX<Scalar>::Zero(n_ + m_);
                lex.head(n_) = extra;
                set_objective(lex);
                if (!iterate())
                    throw std::domain_error("tie-break objective is unbounded on the optimal face");
            }

            sol.x = VectorX<Scalar>::Zero(n_);
            for (Index i = 0; i < m_; ++i)
                if (basis_[i] < n_)
                    sol.x(basis_[i]) = T_(i, rhs_col());
            sol.iterations = iterations_;
            return sol;
        }

    private:
        const LinearProgram<Scalar>& lp_;
        Index m_ = 0, n_ = 0;
        MatrixX<Scalar> T_;             // rows 0..m-1 constraints, row m reduced costs
        std::vector<Index> basis_;
        std::vector<bool> row_flipped_;
        std::vector<bool> eligible_;    // columns allowed to enter
        bool needs_phase_one_ = false;
        Index iterations_ = 0;

        Index rhs_col() const { return n_ + m_; }

        void build_tableau()
        {
            T_ = MatrixX<Scalar>::Zero(m_ + 1, n_ + m_ + 1);
            row_flipped_.assign(m_, false);
            for (Index i = 0; i < m_; ++i)
            {
                const bool flip = lp_.b(i) < 0;
                row_flipped_[i] = flip;
                for (Index j = 0; j < n_; ++j)
                    T_(i, j) = flip ? Scalar(-lp_.A(i, j)) : lp_.A(i, j);
                T_(i, n_ + i) = 1;
                T_(i, rhs_col()) = flip ? Scalar(-lp_.b(i)) : lp_.b(i);
            }

            basis_.assign(m_, -1);
            for (Index j = 0; j < n_; ++j)
            {
                Index hit = -1;
                bool unit = true;
                for (Index i = 0; i < m_ && unit; ++i)
                {
                    if (T_(i, j) == 0)
                        continue;
                    if (T_(i, j) == 1 && hit < 0)
                        hit = i;
                    else
                        unit = false;
                }
                if (unit && hit >= 0 && basis_[hit] < 0)
                    basis_[hit] = j;
            }
            needs_phase_one_ = false;
            for (Index i = 0; i < m_; ++i)
                if (basis_[i] < 0)
                {
                    basis_[i] = n_ + i;
                    needs_phase_one_ = true;
                }
            eligible_.assign(n_ + m_, false);
            for (Index j = 0; j < n_; ++j)
                eligible_[j] = true;
        }

        void set_objective(const VectorX<Scalar>& cost)
        {
            for (Index j = 0; j <= rhs_col(); ++j)
                T_(m_, j) = j < n_ + m_ ? cost(j) : Scalar(0);
            for (Index i = 0; i < m_; ++i)
            {
                const Scalar cb = cost(basis_[i]);
                if (cb != 0)
                    T_.row(m_) -= cb * T_.row(i);
            }
        }

        Scalar objective_value() const { return -T_(m_, rhs_col()); }

        void pivot(Index row, Index col)
        {
            const Scalar p = T_(row, col);
            T_.row(row) /= p;
            for (Index i = 0; i <= m_; ++i)
            {
                if (i == row)
                    continue;
                const Scalar f = T_(i, col);
                if (f != 0)
                    T_.row(i) -= f * T_.row(row);
            }
            basis_[row] = col;
            ++iterations_;
        }

        // Returns false if unbounded.
        bool iterate()
        {
            while (true)
            {
                Index enter = -1;
                for (Index j = 0; j < n_ + m_; ++j)
                    if (eligible_[j] && T_(m_, j) < 0)
                    {
                        enter = j;
                        break;
                    }
                if (enter < 0)
                    return true;

                Index leave = -1;
                Scalar best_ratio;
                for (Index i = 0; i < m_; ++i)
                {
                    if (T_(i, enter) <= 0)
                        continue;
                    Scalar ratio = T_(i, rhs_col()) / T_(i, enter);
                    if (leave < 0 || ratio < best_ratio
                        || (ratio == best_ratio && basis_[i] < basis_[leave]))
                    {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
                if (leave < 0)
                    return false;
                pivot(leave, enter);
            }
        }

        void drive_out_artificials()
        {
            for (Index i = 0; i < m_; ++i)
            {
                if (basis_[i] < n_)
                    continue;
                for (Index j = 0; j < n_; ++j)
                    if (eligible_[j] && T_(i, j) != 0)
                    {
                        pivot(i, j);
                        break;
                    }
                // A row with no eligible entry is redundant; its artificial
                // stays basic at level zero and is never touched again.
            }
        }

        void freeze_positive_reduced_costs()
        {
            for (Index j = 0; j < n_; ++j)
                if (T_(m_, j) > 0)
                    eligible_[j] = false;
        }

        // y_i = c_B^T B^{-1} e_i; artificial column i holds B^{-1} e_i.
        VectorX<Scalar> read_duals(const VectorX<Scalar>& cost) const
        {
            VectorX<Scalar> y = VectorX<Scalar>::Zero(m_);
            for (Index r = 0; r < m_; ++r)
            {
                const Scalar cb = cost(basis_[r]);
                if (cb == 0)
                    continue;
                for (Index i = 0; i < m_; ++i)
                    y(i) += cb * T_(r, n_ + i);
            }
            for (Index i = 0; i < m_; ++i)
                if (row_flipped_[i])
                    y(i) = -y(i);
            return y;
        }
};

template <typename Scalar>
LpSolution<Scalar> solve_lp(const LinearProgram<Scalar>& lp,
                            const std::vector<VectorX<Scalar>>& tie_breaks = {})
{
    return ExactSimplex<Scalar>(lp).solve(tie_breaks);
}

}  // namespace l1top

#endif
