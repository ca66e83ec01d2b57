#include "l1top/l1_norm.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "l1top/simplex.hpp"

namespace l1top
{

namespace
{

RationalVector to_rational(const IntVector& v)
{
    RationalVector out(v.size());
    for (Index i = 0; i < v.size(); ++i)
        out(i) = Rational(v(i));
    return out;
}

/**
 * The split formulation of min |z + B w|_1:
 *   p - q - B w = z,  p, q >= 0,
 * with w laid out as [w+ | w-] (free w) or [w | s] with w + s = width
 * (box-bounded w >= 0).
 */
struct L1Program
{
    LinearProgram<Rational> lp;
    Index cells = 0;
    Index cofaces = 0;
};

L1Program free_program(const RationalMatrix& B, const RationalVector& z)
{
    const Index m = B.rows(), r = B.cols();
    L1Program prog{{}, m, r};
    auto& lp = prog.lp;
    lp.A = RationalMatrix::Zero(m, 2 * m + 2 * r);
    lp.A.block(0, 0, m, m) = RationalMatrix::Identity(m, m);
    lp.A.block(0, m, m, m) = -RationalMatrix::Identity(m, m);
    lp.A.block(0, 2 * m, m, r) = -B;
    lp.A.block(0, 2 * m + r, m, r) = B;
    lp.b = z;
    lp.c = RationalVector::Zero(2 * m + 2 * r);
    lp.c.head(2 * m).setOnes();
    return prog;
}

L1Program boxed_program(const RationalMatrix& B, const RationalVector& z, const IntVector& width)
{
    const Index m = B.rows(), r = B.cols();
    L1Program prog{{}, m, r};
    auto& lp = prog.lp;
    lp.A = RationalMatrix::Zero(m + r, 2 * m + 2 * r);
    lp.A.block(0, 0, m, m) = RationalMatrix::Identity(m, m);
    lp.A.block(0, m, m, m) = -RationalMatrix::Identity(m, m);
    lp.A.block(0, 2 * m, m, r) = -B;
    lp.A.block(m, 2 * m, r, r) = RationalMatrix::Identity(r, r);
    lp.A.block(m, 2 * m + r, r, r) = RationalMatrix::Identity(r, r);
    lp.b = RationalVector::Zero(m + r);
    lp.b.head(m) = z;
    lp.b.tail(r) = to_rational(width);
    lp.c = RationalVector::Zero(2 * m + 2 * r);
    lp.c.head(2 * m).setOnes();
    return prog;
}

// Signed coefficients p_i - q_i minimized in cell order.
std::vector<RationalVector> lexicographic_objectives(const L1Program& prog)
{
    std::vector<RationalVector> out;
    const Index m = prog.cells;
    for (Index i = 0; i < m; ++i)
    {
        RationalVector c = RationalVector::Zero(prog.lp.A.cols());
        c(i) = 1;
        c(m + i) = -1;
        out.push_back(std::move(c));
    }
    return out;
}

RationalVector cycle_of(const L1Program& prog, const RationalVector& x)
{
    const Index m = prog.cells;
    return x.head(m) - x.segment(m, m);
}

BigInt l1_of(const IntVector& v)
{
    BigInt total = 0;
    for (Index i = 0; i < v.size(); ++i)
        total += abs(v(i));
    return total;
}

struct ClassData
{
    ComplexPtr complex;
    int degree;
    IntMatrix B;            // d_{n+1}
    RationalMatrix B_q;
    IntVector z0;
};

ClassData class_data(const HomologyClass& a)
{
    ClassData d{a.group()->complex(), a.group()->degree(), {}, {}, {}};
    d.B = boundary_matrix<BigInt>(*d.complex, d.degree + 1);
    d.B_q = boundary_matrix<Rational>(*d.complex, d.degree + 1);
    d.z0 = a.representative().dense();
    return d;
}

// Boundary matrix of the complex with depth-1 degenerate simplices adjoined:
// n-cells are the m nondegenerate ones followed by s_k(tau) for (n-1)-cells
// tau and k < n; (n+1)-cells are the nondegenerate ones followed by s_i(sigma)
// for n-cells sigma and i <= n.
RationalMatrix degenerate_boundary(const DeltaComplex& K, int n)
{
    const Index m = K.cell_count(n), r = K.cell_count(n + 1);
    const Index lower = n >= 1 ? K.cell_count(n - 1) : 0;
    const Index rows = m + lower * n;
    const Index cols = r + m * (n + 1);
    RationalMatrix B = RationalMatrix::Zero(rows, cols);
    B.block(0, 0, m, r) = boundary_matrix<Rational>(K, n + 1);
    auto degenerate = [&](Index tau, int k) { return m + tau * n + k; };
    for (Index sigma = 0; sigma < m; ++sigma)
        for (int i = 0; i <= n; ++i)
        {
            const Index col = r + sigma * (n + 1) + i;
            for (int j = 0; j <= n + 1; ++j)
            {
                const Rational sign = (j % 2 == 0) ? 1 : -1;
                if (j < i)
                    B(degenerate(K.face(n, sigma, j), i - 1), col) += sign;
                else if (j > i + 1)
                    B(degenerate(K.face(n, sigma, j - 1), i), col) += sign;
                // j == i and j == i + 1 give sigma twice with opposite signs
            }
        }
    return B;
}

}  // namespace

Rational pairing(const Chain& cochain, const IntChain& z)
{
    Rational total = 0;
    for (const auto& [cell, value] : z.coeffs())
        total += cochain[cell] * Rational(value);
    return total;
}

bool verify_dual(const DualCertificate& cert, const HomologyClass& a)
{
    const auto& phi = cert.cochain;
    const int n = a.group()->degree();
    if (phi.degree() != n || !same_complex(phi.complex(), a.group()->complex()))
        throw std::domain_error("verify_dual: certificate and class live in different degrees or complexes");
    for (const auto& entry : phi.coeffs())
        if (abs(entry.second) > 1)
            return false;
    const DeltaComplex& K = *a.group()->complex();
    for (Index rho = 0; rho < K.cell_count(n + 1); ++rho)
    {
        Rational s = 0;
        for (int i = 0; i <= n + 1; ++i)
        {
            const Rational v = phi[K.face(n + 1, rho, i)];
            s += (i % 2 == 0) ? v : Rational(-v);
        }
        if (s != 0)
            return false;
    }
    return cert.objective == pairing(phi, a.representative());
}

NormReport rational_norm(const HomologyClass& a, const RationalOptions& options)
{
    const ClassData data = class_data(a);
    const L1Program prog = free_program(data.B_q, to_rational(data.z0));
    const auto sol = solve_lp(prog.lp, lexicographic_objectives(prog));
    if (sol.status != LpStatus::optimal)
        throw std::logic_error("l1 program must be feasible and bounded");

    NormReport report;
    report.kind = NormReport::Kind::rational;
    report.value = sol.objective;
    const RationalVector z = cycle_of(prog, sol.x);
    report.optimal_cycle = Chain::from_dense(data.complex, data.degree, z);
    report.stats.iterations = sol.iterations;
    report.stats.nodes = 1;

    DualCertificate cert;
    cert.cochain = Chain::from_dense(data.complex, data.degree, sol.duals);
    cert.objective = pairing(cert.cochain, a.representative());
    if (cert.objective != report.value || l1_norm_chain(report.optimal_cycle) != report.value)
        throw std::logic_error("rational_norm: primal and dual values disagree");
    report.dual = std::move(cert);

    if (options.degenerate_probe)
    {
        const RationalMatrix B = degenerate_boundary(*data.complex, data.degree);
        RationalVector z0 = RationalVector::Zero(B.rows());
        z0.head(data.z0.size()) = to_rational(data.z0);
        const auto probe = solve_lp(free_program(B, z0).lp);
        report.degenerate_probe_value = probe.objective;
        report.stats.iterations += probe.iterations;
    }
    return report;
}

namespace
{

struct Node
{
    IntVector lo, hi;
    BigInt bound;  // ceiling of the parent LP value
};

class BranchAndBound
{
    public:
        BranchAndBound(const ClassData& data, const IntegralOptions& options, BigInt global_lower)
            : data_(data), options_(options), global_lower_(std::move(global_lower))
        {
        }

        void run()
        {
            const Index r = data_.B.cols();
            best_value_ = l1_of(data_.z0);
            best_u_ = IntVector::Zero(r);
            if (best_value_ <= global_lower_ || r == 0)
            {
                complete_ = true;
                inside_lower_ = best_value_;
                return;
            }

            std::vector<Node> open;
            open.push_back({IntVector::Constant(r, -options_.box), IntVector::Constant(r, options_.box),
                            global_lower_});
            Index evaluations = 0;
            bool stopped_early = false;
            while (!open.empty())
            {
                if (nodes_ >= options_.node_budget)
                    break;
                Node node = take_next(open, evaluations);
                if (node.bound >= best_value_)
                    continue;
                ++evaluations;
                evaluate(node, open);
                if (best_value_ <= global_lower_)
                {
                    stopped_early = true;
                    break;
                }
            }
            std::erase_if(open, [&](const Node& n) { return n.bound >= best_value_; });
            complete_ = stopped_early || open.empty();
            inside_lower_ = best_value_;
            for (const auto& node : open)
                inside_lower_ = std::min(inside_lower_, node.bound);
        }

        /// min over integral u outside the box, bounded below via one LP per
        /// coordinate and side: u_i >= box + 1 or u_i <= -(box + 1).
        BigInt outside_lower_bound()
        {
            const Index r = data_.B.cols();
            if (r == 0)
                return best_value_;
            BigInt bound = -1;
            for (Index i = 0; i < r; ++i)
                for (int side : {1, -1})
                {
                    const BigInt shift = side * (options_.box + 1);
                    RationalVector z = to_rational(data_.z0 + shift * data_.B.col(i));
                    L1Program prog = free_program(data_.B_q, z);
                    // u_i = shift + side * w with w >= 0: drop the wrong-signed column.
                    const Index m = prog.cells;
                    const Index drop = side > 0 ? 2 * m + r + i : 2 * m + i;
                    prog.lp.A.col(drop).setZero();
                    const auto sol = solve_lp(prog.lp);
                    ++nodes_;
                    iterations_ += sol.iterations;
                    const BigInt v = ceil_of(sol.objective);
                    if (bound < 0 || v < bound)
                        bound = v;
                }
            return bound;
        }

        BigInt best_value_;
        IntVector best_u_;
        BigInt inside_lower_;
        bool complete_ = false;
        Index nodes_ = 0;
        Index iterations_ = 0;

    private:
        const ClassData& data_;
        const IntegralOptions& options_;
        BigInt global_lower_;

        static constexpr Index restart_interval = 32;

        // Depth-first; every restart_interval evaluations jump to the open
        // node with the least bound.
        Node take_next(std::vector<Node>& open, Index evaluations) const
        {
            if (evaluations > 0 && evaluations % restart_interval == 0)
            {
                auto best = std::min_element(open.begin(), open.end(),
                                             [](const Node& a, const Node& b) { return a.bound < b.bound; });
                std::iter_swap(best, open.end() - 1);
            }
            Node node = std::move(open.back());
            open.pop_back();
            return node;
        }

        void consider(const IntVector& u)
        {
            const BigInt v = l1_of(data_.z0 + data_.B * u);
            if (v < best_value_)
            {
                best_value_ = v;
                best_u_ = u;
            }
        }

        void evaluate(const Node& node, std::vector<Node>& open)
        {
            const Index r = data_.B.cols();
            const IntVector width = node.hi - node.lo;
            const RationalVector z = to_rational(data_.z0 + data_.B * node.lo);
            const L1Program prog = boxed_program(data_.B_q, z, width);
            const auto sol = solve_lp(prog.lp);
            ++nodes_;
            iterations_ += sol.iterations;
            if (sol.status != LpStatus::optimal)
                return;
            const BigInt bound = ceil_of(sol.objective);
            if (bound >= best_value_)
                return;

            RationalVector u(r);
            for (Index i = 0; i < r; ++i)
                u(i) = Rational(node.lo(i)) + sol.x(2 * prog.cells + i);

            IntVector rounded(r);
            Index branch = -1;
            Rational widest = 0;
            for (Index i = 0; i < r; ++i)
            {
                const BigInt f = floor_of(u(i));
                const Rational frac = u(i) - Rational(f);
                rounded(i) = frac * 2 < 1 ? f : BigInt(f + 1);
                const Rational dist = std::min(frac, Rational(1 - frac));
                if (dist > widest)
                {
                    widest = dist;
                    branch = i;
                }
            }
            consider(rounded);
            if (branch < 0 || bound >= best_value_)
                return;

            const BigInt f = floor_of(u(branch));
            Node down{node.lo, node.hi, bound};
            down.hi(branch) = f;
            Node up{node.lo, node.hi, bound};
            up.lo(branch) = f + 1;
            // The child on the rounding side is explored first.
            if (rounded(branch) == f)
            {
                open.push_back(std::move(up));
                open.push_back(std::move(down));
            }
            else
            {
                open.push_back(std::move(down));
                open.push_back(std::move(up));
            }
        }
};

NormReport integral_norm_impl(const HomologyClass& a, const IntegralOptions& options,
                              const Rational& rational_value)
{
    if (options.box < 0)
        throw std::invalid_argument("integral_norm: box bound must be nonnegative");
    if (options.node_budget <= 0)
        throw std::invalid_argument("integral_norm: node budget must be positive");
    const ClassData data = class_data(a);

    BigInt global_lower = ceil_of(rational_value);
    if (!a.is_zero() && global_lower < 1)
        global_lower = 1;

    BranchAndBound search(data, options, global_lower);
    search.run();

    BigInt lower = global_lower;
    if (search.best_value_ > global_lower)
    {
        BigInt outside = search.outside_lower_bound();
        lower = std::max(lower, std::min(search.inside_lower_, outside));
    }

    NormReport report;
    report.kind = NormReport::Kind::integral;
    report.interval.lower = lower;
    report.interval.upper = search.best_value_;
    report.interval.status = lower == search.best_value_ ? SearchStatus::exact : SearchStatus::truncated;
    report.value = Rational(search.best_value_);
    const IntVector z = data.z0 + data.B * search.best_u_;
    report.optimal_cycle = to_rational_chain(IntChain::from_dense(data.complex, data.degree, z));
    report.stats.nodes = search.nodes_;
    report.stats.iterations = search.iterations_;
    report.box = options.box;
    report.box_complete = search.complete_;
    return report;
}

Rational rational_value(const HomologyClass& a)
{
    const ClassData data = class_data(a);
    const auto sol = solve_lp(free_program(data.B_q, to_rational(data.z0)).lp);
    return sol.objective;
}

}  // namespace

NormReport integral_norm(const HomologyClass& a, const IntegralOptions& options)
{
    return integral_norm_impl(a, options, rational_value(a));
}

bool NormSequence::any_truncated() const
{
    return std::any_of(entries.begin(), entries.end(),
                       [](const IntegralInterval& e) { return e.status == SearchStatus::truncated; });
}

NormSequence norm_sequence(const HomologyClass& a, Index window, const SequenceOptions& options)
{
    if (window < 1)
        throw std::invalid_argument("norm_sequence: window must be at least 1");
    NormSequence seq{a, rational_value(a), {}, {}, 0, 1, {}, {}};

    std::vector<NormReport> reports(window);
    std::atomic<Index> next{0};
    auto worker = [&]() {
        for (Index i = next++; i < window; i = next++)
        {
            const BigInt d = i + 1;
            IntegralOptions opts = options.integral;
            if (options.scale_box)
                opts.box = opts.box * d;
            // The LP value scales exactly: |d a|_1 = d |a|_1.
            reports[i] = integral_norm_impl(scale_class(d, a), opts, seq.rational * Rational(d));
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(window)));
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    for (Index i = 0; i < window; ++i)
    {
        const auto& rep = reports[i];
        seq.entries.push_back(rep.interval);
        seq.cycles.push_back(to_integer_chain(rep.optimal_cycle));
        seq.stats.nodes += rep.stats.nodes;
        seq.stats.iterations += rep.stats.iterations;
        const Rational ratio = Rational(rep.interval.upper) / Rational(i + 1);
        if (i == 0 || ratio < seq.stable_estimate)
        {
            seq.stable_estimate = ratio;
            seq.stable_argmin = i + 1;
        }
        if (rep.interval.upper <= reports[0].interval.upper)
            seq.bounded_subsequence.push_back(i + 1);
    }
    return seq;
}

StableNorm stable_norm(const HomologyClass& a, Index window, const SequenceOptions& options)
{
    NormSequence seq = norm_sequence(a, window, options);
    StableNorm out{seq.stable_estimate, seq.rational, std::move(seq)};
    return out;
}

}  // namespace l1top
