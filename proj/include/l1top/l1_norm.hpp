#ifndef L1TOP_L1_NORM_HPP
#define L1TOP_L1_NORM_HPP

#include <optional>
#include <vector>

#include "l1top/homology.hpp"

namespace l1top
{

/**
 * A cochain phi on the n-cells with |phi|_inf <= 1 that vanishes on
 * boundaries. Its pairing with any representative of a class is a lower
 * bound for the class's l1-semi-norm; at an LP optimum the bound is tight.
 */
struct DualCertificate
{
    Chain cochain;      // values of phi, stored sparsely by cell
    Rational objective; // <phi, z0> for the representative it was built from
};

Rational pairing(const Chain& cochain, const IntChain& z);

/// Checks |phi|_inf <= 1, phi o d_{n+1} == 0 and that the stored objective
/// equals <phi, rep(a)>. Throws std::domain_error on a complex/degree mismatch.
bool verify_dual(const DualCertificate& cert, const HomologyClass& a);

enum class SearchStatus { exact, truncated };

struct NormStats
{
    Index iterations = 0;  // simplex pivots, all LPs included
    Index nodes = 0;       // branch-and-bound nodes (LP solves)
};

struct IntegralInterval
{
    BigInt lower = 0;
    BigInt upper = 0;
    SearchStatus status = SearchStatus::exact;
};

struct NormReport
{
    enum class Kind { rational, integral, stable };
    Kind kind = Kind::rational;

    Rational value;                          // rational kind
    IntegralInterval interval;               // integral kind
    Chain optimal_cycle;                     // attains value / interval.upper
    std::optional<DualCertificate> dual;
    NormStats stats;

    // integral kind: outcome of the search inside the box |u_i| <= box
    BigInt box = 0;
    bool box_complete = false;
    // rational kind, when the degenerate-simplex probe ran
    std::optional<Rational> degenerate_probe_value;
};

struct RationalOptions
{
    bool degenerate_probe = false;
};

struct IntegralOptions
{
    BigInt box = 2;
    Index node_budget = 20000;
};

/// inf |z0 + d u|_1 over rational (n+1)-chains u, with an optimal cycle
/// (lexicographically least among optimal ones) and a dual certificate.
NormReport rational_norm(const HomologyClass& a, const RationalOptions& options = {});

/**
 * inf |z0 + d u|_1 over integral u, as an interval [lower, upper].
 *
 * Branch and bound searches the box |u_i| <= box; `upper` is the best cycle
 * found. `lower` is a global bound: the ceiling of the rational norm, 1 for
 * nonzero classes, and the box optimum once LPs over the region outside the
 * box show nothing there can do better. Status is exact iff lower == upper.
 */
NormReport integral_norm(const HomologyClass& a, const IntegralOptions& options = {});

struct SequenceOptions
{
    IntegralOptions integral;
    /// The search box for d * a is d * integral.box (it contains d times any
    /// minimizer found for a).
    bool scale_box = true;
    unsigned threads = 1;
};

struct NormSequence
{
    HomologyClass target;
    Rational rational;                      // rational norm of the class
    std::vector<IntegralInterval> entries;  // entries[d-1] for d * a
    std::vector<IntChain> cycles;           // attaining entries[d-1].upper
    Rational stable_estimate;               // min_d upper_d / d
    Index stable_argmin = 1;
    std::vector<Index> bounded_subsequence; // d with upper_d <= upper_1
    NormStats stats;

    bool any_truncated() const;
    /// Some d >= 2 satisfies upper_d <= upper_1 inside the window.
    bool bounded_subsequence_detected() const { return bounded_subsequence.size() > 1; }
};

NormSequence norm_sequence(const HomologyClass& a, Index window, const SequenceOptions& options = {});

struct StableNorm
{
    Rational estimate;   // min_{d <= D} upper(|d a|_Z) / d
    Rational rational;   // |a|_1
    NormSequence sequence;
};

StableNorm stable_norm(const HomologyClass& a, Index window, const SequenceOptions& options = {});

}  // namespace l1top

#endif
