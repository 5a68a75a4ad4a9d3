#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/linalg.hpp"
#include "pfflab/polyzero.hpp"
#include "pfflab/power_series.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/rat_poly.hpp"
#include "pfflab/verdict.hpp"

namespace pfflab {

// Lazily evaluable real constant (precision chosen at use time).
using ConstFn = std::function<Ball(mpfr_prec_t)>;

ConstFn rational_const(const mpq_class& q);
ConstFn euler_gamma_const();
ConstFn rational_over_4pi_const(const mpq_class& q);  // q / (4 pi)
ConstFn pi_sq_over_6_const();

// Structured description of the zeros beyond the stored prefix:
// delta_j = 1/j^power for integer j >= start (optionally in +/- pairs).
// The tail contributions to evaluation and Taylor data are summed rigorously
// through integer zeta values.
struct ZeroTail {
    enum class Kind { None, PowerReciprocal };
    Kind kind = Kind::None;
    int power = 1;
    long start = 1;
    bool paired = false;
};

// Hadamard data of a Laguerre-Polya class member:
//   Psi(s) = C s^m exp(-gamma s^2 + delta s) prod_j (1 + delta_j s) e^{-delta_j s}
// subject to 0 < gamma + sum delta_j^2 < infinity. Zeros are stored as the
// reciprocal-zero values delta_j, exact rationals; an optional structured
// tail covers infinite zero sets.
struct LPFactorization {
    mpq_class C = 1;
    int m = 0;
    ConstFn gamma;  // null means 0
    ConstFn delta;  // null means 0
    bool gamma_positive = false;
    std::vector<mpq_class> zeros;  // paired layout: +d, -d adjacent
    bool paired = false;
    ZeroTail tail;
    double tail_sq_bound = 0.0;   // upper bound on sum_{tail} delta_j^2 (generic path)
    double tail_delta_max = 0.0;  // sup |delta_j| over the generic tail

    void validate() const;
    long stored_zero_groups() const { return paired ? static_cast<long>(zeros.size()) / 2
                                                    : static_cast<long>(zeros.size()); }
};

// One-sided variant: Psi(s) = C e^{delta s} prod_j (1 + delta_j s) with
// delta_j >= 0 and finite sum of delta_j.
struct OneSidedFactorization {
    mpq_class C = 1;
    ConstFn delta;
    std::vector<mpq_class> zeros;
    double tail_sum_bound = 0.0;

    void validate() const;
    LPFactorization to_lp() const;  // finite zero sets only
};

// Psi(s) for real s with the omitted-zero tail folded into the radius.
Ball lp_eval(const LPFactorization& fac, const Ball& s, const PrecisionConfig& prec);

// C s^m prod_{j<=n groups}(1 + delta_j s), exponential factors dropped;
// all roots real by construction. n counts zero pairs when paired.
RatPoly lp_truncate(const LPFactorization& fac, long n);

// First N+1 factorial-normalized Taylor coefficients of Psi (m = 0 required).
// Coefficients are exact Taylor data of the full (infinite) product, with
// the tail power sums enclosed via integer zeta values.
PowerSeries lp_series(const LPFactorization& fac, int N, const PrecisionConfig& prec);

// Jensen polynomials: p_n(x) = sum_j beta_j C(n,j) x^j and its reversal.
std::pair<Polynomial, Polynomial> jensen(const PowerSeries& ps, int n);

// Turan expressions Delta_n = beta_n^2 - beta_{n-1} beta_{n+1}, 1 <= n <= N-1.
std::vector<Ball> turan_deltas(const PowerSeries& ps);

struct PsdResult {
    Verdict3 verdict = Verdict3::Undecided;
    Ball min_eigenvalue;
};

// Hankel matrix (gamma_{j+k})_{j,k<n} built from the factorial-normalized
// coefficients of the reciprocal series (which are exactly the gamma_j of
// 1/Psi = sum gamma_j s^j / j!).
PsdResult hankel_psd(const PowerSeries& reciprocal_series, int n, const PrecisionConfig& prec);

// q(x) = sum beta_j c_j x^j. When p is exact, the only-real-non-positive-zeros
// precondition is checked and a certified failure throws.
Polynomial multiplier_apply(const PowerSeries& ps, const Polynomial& p);

// q = sum_j coeffs[j]/j! p^(j)(x)  (the series differential operator).
Polynomial apply_series_operator(const PowerSeries& ps, const Polynomial& p);

struct MinorScan {
    Verdict3 verdict = Verdict3::Undecided;
    Ball worst_minor;
    std::vector<int> worst_rows, worst_cols;
    long evaluated = 0;
    long undecided = 0;
    bool exhaustive = false;
};

// Minors of order <= max_order of the upper-triangular Toeplitz matrix
// A_{jk} = a_{k-j} over the index window covered by a. All minors when the
// count at an order stays within `trials`, a seeded sample otherwise.
MinorScan pf_sequence_minors(const std::vector<Ball>& a, int max_order, long trials,
                             uint64_t seed);

} // namespace pfflab
