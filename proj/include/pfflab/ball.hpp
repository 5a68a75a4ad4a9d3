#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "pfflab/errors.hpp"
#include "pfflab/precision.hpp"

namespace pfflab {

// An extended-precision real with a certified absolute error radius.
//
// The center is an MPFR float at the working precision; the radius is an
// MPFR float at a fixed small precision that is always rounded upward, so
// every operation produces an enclosure of the true result (inclusion
// monotonicity). Exactness is tracked: operations on radius-zero inputs
// that MPFR reports as exact keep radius zero.
class Ball {
public:
    static constexpr mpfr_prec_t kRadiusPrec = 32;

    explicit Ball(mpfr_prec_t prec = 64);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    // --- construction -----------------------------------------------------
    static Ball exact_si(long v, mpfr_prec_t prec);
    static Ball exact_ui(unsigned long v, mpfr_prec_t prec);
    static Ball exact_d(double v, mpfr_prec_t prec);
    static Ball from_mpq(const mpq_class& q, mpfr_prec_t prec);
    static Ball from_mpz(const mpz_class& z, mpfr_prec_t prec);
    // Decimal string; enclosure of the written value.
    static Ball from_str(const std::string& s, mpfr_prec_t prec);
    static Ball from_mpfr(const mpfr_t x, mpfr_prec_t prec);
    static Ball from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);
    // [-eps, +eps]
    static Ball zero_pm(const Ball& eps);
    static Ball zero_pm_d(double eps, mpfr_prec_t prec);

    static Ball pi(mpfr_prec_t prec);
    static Ball euler_gamma(mpfr_prec_t prec);
    static Ball ln2(mpfr_prec_t prec);

    // --- arithmetic (enclosure-preserving) ---------------------------------
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);  // throws domain_error if 0 in b
    Ball operator-() const;

    Ball& operator+=(const Ball& b) { *this = *this + b; return *this; }
    Ball& operator-=(const Ball& b) { *this = *this - b; return *this; }
    Ball& operator*=(const Ball& b) { *this = *this * b; return *this; }
    Ball& operator/=(const Ball& b) { *this = *this / b; return *this; }

    Ball add_si(long v) const;
    Ball mul_si(long v) const;
    Ball div_si(long v) const;   // v != 0
    Ball mul_2si(long e) const;  // exact scale by 2^e
    Ball recip() const;          // throws domain_error if 0 in *this

    Ball abs() const;
    Ball sqrt() const;  // domain: lower() >= 0
    Ball exp() const;
    Ball log() const;   // domain: lower() > 0
    Ball sin() const;
    Ball cos() const;
    Ball sinh() const;
    Ball cosh() const;
    Ball tanh() const;
    Ball pow_si(long n) const;
    Ball pow(const Ball& e) const;  // base must be certified > 0

    // Widen the radius by |err|.
    void add_error(const Ball& err);
    void add_error_d(double err);
    void add_error_2si(long e);  // radius += 2^e

    // --- predicates ---------------------------------------------------------
    bool contains_zero() const;
    bool is_positive() const;   // certified: center - radius > 0
    bool is_negative() const;   // certified: center + radius < 0
    bool is_nonnegative() const;  // certified: center - radius >= 0
    bool is_exact() const;
    bool is_finite() const;
    // certified [lo,hi] containment of another ball's interval
    bool contains(const Ball& o) const;
    bool contains_si(long v) const;
    bool overlaps(const Ball& o) const;
    // certified ordering
    bool certainly_lt(const Ball& o) const;
    bool certainly_gt(const Ball& o) const;

    // --- access -------------------------------------------------------------
    mpfr_prec_t prec() const { return mpfr_get_prec(c_); }
    const mpfr_t& center() const { return c_; }
    const mpfr_t& radius() const { return r_; }
    double center_d() const { return mpfr_get_d(c_, MPFR_RNDN); }
    double radius_d() const { return mpfr_get_d(r_, MPFR_RNDU); }
    // directed endpoints at full precision (outward rounded)
    void lower(mpfr_t out) const;
    void upper(mpfr_t out) const;
    double lower_d() const;
    double upper_d() const;
    // upper bound of |x| over the ball, as a coarse double
    double mag_d() const;

    Ball round_to(mpfr_prec_t prec) const;  // re-round center, folding error into radius

    int cmp_center(const Ball& o) const { return mpfr_cmp(c_, o.c_); }

    std::string center_str(long digits) const;
    std::string radius_str() const;
    std::string str(long digits) const;  // "center +/- radius"

    // hull of two balls (used by quadrature level intersection/union logic)
    static Ball hull(const Ball& a, const Ball& b);
    // intersection; throws invalid_argument if disjoint
    static Ball intersect(const Ball& a, const Ball& b);

private:
    mpfr_t c_;
    mpfr_t r_;

    void bump_rounding(int ternary);
    static void rad_abs_upper(mpfr_t out, const mpfr_t x);
};

// convenience mixed operators
inline Ball operator*(const Ball& a, long v) { return a.mul_si(v); }
inline Ball operator*(long v, const Ball& a) { return a.mul_si(v); }

} // namespace pfflab
