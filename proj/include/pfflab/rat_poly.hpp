#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pfflab/ball.hpp"

namespace pfflab {

// Dense univariate polynomial over Q. Coefficients are c[i] * x^i; the
// leading coefficient of a normalized nonzero polynomial is nonzero.
struct RatPoly {
    std::vector<mpq_class> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { normalize(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const mpq_class& v);
    static RatPoly monomial(const mpq_class& v, int k);

    void normalize();  // strip leading zeros
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const mpq_class& leading() const;

    mpq_class eval(const mpq_class& x) const;
    Ball eval_ball(const Ball& x, mpfr_prec_t prec) const;

    RatPoly derivative() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    RatPoly scaled(const mpq_class& v) const;
    bool operator==(const RatPoly& o) const { return c == o.c; }

    // divide by integer content and make leading coefficient positive
    RatPoly primitive_part() const;
    // divide by |content| only: keeps the sign (Sturm chains need it)
    RatPoly content_normalized() const;

    std::string str() const;
};

// polynomial remainder (exact over Q)
RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b);
RatPoly rat_poly_gcd(const RatPoly& a, const RatPoly& b);  // primitive gcd

// distinct real roots in (a, b]; half-open per the classical Sturm count
int sturm_count_interval(const RatPoly& p, const mpq_class& a, const mpq_class& b);
// distinct real roots on all of R
int sturm_count_all(const RatPoly& p);

// number of real roots counted with multiplicity (gcd chain + Sturm)
int real_root_count_exact(const RatPoly& p);

bool all_roots_real_exact(const RatPoly& p);
// all roots real and <= 0 (precondition of the multiplier-sequence test)
bool roots_real_nonpositive_exact(const RatPoly& p);

// a rational bound B with all complex roots inside |z| < B (Cauchy bound)
mpq_class cauchy_root_bound(const RatPoly& p);

} // namespace pfflab
