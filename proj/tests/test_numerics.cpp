#include <doctest.h>

#include <cmath>

#include "pfflab/numerics.hpp"
#include "pfflab/rng.hpp"

using namespace pfflab;

namespace {
const PrecisionConfig P50(50, 4000);
const PrecisionConfig P30(30, 4000);

// Independent oracle for zeta(3): Chebyshev-accelerated alternating series
// summed in exact rational arithmetic. For totally monotone terms the
// estimate after n steps is within 2/T_n(3) of eta(3).
mpq_class eta3_oracle(long n, mpq_class& err) {
    mpz_class t0(1), t1(3), tmp;
    for (long i = 1; i < n; ++i) {
        tmp = 6 * t1 - t0;
        t0 = t1;
        t1 = tmp;
    }
    mpz_class d = (n == 0) ? t0 : t1;
    mpq_class b(-1), c(0), s(0);
    c = -mpq_class(d);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        mpz_class kp1(k + 1);
        mpq_class ak(mpz_class(1), kp1 * kp1 * kp1);
        ak.canonicalize();
        s += c * ak;
        mpq_class f(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1));
        f.canonicalize();
        b *= f;
    }
    err = mpq_class(2, d);
    err.canonicalize();
    return s / mpq_class(d);
}
} // namespace

TEST_CASE("gamma at classical points") {
    mpfr_prec_t p = P50.bits();
    Ball g1 = gamma_real(Ball::exact_si(1, p), P50);
    CHECK(g1.contains_si(1));
    CHECK(g1.radius_d() < 1e-45);

    Ball g5 = gamma_real(Ball::exact_si(5, p), P50);
    CHECK(g5.contains_si(24));

    Ball ghalf = gamma_real(Ball::exact_d(0.5, p), P50);
    CHECK(ghalf.overlaps(Ball::pi(p).sqrt()));
    CHECK((ghalf * ghalf).overlaps(Ball::pi(p)));
}

TEST_CASE("gamma recurrence and negative arguments") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        double x = rng.uniform(0.1, 20.0);
        mpfr_prec_t p = P30.bits();
        Ball xb = Ball::exact_d(x, p);
        Ball lhs = gamma_real(xb.add_si(1), P30);
        Ball rhs = xb * gamma_real(xb, P30);
        CHECK(lhs.overlaps(rhs));
    }
    // Gamma(-1.5) = 4 sqrt(pi) / 3
    mpfr_prec_t p = P50.bits();
    Ball gneg = gamma_real(Ball::exact_d(-1.5, p), P50);
    Ball expect = Ball::pi(p).sqrt().mul_si(4).div_si(3);
    CHECK(gneg.overlaps(expect));
}

TEST_CASE("gamma pole proximity") {
    mpfr_prec_t p = P30.bits();
    CHECK_THROWS_AS(gamma_real(Ball(p), P30), domain_error);                         // 0
    CHECK_THROWS_AS(gamma_real(Ball::exact_si(-3, p), P30), domain_error);           // -3
    CHECK_THROWS_AS(gamma_real(Ball::exact_d(-2.0 + 1e-40, p), P30), domain_error);  // near -2
}

TEST_CASE("zeta classical identities") {
    mpfr_prec_t p = P50.bits();
    Ball z2 = zeta_real(Ball::exact_si(2, p), P50);
    Ball pi2_6 = (Ball::pi(p) * Ball::pi(p)).div_si(6);
    CHECK(z2.overlaps(pi2_6));
    CHECK(z2.radius_d() < 1e-45);

    Ball z0 = zeta_real(Ball(p), P50);
    CHECK(z0.overlaps(Ball::exact_si(-1, p).mul_2si(-1)));  // -1/2

    Ball zm1 = zeta_real(Ball::exact_si(-1, p), P50);
    CHECK(zm1.overlaps(Ball::from_mpq(mpq_class(-1, 12), p)));

    // trivial zero: zeta(-2) is enclosed around 0 with a tiny radius
    Ball zm2 = zeta_real(Ball::exact_si(-2, p), P50);
    CHECK(zm2.contains_zero());
    CHECK(zm2.radius_d() < 1e-40);
}

TEST_CASE("zeta(3) against the exact-rational accelerated-series oracle") {
    // frozen value computed by the oracle below (Apery's constant, 50 digits)
    const char* frozen = "1.2020569031595942853997381615114499907649862923405";
    mpfr_prec_t p = P50.bits();

    mpq_class err;
    mpq_class eta = eta3_oracle(75, err);
    Ball oracle = Ball::from_mpq(eta, p);
    oracle.add_error(Ball::from_mpq(err, p));
    oracle = oracle * Ball::from_mpq(mpq_class(4, 3), p);  // zeta = eta/(1 - 2^{-2})

    Ball impl = zeta_real(Ball::exact_si(3, p), P50);
    Ball pinned = Ball::from_str(frozen, p);
    pinned.add_error_d(1e-49);

    CHECK(impl.overlaps(oracle));
    CHECK(impl.overlaps(pinned));
    CHECK(oracle.overlaps(pinned));
    CHECK(impl.radius_d() < 1e-45);
}

TEST_CASE("zeta pole guard") {
    mpfr_prec_t p = P30.bits();
    CHECK_THROWS_AS(zeta_real(Ball::exact_si(1, p), P30), domain_error);
    CHECK_THROWS_AS(zeta_real(Ball::exact_d(1.0 + 1e-30, p), P30), domain_error);
}

TEST_CASE("(s-1) zeta(s) through the pole") {
    mpfr_prec_t p = P50.bits();
    // limit value at s=1 is exactly 1
    Ball at1 = zeta_times_sm1(Ball::exact_si(1, p), P50);
    CHECK(at1.contains_si(1));
    CHECK(at1.radius_d() < 1e-40);
    // near the pole both routes agree
    Ball s = Ball::exact_d(1.125, p);
    Ball direct = zeta_times_sm1(s, P50);
    Ball via_eta = (s.add_si(-1)) * zeta_real(s, P50);
    CHECK(direct.overlaps(via_eta));
}

TEST_CASE("xi at simple points") {
    mpfr_prec_t p = P50.bits();
    Ball xi0 = xi_real(Ball(p), P50);
    CHECK(xi0.overlaps(Ball::exact_si(1, p).mul_2si(-1)));  // 1/2
    CHECK(xi0.radius_d() < 1e-44);

    Ball xi1 = xi_real(Ball::exact_si(1, p), P50);
    CHECK(xi1.overlaps(Ball::exact_si(1, p).mul_2si(-1)));  // xi(1) = xi(0)

    Ball xi2 = xi_real(Ball::exact_si(2, p), P50);
    CHECK(xi2.overlaps(Ball::pi(p).div_si(6)));  // pi/6

    // cross-branch functional equation: xi(3) = xi(-2)
    Ball a = xi_real(Ball::exact_si(3, p), P50);
    Ball b = xi_real(Ball::exact_si(-2, p), P50);
    CHECK(a.overlaps(b));
    CHECK((a - b).contains_zero());
}

TEST_CASE("xi symmetry on random points") {
    Rng rng(1234);
    for (int i = 0; i < 1000; ++i) {
        double s = rng.uniform(-10.0, 11.0);
        mpfr_prec_t p = P30.bits();
        Ball sb = Ball::exact_d(s, p);
        Ball l = xi_real(sb, P30);
        Ball r = xi_real(Ball::exact_si(1, p) - sb, P30);  // exact reflection
        CHECK((l - r).contains_zero());  // |difference| <= sum of radii
    }
}

TEST_CASE("xi positivity on [-30, 30]") {
    for (int k = -60; k <= 60; ++k) {
        double s = k * 0.5;
        Ball v = xi_real(Ball::exact_d(s, P30.bits()), P30);
        CHECK(v.is_positive());
    }
}

TEST_CASE("xi growth along the positive axis") {
    // ln xi(s) ~ (1/2) s ln s with slowly decaying lower-order terms: the
    // ratio sits well below 1/2 at desk scale and increases monotonically
    double prev = 0;
    for (double s : {50.0, 100.0, 150.0, 200.0}) {
        Ball v = xi_real(Ball::exact_d(s, P30.bits()), P30);
        double ratio = std::log(v.center_d()) / (s * std::log(s));
        CHECK(ratio > 0.12);
        CHECK(ratio < 0.5);
        CHECK(ratio > prev);
        prev = ratio;
    }
}

TEST_CASE("xi inclusion under precision escalation") {
    for (double s : {-7.25, 0.5, 3.0, 14.5}) {
        Ball lo = xi_real(Ball::exact_d(s, P30.bits()), P30);
        Ball hi = xi_real(Ball::exact_d(s, P50.bits()), P50);
        CHECK(lo.contains(hi));
    }
}

TEST_CASE("zeta inclusion under precision escalation") {
    for (double s : {-3.5, 0.25, 1.5, 5.0}) {
        Ball lo = zeta_real(Ball::exact_d(s, P30.bits()), P30);
        Ball hi = zeta_real(Ball::exact_d(s, P50.bits()), P50);
        CHECK(lo.contains(hi));
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == mpq_class(1));
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    CHECK(bernoulli(3) == 0);
}
