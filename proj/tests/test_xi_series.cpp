#include <doctest.h>

#include <cmath>

#include "pfflab/numerics.hpp"

using namespace pfflab;

namespace {
const PrecisionConfig P30(30, 4000);
const PrecisionConfig P50(50, 4000);

// Chebyshev-fit oracle for a_2 = xi''(1/2)/2: interpolate xi(1/2+u) on
// [-h, h] at doubled precision and read off the u^2 coefficient.
Ball chebyshev_a2_oracle(const PrecisionConfig& base) {
    PrecisionConfig pr = base.with_digits(2 * base.digits);
    mpfr_prec_t p = pr.bits();
    const int D = 36;
    const mpq_class h(1, 4);

    // samples at Chebyshev points u_i = h cos(theta_i)
    std::vector<Ball> f;
    std::vector<Ball> cosv;
    Ball pi = Ball::pi(p);
    Ball half = Ball::exact_si(1, p).mul_2si(-1);
    for (int i = 0; i < D; ++i) {
        Ball theta = pi * Ball::from_mpq(mpq_class(2 * i + 1, 2 * D), p);
        Ball cu = theta.cos();
        cosv.push_back(cu);
        Ball u = Ball::from_mpq(h, p) * cu;
        f.push_back(xi_real(half + u, pr));
    }
    // Chebyshev coefficients c_k = (2/D) sum f_i T_k(cos theta_i); the x^2
    // monomial coefficient of T_k accumulates via the recurrence
    Ball a2(p);
    std::vector<mpq_class> Tprev{mpq_class(1)}, Tcur{mpq_class(0), mpq_class(1)};
    std::vector<Ball> tk_prev = std::vector<Ball>(D, Ball::exact_si(1, p));
    std::vector<Ball> tk_cur = cosv;
    for (int k = 0; k <= D - 1; ++k) {
        const std::vector<mpq_class>& T = (k == 0) ? Tprev : Tcur;
        Ball ck(p);
        for (int i = 0; i < D; ++i) ck += f[i] * ((k == 0) ? tk_prev[i] : tk_cur[i]);
        ck = ck.mul_2si(1).div_si(D);
        if (k == 0) ck = ck.mul_2si(-1);
        if (T.size() >= 3 && T[2] != 0) a2 += ck * Ball::from_mpq(T[2] / (h * h), p);
        // advance T_{k+1} = 2x T_k - T_{k-1} and the sampled values
        if (k >= 1) {
            std::vector<mpq_class> Tnext(Tcur.size() + 1, mpq_class(0));
            for (std::size_t j = 0; j < Tcur.size(); ++j) Tnext[j + 1] += 2 * Tcur[j];
            for (std::size_t j = 0; j < Tprev.size(); ++j) Tnext[j] -= Tprev[j];
            Tprev = Tcur;
            Tcur = Tnext;
            for (int i = 0; i < D; ++i) {
                Ball next = cosv[i] * tk_cur[i].mul_2si(1) - tk_prev[i];
                tk_prev[i] = tk_cur[i];
                tk_cur[i] = next;
            }
        }
    }
    return a2;
}

// central finite-difference oracle with one Richardson step
Ball fd_a2_oracle(const PrecisionConfig& base) {
    PrecisionConfig pr = base.with_digits(2 * base.digits);
    mpfr_prec_t p = pr.bits();
    Ball half = Ball::exact_si(1, p).mul_2si(-1);
    auto second_diff = [&](long e) {
        Ball h = Ball::exact_si(1, p).mul_2si(-e);
        Ball fp = xi_real(half + h, pr);
        Ball f0 = xi_real(half, pr);
        Ball fm = xi_real(half - h, pr);
        return (fp - f0.mul_2si(1) + fm) / (h * h);
    };
    Ball d1 = second_diff(10), d2 = second_diff(11);
    return (d2.mul_si(16) - d1).div_si(15).mul_2si(-1);  // a_2 = f''/2
}
} // namespace

TEST_CASE("theta kernel psi") {
    mpfr_prec_t p = P50.bits();
    Ball v = theta_psi(Ball::exact_si(1, p), P50);
    Ball ref = Ball::from_str("0.04321740560665400728765806075511172853510285362261", p);
    ref.add_error_d(1e-49);
    CHECK(v.overlaps(ref));
    CHECK(v.radius_d() < 1e-45);
}

TEST_CASE("xi series: coefficient 0 equals xi(1/2) across two routes") {
    PowerSeries s = xi_series_at_half(4, P50);
    mpfr_prec_t p = P50.bits();
    // theta-kernel route vs the Gamma/zeta route: fully independent stacks
    Ball via_xi = xi_real(Ball::exact_d(0.5, p), P50);
    CHECK(s[0].overlaps(via_xi));
    CHECK(s[0].is_positive());
    CHECK(s[0].radius_d() < 1e-40);

    Ball frozen = Ball::from_str("0.49712077818831410991277373968539771980729360955771", p);
    frozen.add_error_d(1e-49);
    CHECK(s[0].overlaps(frozen));
}

TEST_CASE("xi series: odd coefficients are exactly zero") {
    PowerSeries s = xi_series_at_half(9, P30);
    for (std::size_t k = 1; k < s.size(); k += 2) {
        CHECK(s[k].contains_zero());
        CHECK(s[k].is_exact());
    }
}

TEST_CASE("xi series: coefficient 2 against the Chebyshev-fit oracle") {
    PowerSeries s = xi_series_at_half(4, P30);
    Ball a2 = s[2] / factorial_ball(2, P30.bits());
    CHECK(a2.is_positive());

    Ball oracle = chebyshev_a2_oracle(P30);
    double diff = (a2 - oracle).mag_d();
    CHECK(diff < 1e-25);

    Ball frozen = Ball::from_str("0.011485972157572718767624938248816085132296506918795", P30.bits());
    frozen.add_error_d(1e-30);
    CHECK(a2.overlaps(frozen));
}

TEST_CASE("xi series: finite-difference cross-check") {
    PowerSeries s = xi_series_at_half(2, P30);
    Ball a2 = s[2] / factorial_ball(2, P30.bits());
    Ball fd = fd_a2_oracle(P30);
    CHECK(std::fabs(a2.center_d() - fd.center_d()) < 1e-9);
}

TEST_CASE("xi series: coefficient cap and degenerate input") {
    CHECK_THROWS_AS(xi_series_at_half(30, P30), invalid_argument);
    PowerSeries s = xi_series_at_half(0, P30);
    CHECK(s.size() == 1);
}

TEST_CASE("xi1 series: positivity and the xi(1/2) anchor") {
    PowerSeries x1 = xi1_series(8, P50, 24);
    REQUIRE(x1.size() == 9);
    for (std::size_t m = 0; m < x1.size(); ++m) CHECK(x1[m].is_positive());
    // beta_0 = Xi_1(0) = xi(1/2)
    Ball xi_half = xi_real(Ball::exact_d(0.5, P50.bits()), P50);
    CHECK(x1[0].overlaps(xi_half));

    // a_4 = beta_2 / 2! sanity against an external reference
    Ball a4 = x1[2].mul_2si(-1);
    Ball frozen = Ball::from_str("0.00012345201807031800689034579149485113813599349651", P50.bits());
    frozen.add_error_d(1e-40);
    CHECK(a4.overlaps(frozen));
}

TEST_CASE("xi1 series evaluated at sigma^2 reproduces xi(1/2+sigma)") {
    // Xi_1(sigma^2) = xi(1/2 + sigma) on the real axis
    PrecisionConfig pr = P30;
    int N = 10;
    PowerSeries x1 = xi1_series(N, pr, 24);
    mpfr_prec_t p = pr.bits();
    for (double sigma : {0.25, 0.5}) {
        Ball v = Ball::exact_d(sigma, p);
        Ball arg = v * v;
        // series truncation tail: coefficients a_{2m} decay fast; bound the
        // remainder by twice the last term magnitude
        Ball total(p);
        Ball power = Ball::exact_si(1, p);
        Ball last(p);
        for (int m = 0; m <= N; ++m) {
            Ball am = x1[m] / factorial_ball(m, p);
            last = am * power;
            total += last;
            power = power * arg;
        }
        total.add_error_d(last.mag_d() * 2.0);
        Ball direct = xi_real(Ball::exact_d(0.5 + sigma, p), pr);
        CHECK((total - direct).contains_zero());
    }
}

TEST_CASE("xi1 degenerate truncation") {
    PowerSeries x1 = xi1_series(0, P30, 24);
    CHECK(x1.size() == 1);
    CHECK(x1[0].is_positive());
}

TEST_CASE("xi series inclusion under precision escalation") {
    PowerSeries lo = xi_series_at_half(6, P30);
    PowerSeries hi = xi_series_at_half(6, P50);
    for (std::size_t k = 0; k < lo.size(); ++k) CHECK(lo[k].contains(hi[k]));
}
