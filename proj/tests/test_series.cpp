#include <doctest.h>

#include "pfflab/power_series.hpp"
#include "pfflab/rng.hpp"

using namespace pfflab;

namespace {
constexpr mpfr_prec_t P = 200;

PowerSeries ones(std::size_t n) {
    PowerSeries ps;
    for (std::size_t i = 0; i < n; ++i) ps.coeffs.push_back(Ball::exact_si(1, P));
    return ps;
}

PowerSeries one_plus_s(std::size_t n) {
    PowerSeries ps;
    ps.coeffs.push_back(Ball::exact_si(1, P));
    ps.coeffs.push_back(Ball::exact_si(1, P));
    for (std::size_t i = 2; i < n; ++i) ps.coeffs.push_back(Ball(P));
    return ps;
}
} // namespace

TEST_CASE("reciprocal of 1+s is exactly (-1)^j j!") {
    PowerSeries r = series_reciprocal(one_plus_s(9));
    mpz_class f(1);
    for (int j = 0; j < 9; ++j) {
        if (j > 0) f *= j;
        Ball expect = Ball::from_mpz(j % 2 == 0 ? f : -f, P);
        CHECK(r[j].is_exact());
        CHECK(r[j].cmp_center(expect) == 0);
    }
}

TEST_CASE("reciprocal of the exponential series alternates") {
    // 1/e^s = e^{-s}: beta_j = (-1)^j
    PowerSeries r = series_reciprocal(ones(10));
    for (int j = 0; j < 10; ++j) {
        CHECK(r[j].is_exact());
        CHECK(r[j].contains_si(j % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("reciprocal is an involution within radii") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        PowerSeries ps;
        ps.coeffs.push_back(Ball::exact_d(rng.uniform(0.5, 3.0), P));
        for (int j = 1; j < 8; ++j) ps.coeffs.push_back(Ball::exact_d(rng.uniform(-2, 2), P));
        PowerSeries back = series_reciprocal(series_reciprocal(ps));
        for (int j = 0; j < 8; ++j) CHECK((back[j] - ps[j]).contains_zero());
    }
}

TEST_CASE("reciprocal requires a nonzero constant term") {
    PowerSeries ps = ones(4);
    ps[0] = Ball(P);  // exactly zero
    CHECK_THROWS_AS(series_reciprocal(ps), domain_error);
    ps[0] = Ball::zero_pm_d(1e-3, P);  // straddles zero
    CHECK_THROWS_AS(series_reciprocal(ps), domain_error);
}

TEST_CASE("product inverse identity") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeries ps;
        ps.coeffs.push_back(Ball::exact_d(rng.uniform(0.5, 2.0), P));
        for (int j = 1; j < 7; ++j) ps.coeffs.push_back(Ball::exact_d(rng.uniform(-3, 3), P));
        PowerSeries prod = series_mul(ps, series_reciprocal(ps));
        CHECK(prod[0].contains_si(1));
        for (int j = 1; j < 7; ++j) CHECK(prod[j].contains_zero());
    }
}

TEST_CASE("series_exp inverts a log series") {
    // exp of L(s) = s gives the exponential series: beta_j = 1
    PowerSeries l;
    l.coeffs.push_back(Ball(P));
    l.coeffs.push_back(Ball::exact_si(1, P));
    for (int j = 2; j < 10; ++j) l.coeffs.push_back(Ball(P));
    PowerSeries e = series_exp(l);
    for (int j = 0; j < 10; ++j) CHECK(e[j].contains_si(1));
}

TEST_CASE("series evaluation matches closed form") {
    // exp series at s = 0.5 is e^{0.5}
    Ball v = ones(40).eval(Ball::exact_d(0.5, P));
    Ball expect = Ball::exact_d(0.5, P).exp();
    // truncation after 40 terms is far below the comparison slack
    v.add_error_d(1e-46);
    CHECK(v.overlaps(expect));
}

TEST_CASE("exact view round trips rationals") {
    PowerSeries ps = one_plus_s(5);
    auto ex = ps.exact_view();
    REQUIRE(ex.has_value());
    CHECK((*ex)[0] == 1);
    CHECK((*ex)[1] == 1);
    CHECK((*ex)[2] == 0);

    ps[2].add_error_d(1e-30);
    CHECK(!ps.exact_view().has_value());
}
