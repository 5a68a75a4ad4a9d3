#include <doctest.h>

#include "pfflab/ball.hpp"
#include "pfflab/rng.hpp"

using namespace pfflab;

namespace {
constexpr mpfr_prec_t P = 200;

Ball rand_ball(Rng& rng, mpfr_prec_t p) {
    Ball b = Ball::exact_d(rng.uniform(-10, 10), p);
    if (rng.below(2)) b.add_error_d(rng.uniform(0, 1e-6));
    return b;
}
} // namespace

TEST_CASE("ball basics") {
    Ball one = Ball::exact_si(1, P);
    CHECK(one.is_exact());
    CHECK(one.is_positive());
    CHECK(!one.contains_zero());

    Ball third = Ball::exact_si(1, P) / Ball::exact_si(3, P);
    CHECK(!third.is_exact());  // 1/3 is not dyadic
    CHECK(third.contains(Ball::from_mpq(mpq_class(1, 3), P + 120)));

    Ball pi = Ball::pi(P);
    CHECK(pi.center_d() == doctest::Approx(3.14159265358979));
    CHECK(pi.radius_d() < 1e-55);
}

TEST_CASE("ball enclosure under arithmetic") {
    // interval soundness: f(x) for x in ball must stay inside the result ball
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        double xc = rng.uniform(-5, 5), yc = rng.uniform(-5, 5);
        double xr = rng.uniform(0, 0.01), yr = rng.uniform(0, 0.01);
        Ball x = Ball::exact_d(xc, P);
        x.add_error_d(xr);
        Ball y = Ball::exact_d(yc, P);
        y.add_error_d(yr);
        // a representative point inside each ball
        double xs = xc + 0.99 * xr, ys = yc - 0.99 * yr;
        Ball px = Ball::exact_d(xs, P), py = Ball::exact_d(ys, P);

        CHECK((x + y).contains(px + py));
        CHECK((x - y).contains(px - py));
        CHECK((x * y).contains(px * py));
        if (!y.contains_zero()) CHECK((x / y).contains(px / py));
        CHECK(x.exp().contains(px.exp()));
        CHECK(x.sin().contains(px.sin()));
        CHECK(x.cos().contains(px.cos()));
        CHECK(x.sinh().contains(px.sinh()));
        CHECK(x.cosh().contains(px.cosh()));
        CHECK(x.tanh().contains(px.tanh()));
        if (x.is_positive()) {
            CHECK(x.log().contains(px.log()));
            CHECK(x.sqrt().contains(px.sqrt()));
        }
    }
}

TEST_CASE("exactness tracking") {
    Ball a = Ball::exact_si(7, P);
    Ball b = Ball::exact_si(5, P);
    CHECK((a * b).is_exact());
    CHECK((a + b).is_exact());
    CHECK((a - b).is_exact());
    CHECK(a.mul_2si(-3).is_exact());
    // 7/5 is inexact in binary
    CHECK(!(a / b).is_exact());
}

TEST_CASE("identities hold within radii") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Ball x = rand_ball(rng, P);
        Ball y = rand_ball(rng, P);
        // (x + y) - y contains x
        CHECK(((x + y) - y).contains(x));
        // exp(log(z)) contains z for positive z
        Ball z = x.abs() + Ball::exact_si(1, P);
        CHECK(z.log().exp().contains(z));
        // sin^2 + cos^2 contains 1
        Ball s = x.sin(), c = x.cos();
        CHECK((s * s + c * c).contains_si(1));
    }
}

TEST_CASE("precision escalation tightens enclosures (inclusion)") {
    // recompute a composite expression at higher precision: result must lie
    // inside the lower-precision enclosure
    auto expr = [](mpfr_prec_t p) {
        Ball x = Ball::exact_si(3, p).sqrt() + Ball::pi(p).exp();
        return (x.log() * x.sin()).cosh();
    };
    Ball lo = expr(100);
    Ball hi = expr(300);
    CHECK(lo.contains(hi));
    CHECK(hi.radius_d() < lo.radius_d());
}

TEST_CASE("division by a ball containing zero throws") {
    Ball z = Ball::zero_pm_d(1e-3, P);
    CHECK_THROWS_AS(Ball::exact_si(1, P) / z, domain_error);
    CHECK_THROWS_AS(z.recip(), domain_error);
    CHECK_THROWS_AS((-Ball::exact_si(1, P)).log(), domain_error);
    CHECK_THROWS_AS((-Ball::exact_si(1, P)).sqrt(), domain_error);
}

TEST_CASE("string round trip") {
    Ball x = Ball::from_str("1.25e-3", P);
    CHECK(x.center_d() == doctest::Approx(1.25e-3));
    Ball pi_lo = Ball::from_str("3.14159265358979323846264338327950288419716939937510", P);
    pi_lo.add_error_d(1e-49);  // the string is a 50-digit rounding of pi
    CHECK(pi_lo.overlaps(Ball::pi(P)));
}
