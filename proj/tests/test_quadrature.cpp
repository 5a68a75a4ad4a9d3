#include <doctest.h>

#include <cmath>

#include "pfflab/quadrature.hpp"

using namespace pfflab;

namespace {
constexpr mpfr_prec_t P = 180;
}

TEST_CASE("tanh-sinh on polynomials and endpoint singularities") {
    Ball zero(P), one = Ball::exact_si(1, P);

    auto sq = [](const Ball& x) { return x * x; };
    Ball v = integrate_de(sq, zero, one, P, 1e-40);
    CHECK(v.contains(Ball::from_mpq(mpq_class(1, 3), P + 60)));
    CHECK(v.radius_d() < 1e-38);

    // endpoint singularity 1/sqrt(x): integral 2. The omitted mass below the
    // node-saturation point floors the radius near sqrt(ulp).
    auto rsqrt = [](const Ball& x) { return x.sqrt().recip(); };
    Ball w = integrate_de(rsqrt, zero, one, P, 1e-24);
    CHECK(w.contains_si(2));
    CHECK(w.radius_d() < 1e-23);
}

TEST_CASE("tanh-sinh against closed forms") {
    Ball zero(P), one = Ball::exact_si(1, P);
    // int_0^1 exp(x) = e - 1
    Ball v = integrate_de([](const Ball& x) { return x.exp(); }, zero, one, P, 1e-40);
    CHECK(v.overlaps(one.exp() - one));

    // int_0^pi sin(x) = 2
    Ball w = integrate_de([](const Ball& x) { return x.sin(); }, zero, Ball::pi(P), P, 1e-40);
    CHECK(w.contains_si(2));
}

TEST_CASE("refinement never widens the enclosure") {
    auto f = [](const Ball& x) { return (x * x).exp(); };
    Ball a(P), b = Ball::exact_si(1, P);
    double prev = 1e300;
    for (int level = 4; level <= 8; ++level) {
        Ball v = integrate_de(f, a, b, P, 1e-60, level);
        CHECK(v.radius_d() <= prev * 1.0000001);
        prev = v.radius_d();
    }
}

TEST_CASE("gauss-legendre rules are certified") {
    const GLRule& r = gl_rule(24, P);
    REQUIRE(r.nodes.size() == 24);
    Ball wsum(P);
    for (const Ball& w : r.weights) wsum += w;
    CHECK(wsum.contains_si(2));  // weights sum to 2
    for (const Ball& x : r.nodes) {
        CHECK(x.radius_d() < 1e-48);
        CHECK(x.abs().upper_d() < 1.0);
    }
}

TEST_CASE("gauss-legendre panels on an oscillatory integrand") {
    // int_0^{2pi} cos(x) dx = 0, resolved by panels
    Ball a(P);
    Ball b = Ball::pi(P).mul_2si(1);
    Ball v = integrate_gl_panels([](const Ball& x) { return x.cos(); }, a, b, P, 32, 8);
    CHECK(v.contains_zero());
    // int_0^1 x^2
    Ball w = integrate_gl_panels([](const Ball& x) { return x * x; }, a, Ball::exact_si(1, P), P, 16, 2);
    CHECK(w.contains(Ball::from_mpq(mpq_class(1, 3), P + 60)));
}

TEST_CASE("decay envelope tail bounds") {
    mpfr_prec_t p = 128;
    DecayEnvelope exp_env{DecayEnvelope::Form::Exponential, 2.0, 1.0, 0.0, false};
    // int_R^inf 2 e^{-x} e^{0.5 x} dx = 4 e^{-R/2}
    Ball t = exp_env.tail_bound(10.0, 0.5, p);
    CHECK(t.center_d() == doctest::Approx(4 * std::exp(-5.0)).epsilon(1e-10));
    CHECK_THROWS_AS(exp_env.tail_bound(10.0, 2.0, p), precision_error);  // divergent

    DecayEnvelope g{DecayEnvelope::Form::Gaussian, 1.0, 1.0, 0.0, false};
    CHECK(g.tail_bound(5.0, 1.0, p).upper_d() < 1e-8);

    double R = exp_env.solve_radius(1e-20, 0.0, 1.0, p);
    CHECK(exp_env.tail_bound(R, 0.0, p).upper_d() <= 1e-20);

    DecayEnvelope missing;
    CHECK(missing.missing());
    CHECK_THROWS_AS(missing.tail_bound(5.0, 0.0, p), domain_error);
}
