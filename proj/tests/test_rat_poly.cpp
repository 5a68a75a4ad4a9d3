#include <doctest.h>

#include "pfflab/rat_poly.hpp"
#include "pfflab/rng.hpp"

using namespace pfflab;

namespace {
RatPoly from_ints(std::initializer_list<long> cs) {
    std::vector<mpq_class> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}
} // namespace

TEST_CASE("root counting basics") {
    // x^2 + 1: no real roots
    CHECK(real_root_count_exact(from_ints({1, 0, 1})) == 0);
    // x(x-1)^2 = x^3 - 2x^2 + x: 3 real roots with multiplicity
    CHECK(real_root_count_exact(from_ints({0, 1, -2, 1})) == 3);
    CHECK(sturm_count_all(from_ints({0, 1, -2, 1})) == 2);  // distinct
    // (x^2+1)(x-2): one real root
    RatPoly p = from_ints({1, 0, 1}) * from_ints({-2, 1});
    CHECK(real_root_count_exact(p) == 1);
}

TEST_CASE("count is additive over products") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        // build polynomials from random real-linear and complex-quadratic factors
        auto rand_poly = [&](int& expected) {
            RatPoly p = RatPoly::constant(1);
            expected = 0;
            int f = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < f; ++i) {
                if (rng.below(2)) {
                    long r = static_cast<long>(rng.below(9)) - 4;
                    p = p * from_ints({-r, 1});
                    expected += 1;
                } else {
                    long b = static_cast<long>(rng.below(5)) - 2;
                    long c = 1 + static_cast<long>(rng.below(4));
                    // x^2 + bx + (b^2/4 + c): discriminant < 0
                    RatPoly q(std::vector<mpq_class>{mpq_class(b * b, 4) + c, mpq_class(b), mpq_class(1)});
                    p = p * q;
                }
            }
            return p;
        };
        int na = 0, nb = 0;
        RatPoly a = rand_poly(na), b = rand_poly(nb);
        CHECK(real_root_count_exact(a * b) == na + nb);
    }
}

TEST_CASE("interval counting") {
    // roots of x^2 - 1/4 at +-1/2
    RatPoly p(std::vector<mpq_class>{mpq_class(-1, 4), mpq_class(0), mpq_class(1)});
    CHECK(sturm_count_interval(p, mpq_class(0), mpq_class(1)) == 1);
    CHECK(sturm_count_interval(p, mpq_class(-1), mpq_class(1)) == 2);
    CHECK(sturm_count_interval(p, mpq_class(-1), mpq_class(-3, 4)) == 0);
}

TEST_CASE("all-real and non-positive-root predicates") {
    CHECK(all_roots_real_exact(from_ints({0, 1, -2, 1})));        // x(x-1)^2
    CHECK(!all_roots_real_exact(from_ints({1, 0, 1})));           // x^2+1
    CHECK(roots_real_nonpositive_exact(from_ints({2, 3, 1})));    // (x+1)(x+2)
    CHECK(roots_real_nonpositive_exact(from_ints({0, 1, 1})));    // x(x+1): root at 0 allowed
    CHECK(!roots_real_nonpositive_exact(from_ints({-1, 0, 1})));  // (x-1)(x+1)
    CHECK(!roots_real_nonpositive_exact(from_ints({1, 0, 1})));   // complex pair
}

TEST_CASE("gcd and primitive parts") {
    RatPoly a = from_ints({-1, 1});  // x-1
    RatPoly b = from_ints({1, 1});   // x+1
    RatPoly g = rat_poly_gcd(a * a * b, a * b * b);
    CHECK(g == (a * b).primitive_part());
}

TEST_CASE("evaluation") {
    RatPoly p = from_ints({1, -3, 2});  // 2x^2 - 3x + 1
    CHECK(p.eval(mpq_class(1)) == 0);
    CHECK(p.eval(mpq_class(1, 2)) == 0);
    CHECK(p.eval(mpq_class(0)) == 1);
    Ball v = p.eval_ball(Ball::exact_si(2, 128), 128);
    CHECK(v.contains_si(3));
}
