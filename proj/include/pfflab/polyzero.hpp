#pragma once

#include <variant>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/moment_sequence.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/rat_poly.hpp"
#include "pfflab/verdict.hpp"

namespace pfflab {

// Polynomial with ball coefficients (c[i] x^i). Used whenever coefficients
// come from numerical series; exact work stays in RatPoly.
struct BallPoly {
    std::vector<Ball> c;

    BallPoly() = default;
    explicit BallPoly(std::vector<Ball> coeffs) : c(std::move(coeffs)) {}
    static BallPoly from_rat(const RatPoly& p, mpfr_prec_t prec);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Ball eval(const Ball& x) const;
    BallPoly derivative() const;
    bool leading_certified_nonzero() const;
};

// Exact rationals when the inputs allow it, balls otherwise.
using Polynomial = std::variant<RatPoly, BallPoly>;

BallPoly to_ball_poly(const Polynomial& p, mpfr_prec_t prec);
bool poly_is_exact(const Polynomial& p);
int poly_degree(const Polynomial& p);

// Count of real roots with multiplicity. Exact polynomials give a point
// count; ball polynomials give an interval [lo, hi] from simple-root
// isolation (lo certified roots, coverage of the rest of the line when
// decidable).
struct RootCount {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
};

RootCount real_root_count(const Polynomial& p, const PrecisionConfig& prec);

// Certify that a ball polynomial has only real zeros (degree many certified
// simple real roots). CertifiedNo means some roots are certainly non-real.
Verdict3 certify_all_roots_real(const BallPoly& p, const PrecisionConfig& prec);

// Sign changes over a fixed grid: a lower bound for the sup over all grids.
struct SignSampling {
    std::vector<double> grid;  // strictly increasing
    std::vector<Ball> values;
};

struct SignChangeResult {
    int count = 0;
    bool undecided_skipped = false;  // some values straddled zero and were skipped
};

SignChangeResult sign_changes(const SignSampling& s);

// q = (Lambda * p) via moments:  q = sum_{j<=deg p} (-1)^j mu_j p^(j) / j!
// (exact finite formula). Exact when both the moments and p are exact.
Polynomial convolve_moments(const MomentSequence& ms, const Polynomial& p);

enum class ZdVerdict { Holds, Violated, Undecided };

inline const char* to_string(ZdVerdict v) {
    switch (v) {
        case ZdVerdict::Holds: return "holds";
        case ZdVerdict::Violated: return "violated";
        default: return "undecided";
    }
}

struct ZdResult {
    ZdVerdict verdict = ZdVerdict::Undecided;
    RootCount n_p;
    RootCount n_q;
};

// zero-decreasing test: N(Lambda * p) <= N(p)
ZdResult zero_decreasing_check(const MomentSequence& ms, const Polynomial& p,
                               const PrecisionConfig& prec);

} // namespace pfflab
