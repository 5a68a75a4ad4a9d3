#pragma once

#include <functional>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/errors.hpp"
#include "pfflab/precision.hpp"

namespace pfflab {

enum class QuadScheme { DoubleExponential, GaussLegendrePanels };

struct QuadratureConfig {
    QuadScheme scheme = QuadScheme::DoubleExponential;
    int level = 11;              // maximum refinement depth
    double trunc_radius = 0.0;   // 0 = auto (needs a decay envelope)
    double target_abs_err = 1e-32;

    void validate() const {
        if (target_abs_err <= 0)
            throw invalid_argument("QuadratureConfig: target_abs_err must be positive");
        if (level < 2) throw invalid_argument("QuadratureConfig: level must be >= 2");
    }
};

// One-sided decay envelope: |f(x)| <= c * phi(|x|) for |x| >= valid_from on
// the given side. Constants live in doubles; all bound evaluation is done
// outward in ball arithmetic.
struct DecayEnvelope {
    enum class Form { CompactSupport, Exponential, Gaussian, SuperExponential, DoubleExponential };
    Form form = Form::Exponential;
    double c = 0.0;  // prefactor; 0 means "no envelope available" (except compact)
    double a = 1.0;  // rate
    double valid_from = 0.0;
    bool empirical = false;  // fitted from samples rather than analytic

    bool missing() const { return form != Form::CompactSupport && c == 0.0; }

    // Upper bound for Integral_R^inf c*phi(x)*e^{beta x} dx (R >= valid_from).
    // Throws precision_error when the bound does not converge for this beta.
    Ball tail_bound(double R, double beta, mpfr_prec_t prec) const;

    // smallest R >= max(valid_from, R_min) with tail_bound(R) <= eps
    double solve_radius(double eps, double beta, double R_min, mpfr_prec_t prec) const;
};

// Tanh-sinh quadrature of f over the finite interval [a, b].
//
// The returned radius contains (i) the rigorously propagated ball arithmetic
// error of the node sum, (ii) a bound for the truncated node tail, and
// (iii) a conservative a-posteriori discretization estimate from successive
// level differences. (iii) is an estimate, not a theorem; see README.
// Successive level enclosures are intersected, so deeper levels never widen
// the result.
Ball integrate_de(const std::function<Ball(const Ball&)>& f, const Ball& a, const Ball& b,
                  mpfr_prec_t prec, double target_abs_err, int max_level = 11);

// Certified Gauss-Legendre rule on [-1, 1]: node and weight enclosures.
struct GLRule {
    std::vector<Ball> nodes;
    std::vector<Ball> weights;
};

const GLRule& gl_rule(int order, mpfr_prec_t prec);

// Plain panel sum with the given order over [a, b] split into n_panels equal
// panels. No discretization estimate: callers compare two orders.
Ball integrate_gl_panels(const std::function<Ball(const Ball&)>& f, const Ball& a, const Ball& b,
                         mpfr_prec_t prec, int order, int n_panels);

} // namespace pfflab
