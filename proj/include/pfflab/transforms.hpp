#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/catalog.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/quadrature.hpp"

namespace pfflab {

struct TransformResult {
    Ball value;
    double strip_lo = -INFINITY;
    double strip_hi = INFINITY;
};

// Integral of f(x) e^{-s x} over the support of f, truncated through the
// entry's decay envelopes and integrated by tanh-sinh panels. Requires s
// strictly inside the convergence strip.
TransformResult bilateral_laplace(const CatalogEntry& f, double s, const QuadratureConfig& qc,
                                  const PrecisionConfig& prec);

// Fourier inversion of 1/xi on the real axis, in the (real) cosine form
//   Lambda(x) = (1/pi) Integral_0^inf cos(x tau) / xi(1/2 + tau) dtau.
// The integrand samples 1/xi(1/2+tau) once per node set (the expensive
// part), so point evaluations of Lambda are cheap and cached. Truncation
// uses the super-exponential envelope of 1/xi calibrated at tau in
// {20, 40, 80} with a x10 margin; the Gauss-Legendre discretization error
// is estimated by comparing two orders (see README on certification).
class LambdaEvaluator {
public:
    LambdaEvaluator(const PrecisionConfig& prec, const QuadratureConfig& qc, double x_max = 3.5,
                    int threads = 1);

    Ball eval(double x) const;  // even in x; |x| <= x_max
    double x_max() const { return x_max_; }
    double trunc_radius() const { return R_; }
    const PrecisionConfig& precision() const { return prec_; }
    double target_abs_err() const { return target_; }

    // (1/pi) Integral_0^R 1/xi(1/2+tau) dtau: positive-integrand route to
    // Lambda(0), used as an independent cross-check
    Ball direct_positive_integral() const;

    // empirical exponential decay fit |Lambda(x)| ~ exp(log_c - rate |x|)
    struct DecayFit {
        double rate = 0;
        double log_c = 0;
    };
    DecayFit fit_decay() const;

    // battery/test adapter (evaluation-domain error outside |x| <= x_max)
    CatalogEntry as_catalog_entry() const;

private:
    PrecisionConfig prec_;
    double target_;
    double x_max_;
    double R_ = 0;
    int order_ = 0;
    int panels_ = 0;
    Ball tail_;  // (1/pi) Integral_R^inf envelope
    // per rule: flattened (tau, scaled weight * g(tau)) pairs
    struct NodeSet {
        std::vector<Ball> tau;
        std::vector<Ball> gw;
    };
    NodeSet main_, check_;
    mutable std::map<double, Ball> cache_;
    mutable std::mutex mu_;

    Ball sum_with(const NodeSet& ns, double x) const;
};

// Integral_{-X}^{X} Lambda(x) e^{-s x} dx with an empirical-fit tail estimate
// folded into the radius (X = lam.x_max()).
Ball bilateral_laplace_lambda(const LambdaEvaluator& lam, double s, const PrecisionConfig& prec);

// roundtrip residual: bilateral_laplace(Lambda, s) * xi(1/2 + s) - 1.
Ball roundtrip_residual(const LambdaEvaluator& lam, double s, const PrecisionConfig& prec);

} // namespace pfflab
