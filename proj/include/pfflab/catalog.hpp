#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/lp_class.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/quadrature.hpp"

namespace pfflab {

struct Support {
    double lo = -INFINITY;
    double hi = INFINITY;
};

// A closed-form totally positive function with its transform data: the
// ground truth every tester runs against.
struct CatalogEntry {
    std::string name;
    std::string lambda_text;
    std::string psi_text;
    Support support;
    double strip_lo = -INFINITY;  // open interval of Laplace convergence
    double strip_hi = INFINITY;

    std::function<Ball(const Ball&, const PrecisionConfig&)> eval;
    std::function<Ball(const Ball&, const PrecisionConfig&)> psi_eval;  // closed form

    std::optional<LPFactorization> lp_fac;
    std::optional<OneSidedFactorization> os_fac;

    // closed-form moment rule, when one exists (requires integrability)
    std::function<Ball(int, const PrecisionConfig&)> moment_rule;

    DecayEnvelope left_env;   // bound for |Lambda(-y)|, y >= valid_from
    DecayEnvelope right_env;  // bound for |Lambda(x)|, x >= valid_from

    double window_lo = -4, window_hi = 4;  // grid window for batteries
    bool integrable = true;
    double pff_shift = 0;  // c with e^{cx} Lambda integrable (0 when already)
    bool is_tp = true;     // false for the built-in negative control
};

// The six closed-form entries, in their stable CLI order:
// gaussian, one_sided_exp, gumbel, gumbel_normalized, logistic, jacobi_theta.
std::vector<CatalogEntry> catalog_list();

// Entry by stable name. Also resolves the built-in negative control
// "indicator" and the normalized variants "logistic_pff" / "jacobi_theta_pff".
CatalogEntry catalog_entry(const std::string& name);

CatalogEntry make_gaussian(const mpq_class& gamma);
CatalogEntry make_one_sided_exp(const mpq_class& delta);
CatalogEntry make_indicator();

// e^{cx}-normalized integrable variant of a non-integrable entry (identity
// for entries that are already Polya frequency functions).
CatalogEntry pff_normalized(const CatalogEntry& e);

// Lambda(x) = sum_{j in Z} (-1)^j exp(-j^2 x) for x > 0, 0 for x <= 0.
// Below x_min the spec precondition fails (precision_error); the evaluation
// itself switches to the modular transform of the series for x < 1 and is
// stable at any positive x (used internally by the transform integrands).
Ball theta_eval(const Ball& x, const PrecisionConfig& prec, double x_min = 1e-3);

} // namespace pfflab
