#pragma once

#include <vector>

#include "pfflab/catalog.hpp"
#include "pfflab/moment_sequence.hpp"
#include "pfflab/polyzero.hpp"
#include "pfflab/power_series.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/quadrature.hpp"
#include "pfflab/verdict.hpp"

namespace pfflab {

// mu_j = Integral x^j Lambda(x) dx for j = 0..N: the closed-form rule when
// the entry has one, certified quadrature otherwise (per-moment targets
// tightened geometrically in j so the differenced series stays balanced).
// Requires integrability and an exponential-or-faster decay envelope.
MomentSequence compute_moments(const CatalogEntry& f, int N, const QuadratureConfig& qc,
                               const PrecisionConfig& prec);

// F(s) = sum_j (-1)^j mu_j s^j / j!  (the Laplace transform of Lambda as a
// power series): coeffs[j] = (-1)^j mu_j.
PowerSeries f_series(const MomentSequence& ms);

struct JensenVerdictRow {
    int n = 0;
    Verdict3 real_rooted = Verdict3::Undecided;
};

struct PipelineResult {
    MomentSequence moments;
    PowerSeries f_ser;
    PowerSeries psi_series;  // reciprocal of F
    std::vector<JensenVerdictRow> jensen_report;
};

// moments -> F -> Psi = 1/F -> q_n = Psi(D) x^n real-rootedness verdicts.
PipelineResult schoenberg_pipeline(const CatalogEntry& f, int N, int n_max,
                                   const QuadratureConfig& qc, const PrecisionConfig& prec);

} // namespace pfflab
