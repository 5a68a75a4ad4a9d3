#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/catalog.hpp"
#include "pfflab/linalg.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/verdict.hpp"

namespace pfflab {

// Two equal-length strictly increasing grids; the determinant test matrix is
// (Lambda(x_j - y_k)).
struct Grid {
    std::vector<double> xs, ys;
    void validate(int order_cap = 6) const;
};

Ball tp_det(const CatalogEntry& f, const Grid& g, const PrecisionConfig& prec);

enum class GridStrategy { UniformWindow, Clustered, AdversarialSupportEdges };

GridStrategy strategy_from_string(const std::string& s);
const char* to_string(GridStrategy s);

enum class TPVerdict { NoCertifiedViolation, CertifiedViolation, Undecided };

inline const char* to_string(TPVerdict v) {
    switch (v) {
        case TPVerdict::NoCertifiedViolation: return "no-certified-violation";
        case TPVerdict::CertifiedViolation: return "certified-violation";
        default: return "undecided";
    }
}

struct OrderReport {
    int n = 0;
    long trials = 0;
    Ball min_det;     // smallest determinant enclosure seen (by center)
    Grid worst_grid;  // grid attaining it
    long undecided = 0;
};

struct TPReport {
    std::string subject;
    GridStrategy strategy = GridStrategy::UniformWindow;
    uint64_t seed = 0;
    std::vector<OrderReport> orders;
    TPVerdict verdict = TPVerdict::NoCertifiedViolation;
};

// Seeded determinant battery. Deterministic for fixed (seed, config)
// regardless of thread count: per-trial RNG streams and index-ordered
// reductions. Trials whose determinant straddles zero wider than
// `noise_floor` are re-run once at escalated precision and recorded as
// undecided if still straddling (noise_floor <= 0 picks a default tied to
// the working precision).
TPReport tp_battery(const CatalogEntry& f, int max_order, long trials, uint64_t seed,
                    GridStrategy strategy, const PrecisionConfig& prec, int threads = 1,
                    double noise_floor = 0.0);

struct GramResult {
    Verdict3 verdict = Verdict3::Undecided;
    Ball min_eig;
};

// G_{jk} = 1/xi(1/2 + tau_j - tau_k), symmetric by the functional-equation
// evenness; certified PSD test plus a smallest-eigenvalue enclosure.
GramResult bochner_gram(const std::vector<double>& taus, const PrecisionConfig& prec);

} // namespace pfflab
