#pragma once

#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/verdict.hpp"

namespace pfflab {

using BallMatrix = std::vector<std::vector<Ball>>;

// Determinant enclosure via interval LU with full pivoting (pivot by largest
// center magnitude). Falls back to Laplace expansion of the remaining block
// when every candidate pivot straddles zero.
Ball det_enclosure(BallMatrix m);

// Certified positive definiteness of a symmetric ball matrix via interval
// Cholesky (pivots certified positive / certified non-positive / straddling).
Verdict3 cholesky_pd(const BallMatrix& a);

struct MinEigResult {
    Verdict3 psd_verdict = Verdict3::Undecided;  // is the matrix certified PD at 0
    Ball min_eig;
};

// Enclosure of the smallest eigenvalue of a symmetric ball matrix by
// bisection on mu with interval Cholesky applied to A - mu I.
MinEigResult min_eig_enclosure(const BallMatrix& a, const PrecisionConfig& prec);

} // namespace pfflab
