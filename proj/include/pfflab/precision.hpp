#pragma once

#include <mpfr.h>

#include "pfflab/errors.hpp"

namespace pfflab {

// Working-precision contract shared by every numerical operation.
//   digits     decimal working precision of ball centers
//   max_terms  cap on series/product truncation lengths
//   fd_stencil order used by the finite-difference cross-check oracle
struct PrecisionConfig {
    long digits = 50;
    long max_terms = 4000;
    int fd_stencil = 8;

    PrecisionConfig() = default;
    PrecisionConfig(long d, long mt, int fd = 8) : digits(d), max_terms(mt), fd_stencil(fd) {
        validate();
    }

    void validate() const {
        if (digits < 15)
            throw invalid_argument("PrecisionConfig: digits must be >= 15");
        if (max_terms < 8)
            throw invalid_argument("PrecisionConfig: max_terms must be >= 8");
        if (fd_stencil < 1)
            throw invalid_argument("PrecisionConfig: fd_stencil must be >= 1");
    }

    // Center precision in bits, with guard bits on top of digits*log2(10).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 1) + 32;
    }

    PrecisionConfig with_digits(long d) const { return PrecisionConfig(d, max_terms, fd_stencil); }
};

} // namespace pfflab
