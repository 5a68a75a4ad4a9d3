#pragma once

#include <optional>
#include <vector>

#include "pfflab/ball.hpp"

namespace pfflab {

// Truncated power series in factorial normalization, fixed repo-wide:
// coeffs[j] = beta_j represents  Psi(s) = sum_j beta_j s^j / j!.
struct PowerSeries {
    std::vector<Ball> coeffs;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<Ball> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    bool empty() const { return coeffs.empty(); }
    const Ball& operator[](std::size_t j) const { return coeffs[j]; }
    Ball& operator[](std::size_t j) { return coeffs[j]; }

    // sum_{j<size} beta_j s^j / j!   (pure truncation; no tail estimate)
    Ball eval(const Ball& s) const;

    // coefficient shift: derivative in factorial normalization
    PowerSeries derivative() const;

    PowerSeries truncated(std::size_t n) const;

    // exact rational view when every coefficient has radius zero
    std::optional<std::vector<mpq_class>> exact_view() const;
};

// exact binomial coefficient as a Ball
Ball binom_ball(unsigned long n, unsigned long k, mpfr_prec_t prec);
// exact factorial as a Ball
Ball factorial_ball(unsigned long n, mpfr_prec_t prec);

// Cauchy product in factorial normalization, truncated to
// min(a.size, b.size) coefficients: h_n = sum_k C(n,k) a_k b_{n-k}.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse: (a * r) = (1, 0, ..., 0) up to the common length.
// Requires coeffs[0] certified nonzero.
PowerSeries series_reciprocal(const PowerSeries& a);

// exp of a series (the constant term is exponentiated too)
PowerSeries series_exp(const PowerSeries& l);

} // namespace pfflab
