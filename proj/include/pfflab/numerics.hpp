#pragma once

#include <vector>

#include "pfflab/ball.hpp"
#include "pfflab/power_series.hpp"
#include "pfflab/precision.hpp"

namespace pfflab {

// Exact Bernoulli numbers B_0, B_1, ..., B_n (B_1 = -1/2), cached.
const mpq_class& bernoulli(unsigned long n);

// Gamma(sigma) for real sigma away from the poles {0, -1, -2, ...}.
// Stirling's asymptotic series with an explicit remainder bound, after an
// argument shift large enough to make the remainder rigorous.
Ball gamma_real(const Ball& sigma, const PrecisionConfig& prec);

// zeta(sigma) for real sigma != 1.
//   sigma >= 2            Euler-Maclaurin
//   sigma in (0,2)        accelerated alternating (eta) series; the window
//                         around the pole goes through the (sigma-1)*zeta
//                         product, which is regular there
//   sigma in (-1/2, 0]    Euler-Maclaurin (still valid; the reflected route
//                         degenerates to 0*inf at sigma = 0)
//   sigma <= -1/2         functional equation
Ball zeta_real(const Ball& sigma, const PrecisionConfig& prec);

// (sigma - 1) * zeta(sigma): entire through the pole at 1.
Ball zeta_times_sm1(const Ball& sigma, const PrecisionConfig& prec);

// zeta at integer arguments >= 2, cached per (k, digits).
Ball zeta_uint(unsigned long k, const PrecisionConfig& prec);

// Riemann xi, xi(s) = (s-1) pi^{-s/2} Gamma(s/2 + 1) zeta(s), strictly
// positive on the real axis. Valid for every real sigma.
Ball xi_real(const Ball& sigma, const PrecisionConfig& prec);

// 1 / xi(1/2 + t); convenience used by the Fourier inversion and the Gram
// matrix experiment.
Ball inv_xi_half_plus(const Ball& t, const PrecisionConfig& prec);

// Taylor data of u -> xi(1/2 + u), from the classical theta-kernel
// representation
//   xi(1/2 + u) = 1/2 + (u^2 - 1/4) * Integral_1^inf psi(x) x^{-3/4}
//                 cosh(u ln(x)/2) dx,   psi(x) = sum_{n>=1} exp(-pi n^2 x),
// which yields certified coefficient enclosures from one set of positive
// smooth integrals (no numerical differentiation). Returns factorial
// normalization: coeffs[k] = k! * a_k with a_k = xi^(k)(1/2)/k!. Odd
// coefficients are exactly zero.
PowerSeries xi_series_at_half(int n_coeffs, const PrecisionConfig& prec, int coeff_cap = 24);

// Series of Xi_1 where Xi(s) = Xi_1(-s^2), i.e. Xi_1(v) = sum_m a_{2m} v^m;
// coeffs[m] = m! * a_{2m}. All returned coefficients are certified positive.
PowerSeries xi1_series(int n_coeffs, const PrecisionConfig& prec, int coeff_cap = 24);

// The kernel integrals c_m = Integral_1^inf psi(x) x^{-3/4} (ln x / 2)^{2m} / (2m)! dx.
std::vector<Ball> xi_theta_kernel_moments(int m_max, const PrecisionConfig& prec);

// psi(x) = sum_{n>=1} exp(-pi n^2 x), x > 0, with a certified tail bound.
Ball theta_psi(const Ball& x, const PrecisionConfig& prec);

} // namespace pfflab
