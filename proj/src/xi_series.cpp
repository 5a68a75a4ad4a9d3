#include <cmath>

#include "pfflab/errors.hpp"
#include "pfflab/numerics.hpp"
#include "pfflab/quadrature.hpp"

namespace pfflab {

Ball theta_psi(const Ball& x, const PrecisionConfig& prec) {
    if (!x.is_positive()) throw domain_error("theta_psi: x must be certified positive");
    mpfr_prec_t p = prec.bits() + 16;
    Ball pi = Ball::pi(p);
    Ball acc(p);
    Ball xl = x.round_to(p);
    long n = 1;
    for (; n <= prec.max_terms; ++n) {
        Ball term = (-(pi * xl).mul_si(n * n)).exp();
        acc += term;
        double scale = std::max(acc.mag_d(), 1e-300);
        if (term.mag_d() <= std::ldexp(scale, static_cast<int>(-p - 6))) break;
    }
    if (n > prec.max_terms) throw precision_error("theta_psi: term cap exhausted");
    // tail <= 2 exp(-pi (n+1)^2 x) once pi(2n+3)x >= 1 (true well before the cutoff)
    Ball tail = (-(pi * xl).mul_si((n + 1) * (n + 1))).exp().mul_2si(1);
    acc.add_error(tail);
    return acc;
}

std::vector<Ball> xi_theta_kernel_moments(int m_max, const PrecisionConfig& prec) {
    if (m_max < 0) throw invalid_argument("xi_theta_kernel_moments: m_max < 0");
    PrecisionConfig pr = prec.with_digits(prec.digits + 10);
    mpfr_prec_t p = pr.bits() + 16;
    double R = (prec.digits + 14) * 2.302585 / 3.141592 + 2.0;
    double target = std::pow(10.0, -static_cast<double>(prec.digits + 10));

    Ball a = Ball::exact_si(1, p);
    Ball b = Ball::exact_d(R, p);
    std::vector<Ball> c;
    c.reserve(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        auto f = [&](const Ball& x) {
            Ball lx = x.log();
            Ball out = theta_psi(x, pr);
            out = out * (lx.mul_si(-3).mul_2si(-2)).exp();  // x^{-3/4}
            if (m > 0) {
                Ball u = lx.mul_2si(-1);
                out = out * u.pow_si(2 * m) / factorial_ball(2UL * m, p);
            }
            return out;
        };
        Ball cm = integrate_de(f, a, b, p, target);
        // tail: (ln x/2)^{2m}/(2m)! <= sqrt(x), psi(x) <= 1.01 e^{-pi x}, so
        // Integral_R^inf <= 1.01 e^{-pi R} / pi for R >= 1
        Ball pi = Ball::pi(p);
        Ball tail = Ball::exact_d(1.01, p) * (-(pi * Ball::exact_d(R, p))).exp() / pi;
        cm.add_error(tail);
        c.push_back(cm.round_to(prec.bits()));
    }
    return c;
}

PowerSeries xi_series_at_half(int N, const PrecisionConfig& prec, int coeff_cap) {
    if (N < 0 || N > coeff_cap)
        throw invalid_argument("xi_series_at_half: N exceeds the coefficient cap");
    mpfr_prec_t p = prec.bits();
    int m_top = N / 2;
    std::vector<Ball> c = xi_theta_kernel_moments(m_top, prec);

    // xi(1/2+u) = 1/2 + (u^2 - 1/4) sum_m c_m u^{2m}
    //   a_0 = 1/2 - c_0/4,  a_{2m} = c_{m-1} - c_m/4,  a_odd = 0
    PowerSeries s;
    s.coeffs.reserve(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (k % 2 == 1) {
            s.coeffs.push_back(Ball(p));  // exactly zero
            continue;
        }
        int m = k / 2;
        Ball ak(p);
        if (m == 0)
            ak = Ball::exact_si(1, p).mul_2si(-1) - c[0].mul_2si(-2);
        else
            ak = c[m - 1] - c[m].mul_2si(-2);
        s.coeffs.push_back(ak * factorial_ball(static_cast<unsigned long>(k), p));
    }
    return s;
}

PowerSeries xi1_series(int N, const PrecisionConfig& prec, int coeff_cap) {
    if (N < 0 || 2 * N > coeff_cap)
        throw invalid_argument("xi1_series: 2N exceeds the coefficient cap");
    PowerSeries xs = xi_series_at_half(2 * N, prec, coeff_cap);
    mpfr_prec_t p = prec.bits();

    PowerSeries out;
    out.coeffs.reserve(N + 1);
    for (int m = 0; m <= N; ++m) {
        Ball beta = xs[2 * m] * factorial_ball(m, p) / factorial_ball(2UL * m, p);
        if (!beta.is_positive())
            throw precision_error("xi1_series: coefficient " + std::to_string(m) +
                                  " not certified positive at this precision");
        out.coeffs.push_back(std::move(beta));
    }
    return out;
}

} // namespace pfflab
