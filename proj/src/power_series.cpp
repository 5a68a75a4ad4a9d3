#include "pfflab/power_series.hpp"

#include "pfflab/errors.hpp"

namespace pfflab {

Ball PowerSeries::eval(const Ball& s) const {
    if (coeffs.empty()) throw invalid_argument("PowerSeries::eval: empty series");
    mpfr_prec_t p = std::max(coeffs[0].prec(), s.prec());
    Ball term = Ball::exact_si(1, p);  // s^j / j!
    Ball acc = coeffs[0];
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        term = (term * s).div_si(static_cast<long>(j));
        acc += coeffs[j] * term;
    }
    return acc;
}

PowerSeries PowerSeries::derivative() const {
    if (coeffs.size() <= 1) {
        PowerSeries d;
        if (!coeffs.empty()) d.coeffs.push_back(Ball(coeffs[0].prec()));
        return d;
    }
    PowerSeries d;
    d.coeffs.assign(coeffs.begin() + 1, coeffs.end());
    return d;
}

PowerSeries PowerSeries::truncated(std::size_t n) const {
    PowerSeries t;
    t.coeffs.assign(coeffs.begin(), coeffs.begin() + std::min(n, coeffs.size()));
    return t;
}

std::optional<std::vector<mpq_class>> PowerSeries::exact_view() const {
    std::vector<mpq_class> out;
    out.reserve(coeffs.size());
    for (const Ball& b : coeffs) {
        if (!b.is_exact() || !b.is_finite()) return std::nullopt;
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), b.center());
        out.push_back(q);
    }
    return out;
}

Ball binom_ball(unsigned long n, unsigned long k, mpfr_prec_t prec) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Ball::from_mpz(z, prec);
}

Ball factorial_ball(unsigned long n, mpfr_prec_t prec) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Ball::from_mpz(z, prec);
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    if (a.empty() || b.empty()) throw invalid_argument("series_mul: empty series");
    std::size_t n = std::min(a.size(), b.size());
    mpfr_prec_t p = std::max(a[0].prec(), b[0].prec());
    PowerSeries h;
    h.coeffs.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        Ball acc(p);
        for (std::size_t k = 0; k <= m; ++k)
            acc += binom_ball(m, k, p) * a[k] * b[m - k];
        h.coeffs.push_back(std::move(acc));
    }
    return h;
}

PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.size(), b.size());
    PowerSeries h;
    h.coeffs.reserve(n);
    for (std::size_t m = 0; m < n; ++m) h.coeffs.push_back(a[m] + b[m]);
    return h;
}

PowerSeries series_reciprocal(const PowerSeries& a) {
    if (a.empty()) throw invalid_argument("series_reciprocal: empty series");
    if (a[0].contains_zero())
        throw domain_error("series_reciprocal: constant term not certified nonzero");
    mpfr_prec_t p = a[0].prec();
    std::size_t n = a.size();
    PowerSeries r;
    r.coeffs.reserve(n);
    r.coeffs.push_back(a[0].recip());
    for (std::size_t m = 1; m < n; ++m) {
        Ball acc(p);
        for (std::size_t k = 1; k <= m; ++k)
            acc += binom_ball(m, k, p) * a[k] * r[m - k];
        r.coeffs.push_back(-(acc / a[0]));
    }
    return r;
}

PowerSeries series_exp(const PowerSeries& l) {
    if (l.empty()) throw invalid_argument("series_exp: empty series");
    mpfr_prec_t p = l[0].prec();
    std::size_t n = l.size();
    PowerSeries h;
    h.coeffs.reserve(n);
    h.coeffs.push_back(l[0].exp());
    // h' = l' h  =>  h_{m+1} = sum_k C(m,k) l_{k+1} h_{m-k}
    for (std::size_t m = 0; m + 1 < n; ++m) {
        Ball acc(p);
        for (std::size_t k = 0; k <= m; ++k)
            acc += binom_ball(m, k, p) * l[k + 1] * h[m - k];
        h.coeffs.push_back(std::move(acc));
    }
    return h;
}

} // namespace pfflab
