#include "pfflab/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "pfflab/errors.hpp"

namespace pfflab {

// --- Bernoulli numbers -------------------------------------------------------

namespace {
std::vector<mpq_class> g_bernoulli = {mpq_class(1), mpq_class(-1, 2)};
std::mutex g_bernoulli_mu;
} // namespace

const mpq_class& bernoulli(unsigned long n) {
    std::lock_guard<std::mutex> lk(g_bernoulli_mu);
    while (g_bernoulli.size() <= n) {
        unsigned long m = g_bernoulli.size();
        // sum_{j=0}^{m} C(m+1,j) B_j = 0
        mpq_class acc(0);
        mpz_class binc;
        for (unsigned long j = 0; j < m; ++j) {
            mpz_bin_uiui(binc.get_mpz_t(), m + 1, j);
            acc += mpq_class(binc) * g_bernoulli[j];
        }
        acc /= mpq_class(binc = mpz_class(static_cast<long>(m + 1)));
        g_bernoulli.push_back(-acc);
    }
    return g_bernoulli[n];
}

// --- Gamma -------------------------------------------------------------------

namespace {

// log Gamma(z) for a ball certified >= x0 > 0 via the Stirling series with
// the first-omitted-term remainder bound (valid on the positive real axis).
Ball log_gamma_stirling(const Ball& z, mpfr_prec_t p, long max_terms) {
    Ball lz = z.log();
    Ball half = Ball::exact_si(1, p).mul_2si(-1);
    Ball acc = (z - half) * lz - z;
    Ball two_pi = Ball::pi(p).mul_2si(1);
    acc += two_pi.log().mul_2si(-1);

    Ball zinv2 = (z * z).recip();
    Ball zpow = z.recip();  // z^{-(2k-1)}
    double prev_mag = 0;
    for (long k = 1; k <= max_terms; ++k) {
        mpq_class coef = bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1));
        Ball term = Ball::from_mpq(coef, p) * zpow;
        acc += term;
        // remainder bound: first omitted term
        mpq_class cnext = bernoulli(2 * k + 2) / mpq_class((2 * k + 2) * (2 * k + 1));
        Ball rem = Ball::from_mpq(abs(cnext), p) * zpow * zinv2;
        double rem_mag = rem.mag_d();
        double scale = std::max(1.0, acc.mag_d());
        if (rem_mag <= std::ldexp(scale, static_cast<int>(-p - 6))) {
            acc.add_error(rem);
            return acc;
        }
        if (k > 2 && rem_mag >= prev_mag && prev_mag > 0)
            throw precision_error("gamma_real: Stirling series diverging before target radius");
        prev_mag = rem_mag;
        zpow = zpow * zinv2;
    }
    throw precision_error("gamma_real: max_terms exhausted in Stirling series");
}

Ball gamma_real_impl(const Ball& sigma, const PrecisionConfig& prec, bool escalated) {
    mpfr_prec_t p = prec.bits() + 24;
    Ball s = sigma.round_to(p);

    // pole proximity: distance from the nearest non-positive integer
    if (s.lower_d() < 0.5) {
        double c = s.center_d();
        double k = std::floor(c + 0.5);
        if (k <= 0.0) {
            Ball d = (s - Ball::exact_d(k, p)).abs();
            double tol = std::pow(10.0, -static_cast<double>(prec.digits) / 2.0);
            if (d.lower_d() <= tol)
                throw domain_error("gamma_real: argument too close to a pole of Gamma");
        }
    }

    double x0 = 0.367 * (prec.digits + 10) + 3.0;
    long n_shift = 0;
    double lo = s.lower_d();
    if (lo < x0) n_shift = static_cast<long>(std::ceil(x0 - lo));

    Ball z = s.add_si(n_shift);
    Ball g = log_gamma_stirling(z, p, prec.max_terms).exp();
    for (long i = 0; i < n_shift; ++i) {
        Ball f = s.add_si(i);
        if (f.contains_zero())
            throw domain_error("gamma_real: recurrence factor contains zero (pole proximity)");
        g = g / f;
    }

    Ball out = g.round_to(prec.bits());
    // contract: radius <= 10^{-digits+5} |center| for thin inputs
    bool thin = sigma.radius_d() <= std::ldexp(1.0, static_cast<int>(-prec.bits() / 2));
    if (thin && out.radius_d() > std::pow(10.0, static_cast<double>(-prec.digits + 5)) * std::fabs(out.center_d())) {
        if (!escalated)
            return gamma_real_impl(sigma, prec.with_digits(prec.digits + 15), true).round_to(prec.bits());
        throw precision_error("gamma_real: target radius unreachable");
    }
    return out;
}

} // namespace

Ball gamma_real(const Ball& sigma, const PrecisionConfig& prec) {
    return gamma_real_impl(sigma, prec, false);
}

// --- zeta --------------------------------------------------------------------

namespace {

// Euler-Maclaurin; valid for real sigma > -1 at our term counts. When
// times_sm1 is set, returns (sigma-1)*zeta(sigma), which is regular at 1.
Ball zeta_em(const Ball& sigma, const PrecisionConfig& prec, bool times_sm1) {
    mpfr_prec_t p = prec.bits() + 24;
    Ball s = sigma.round_to(p);
    long N = std::max<long>(12, static_cast<long>(0.37 * prec.digits + 10));

    for (int attempt = 0; attempt < 3; ++attempt, N *= 2) {
        Ball nb(p);
        Ball partial(p);  // everything except the pole term
        for (long n = 1; n <= N - 1; ++n) {
            Ball lnn = Ball::exact_si(n, p).log();
            partial += (-(s * lnn)).exp();
        }
        Ball lnN = Ball::exact_si(N, p).log();
        Ball NmS = (-(s * lnN)).exp();  // N^{-sigma}
        partial += NmS.mul_2si(-1);

        // correction terms
        Ball Ninv2 = (Ball::exact_si(N, p) * Ball::exact_si(N, p)).recip();
        Ball Npow = NmS / Ball::exact_si(N, p);  // N^{1-sigma-2k} at k=1
        Ball poch = s;                           // sigma ... (sigma+2k-2)
        bool done = false;
        double prev_mag = 0;
        for (long k = 1; k <= prec.max_terms; ++k) {
            mpq_class coef = bernoulli(2 * k);
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), 2 * k);
            coef /= mpq_class(f);
            Ball term = Ball::from_mpq(coef, p) * poch * Npow;
            partial += term;

            // first omitted term bounds the remainder (real sigma, sigma+2k+1 > 0)
            mpq_class cnext = bernoulli(2 * k + 2);
            mpz_fac_ui(f.get_mpz_t(), 2 * k + 2);
            cnext /= mpq_class(f);
            Ball poch_next = poch * s.add_si(2 * k - 1) * s.add_si(2 * k);
            Ball rem = Ball::from_mpq(abs(cnext), p) * poch_next.abs() * Npow * Ninv2;
            double rem_mag = rem.mag_d();
            double scale = std::max(1.0, partial.mag_d());
            if (rem_mag <= std::ldexp(scale, static_cast<int>(-p - 6))) {
                partial.add_error(rem);
                done = true;
                break;
            }
            if (k > 3 && rem_mag >= prev_mag && prev_mag > 0) break;  // diverging: larger N
            prev_mag = rem_mag;
            poch = poch_next;
            Npow = Npow * Ninv2;
        }
        if (!done) continue;

        Ball NpowPole = NmS * Ball::exact_si(N, p);  // N^{1-sigma}
        if (times_sm1) return ((s.add_si(-1)) * partial + NpowPole).round_to(prec.bits());
        return (partial + NpowPole / s.add_si(-1)).round_to(prec.bits());
    }
    throw precision_error("zeta_real: Euler-Maclaurin failed to reach target radius");
}

// Accelerated alternating series for eta(sigma), sigma > 0; rigorous error
// bound 2/T_n(3) since the terms (k+1)^{-sigma} are moments of a positive
// measure on [0,1].
Ball zeta_eta_accel(const Ball& sigma, const PrecisionConfig& prec) {
    long n = static_cast<long>(prec.digits * 1.31) + 6;
    mpfr_prec_t p = prec.bits() + static_cast<mpfr_prec_t>(n * 2.544) + 16;
    Ball s = sigma.round_to(p);

    mpz_class t0(1), t1(3), tmp;
    for (long i = 1; i < n; ++i) {
        tmp = 6 * t1 - t0;
        t0 = t1;
        t1 = tmp;
    }
    const mpz_class& d = (n == 0) ? t0 : t1;  // T_n(3)

    Ball b = Ball::exact_si(-1, p);
    Ball c = -Ball::from_mpz(d, p);
    Ball acc(p);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        Ball ak = (-(s * Ball::exact_si(k + 1, p).log())).exp();
        acc += c * ak;
        b = b.mul_si(2 * (k + n)).mul_si(k - n).div_si(2 * k + 1).div_si(k + 1);
    }
    Ball eta = acc / Ball::from_mpz(d, p);
    eta.add_error(Ball::exact_si(2, p) / Ball::from_mpz(d, p));

    // zeta = eta / (1 - 2^{1-sigma})
    Ball pow2 = ((Ball::exact_si(1, p) - s) * Ball::ln2(p)).exp();
    Ball den = Ball::exact_si(1, p) - pow2;
    return (eta / den).round_to(prec.bits());
}

} // namespace

namespace {
std::map<std::pair<unsigned long, long>, Ball> g_zeta_uint_cache;
std::mutex g_zeta_uint_mu;
} // namespace

Ball zeta_uint(unsigned long k, const PrecisionConfig& prec) {
    if (k < 2) throw invalid_argument("zeta_uint: k must be >= 2");
    {
        std::lock_guard<std::mutex> lk(g_zeta_uint_mu);
        auto it = g_zeta_uint_cache.find({k, prec.digits});
        if (it != g_zeta_uint_cache.end()) return it->second;
    }
    Ball v(prec.bits());
    if (k >= 40) {
        // direct Dirichlet sum; tail <= M^{1-k}/(k-1)
        mpfr_prec_t p = prec.bits() + 16;
        long M = static_cast<long>(std::ceil(std::pow(10.0, (prec.digits + 6.0) / k))) + 1;
        Ball acc = Ball::exact_si(1, p);
        for (long n = 2; n <= M; ++n) acc += Ball::exact_si(n, p).pow_si(-static_cast<long>(k));
        Ball tail = Ball::exact_si(M, p).pow_si(1 - static_cast<long>(k)).div_si(static_cast<long>(k - 1));
        acc.add_error(tail);
        v = acc.round_to(prec.bits());
    } else {
        v = zeta_real(Ball::exact_ui(k, prec.bits() + 16), prec);
    }
    std::lock_guard<std::mutex> lk(g_zeta_uint_mu);
    g_zeta_uint_cache.emplace(std::make_pair(k, prec.digits), v);
    return v;
}

Ball zeta_times_sm1(const Ball& sigma, const PrecisionConfig& prec) {
    double c = sigma.center_d();
    if (std::fabs(c - 1.0) < 0.25) return zeta_em(sigma, prec, true);
    return (sigma.add_si(-1)) * zeta_real(sigma, prec);
}

Ball zeta_real(const Ball& sigma, const PrecisionConfig& prec) {
    mpfr_prec_t p = prec.bits() + 16;
    Ball s = sigma.round_to(p);
    Ball d1 = s.add_si(-1);
    double tol = std::pow(10.0, -static_cast<double>(prec.digits - 10));
    if (d1.abs().lower_d() <= tol)
        throw domain_error("zeta_real: argument too close to the pole at 1");

    double c = s.center_d();
    if (c >= 2.0) return zeta_em(s, prec, false);
    if (c > 0.0) {
        if (std::fabs(c - 1.0) < 0.25) return (zeta_em(s, prec, true) / d1).round_to(prec.bits());
        return zeta_eta_accel(s, prec);
    }
    if (c > -0.5) return zeta_em(s, prec, false);

    // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    Ball one_m_s = Ball::exact_si(1, p) - s;
    Ball pi = Ball::pi(p);
    Ball f = (s * Ball::ln2(p)).exp();
    f = f * ((s.add_si(-1)) * pi.log()).exp();
    f = f * (pi * s.mul_2si(-1)).sin();
    f = f * gamma_real(one_m_s, prec.with_digits(prec.digits + 10));
    f = f * zeta_real(one_m_s, prec.with_digits(prec.digits + 10));
    return f.round_to(prec.bits());
}

// --- xi ----------------------------------------------------------------------

Ball xi_real(const Ball& sigma, const PrecisionConfig& prec) {
    mpfr_prec_t p = prec.bits() + 16;
    Ball s = sigma.round_to(p);
    Ball pi = Ball::pi(p);
    PrecisionConfig pr = prec.with_digits(prec.digits + 10);

    if (s.center_d() > -0.5) {
        // (s-1) pi^{-s/2} Gamma(s/2+1) zeta(s), with the pole of zeta
        // cancelled inside zeta_times_sm1
        Ball half_s = s.mul_2si(-1);
        Ball out = ((-half_s) * pi.log()).exp();
        out = out * gamma_real(half_s.add_si(1), pr);
        out = out * zeta_times_sm1(s, pr);
        return out.round_to(prec.bits());
    }
    // reflected form, free of the Gamma poles at the trivial zeros:
    // xi(s) = 2^{s-1} pi^{s/2} s(s-1) Gamma(1-s) zeta(1-s) / Gamma(1-s/2)
    Ball one_m_s = Ball::exact_si(1, p) - s;
    Ball out = ((s.add_si(-1)) * Ball::ln2(p)).exp();
    out = out * (s.mul_2si(-1) * pi.log()).exp();
    out = out * s * s.add_si(-1);
    out = out * gamma_real(one_m_s, pr);
    out = out * zeta_real(one_m_s, pr);
    out = out / gamma_real(Ball::exact_si(1, p) - s.mul_2si(-1), pr);
    return out.round_to(prec.bits());
}

Ball inv_xi_half_plus(const Ball& t, const PrecisionConfig& prec) {
    mpfr_prec_t p = prec.bits() + 16;
    Ball half = Ball::exact_si(1, p).mul_2si(-1);
    return xi_real(half + t.abs(), prec).recip();
}

} // namespace pfflab
