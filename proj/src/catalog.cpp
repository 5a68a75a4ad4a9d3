#include "pfflab/catalog.hpp"

#include <cmath>

#include "pfflab/errors.hpp"
#include "pfflab/numerics.hpp"

namespace pfflab {

namespace {

constexpr long kStoredZeros = 40;

Ball theta_eval_impl(const Ball& x, const PrecisionConfig& prec) {
    mpfr_prec_t p = prec.bits() + 16;
    Ball xl = x.round_to(p);
    Ball pi = Ball::pi(p);

    if (xl.lower_d() >= 1.0) {
        // 1 + 2 sum_{j>=1} (-1)^j e^{-j^2 x}; alternating with decreasing
        // terms, so the tail is bounded by the first omitted term
        Ball acc = Ball::exact_si(1, p);
        long j = 1;
        for (; j <= prec.max_terms; ++j) {
            Ball term = (-(xl.mul_si(j * j))).exp().mul_2si(1);
            if (j % 2 == 1)
                acc -= term;
            else
                acc += term;
            if (term.mag_d() <= std::ldexp(1.0, static_cast<int>(-p - 6))) break;
        }
        if (j > prec.max_terms) throw precision_error("theta_eval: term cap exhausted");
        Ball omitted = (-(xl.mul_si((j + 1) * (j + 1)))).exp().mul_2si(1);
        acc.add_error(omitted);
        return acc.round_to(prec.bits());
    }

    // modular transform: theta(x) = sqrt(pi/x) * 2 sum_{k>=0} e^{-pi^2 (k+1/2)^2 / x};
    // positive terms with ratio <= e^{-2 pi^2 / x}, so tail <= 2 * next term
    Ball pref = (pi / xl).sqrt();
    Ball pi2_over_x = pi * pi / xl;
    Ball acc(p);
    long k = 0;
    for (; k <= prec.max_terms; ++k) {
        // exponent: -pi^2 (k+1/2)^2 / x = -pi^2 (2k+1)^2 / (4x)
        Ball term = (-(pi2_over_x.mul_si((2 * k + 1) * (2 * k + 1)).mul_2si(-2))).exp();
        acc += term;
        if (term.mag_d() <= std::ldexp(std::max(acc.mag_d(), 1e-300), static_cast<int>(-p - 6)))
            break;
    }
    if (k > prec.max_terms) throw precision_error("theta_eval: term cap exhausted");
    Ball omitted = (-(pi2_over_x.mul_si((2 * k + 3) * (2 * k + 3)).mul_2si(-2))).exp().mul_2si(1);
    acc.add_error(omitted);
    return (pref * acc.mul_2si(1)).round_to(prec.bits());
}

// enclosure-safe evaluation of a function that is identically 0 left of
// `edge` and in [0, cap] just right of it
Ball eval_with_left_cutoff(const Ball& x, double edge, double cap,
                           const std::function<Ball(const Ball&)>& f, mpfr_prec_t p) {
    if (x.upper_d() <= edge) return Ball(p);
    if (x.lower_d() > edge) return f(x);
    mpfr_t lo, hi;
    mpfr_inits2(p, lo, hi, (mpfr_ptr) nullptr);
    mpfr_set_zero(lo, 1);
    mpfr_set_d(hi, cap, MPFR_RNDU);
    Ball out = Ball::from_endpoints(lo, hi, p);
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    return out;
}

} // namespace

Ball theta_eval(const Ball& x, const PrecisionConfig& prec, double x_min) {
    if (x.upper_d() <= 0.0) return Ball(prec.bits());  // exactly 0 on x <= 0
    if (x.lower_d() < x_min)
        throw precision_error("theta_eval: x below the configured x_min");
    return theta_eval_impl(x, prec);
}

CatalogEntry make_gaussian(const mpq_class& gamma) {
    if (gamma <= 0) throw invalid_argument("make_gaussian: gamma must be positive");
    CatalogEntry e;
    e.name = "gaussian";
    e.lambda_text = "gamma^(-1/2) exp(-pi x^2 / gamma)";
    e.psi_text = "exp(-gamma s^2 / (4 pi))";
    e.support = Support{-INFINITY, INFINITY};
    e.strip_lo = -INFINITY;
    e.strip_hi = INFINITY;
    e.eval = [gamma](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball g = Ball::from_mpq(gamma, p);
        Ball pref = g.sqrt().recip();
        return pref * (-(Ball::pi(p) * x * x / g)).exp();
    };
    e.psi_eval = [gamma](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball g = Ball::from_mpq(gamma, p);
        return (-(g * s * s / Ball::pi(p).mul_2si(2))).exp();
    };
    LPFactorization fac;
    fac.C = 1;
    fac.m = 0;
    fac.gamma = rational_over_4pi_const(gamma);
    fac.gamma_positive = true;
    e.lp_fac = fac;
    e.moment_rule = [gamma](int j, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        if (j % 2 == 1) return Ball(p);
        // mu_{2k} = (2k-1)!! (gamma / (2 pi))^k
        int k = j / 2;
        mpz_class df(1);
        for (int i = 1; i <= k; ++i) df *= 2 * i - 1;
        Ball base = Ball::from_mpq(gamma, p) / Ball::pi(p).mul_2si(1);
        return Ball::from_mpz(df, p) * base.pow_si(k);
    };
    double g = mpq_class(gamma).get_d();
    e.left_env = e.right_env =
        DecayEnvelope{DecayEnvelope::Form::Gaussian, 1.0 / std::sqrt(g) + 0.01, M_PI / g * 0.999, 0.0, false};
    e.window_lo = -4;
    e.window_hi = 4;
    return e;
}

CatalogEntry make_one_sided_exp(const mpq_class& delta) {
    if (delta <= 0) throw invalid_argument("make_one_sided_exp: delta must be positive");
    CatalogEntry e;
    e.name = "one_sided_exp";
    e.lambda_text = "delta^(-1) exp(-x/delta) on [0, inf)";
    e.psi_text = "1 + delta s";
    e.support = Support{0, INFINITY};
    double d = mpq_class(delta).get_d();
    e.strip_lo = -1.0 / d;
    e.strip_hi = INFINITY;
    e.eval = [delta](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball dd = Ball::from_mpq(delta, p);
        auto body = [&](const Ball& t) { return (-(t / dd)).exp() / dd; };
        return eval_with_left_cutoff(x, 0.0, mpq_class(1 / delta).get_d() * 1.01, body, p);
    };
    e.psi_eval = [delta](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        return Ball::exact_si(1, p) + Ball::from_mpq(delta, p) * s;
    };
    OneSidedFactorization os;
    os.C = 1;
    os.zeros = {delta};
    e.os_fac = os;
    e.lp_fac = os.to_lp();
    e.moment_rule = [delta](int j, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        // mu_j = j! delta^j
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), j);
        mpq_class v(f);
        for (int i = 0; i < j; ++i) v *= delta;
        return Ball::from_mpq(v, p);
    };
    e.left_env = DecayEnvelope{DecayEnvelope::Form::CompactSupport, 0, 0, 0, false};
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0 / d + 0.01, 1.0 / d * 0.999, 0.0, false};
    e.window_lo = -1;
    e.window_hi = 6;
    return e;
}

namespace {

LPFactorization harmonic_factorization(int m) {
    // zeros at delta_j = 1/j with the Euler-constant linear term: the
    // Weierstrass data of 1/Gamma (m=1) and 1/Gamma(.+1) (m=0)
    LPFactorization fac;
    fac.C = 1;
    fac.m = m;
    fac.delta = euler_gamma_const();
    for (long n = 1; n <= kStoredZeros; ++n) fac.zeros.emplace_back(1, n);
    fac.tail = ZeroTail{ZeroTail::Kind::PowerReciprocal, 1, kStoredZeros + 1, false};
    return fac;
}

CatalogEntry make_gumbel() {
    CatalogEntry e;
    e.name = "gumbel";
    e.lambda_text = "exp(-exp(-x))";
    e.psi_text = "1 / Gamma(s)";
    e.support = Support{-INFINITY, INFINITY};
    e.strip_lo = 0;
    e.strip_hi = INFINITY;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        Ball xl = x.round_to(pr.bits() + 16);
        return (-((-xl).exp())).exp().round_to(pr.bits());
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        return gamma_real(s, pr).recip();
    };
    e.lp_fac = harmonic_factorization(1);
    e.left_env = DecayEnvelope{DecayEnvelope::Form::DoubleExponential, 1.0, 1.0, 0.0, false};
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 0.0, 0.0, false};  // |Lambda| <= 1
    e.window_lo = -3;
    e.window_hi = 8;
    e.integrable = false;
    e.pff_shift = -1;
    return e;
}

CatalogEntry make_gumbel_normalized() {
    CatalogEntry e;
    e.name = "gumbel_normalized";
    e.lambda_text = "exp(-x - exp(-x))";
    e.psi_text = "1 / Gamma(s + 1)";
    e.support = Support{-INFINITY, INFINITY};
    e.strip_lo = -1;
    e.strip_hi = INFINITY;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        Ball xl = x.round_to(pr.bits() + 16);
        return (-(xl + (-xl).exp())).exp().round_to(pr.bits());
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        return gamma_real(s.add_si(1), pr).recip();
    };
    e.lp_fac = harmonic_factorization(0);
    // mu_j = (-1)^j f_j where Gamma(1+s) = sum f_j s^j / j!
    e.moment_rule = [](int j, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 32;
        PowerSeries L;
        L.coeffs.push_back(Ball(p));
        if (j >= 1) L.coeffs.push_back(-Ball::euler_gamma(p));
        for (int k = 2; k <= j; ++k) {
            Ball lk = zeta_uint(k, pr.with_digits(pr.digits + 10)).round_to(p) *
                      factorial_ball(k - 1, p);
            if (k % 2 == 1) lk = -lk;
            L.coeffs.push_back(std::move(lk));
        }
        Ball f = series_exp(L)[j];
        return (j % 2 == 1) ? -f : f;
    };
    e.left_env = DecayEnvelope{DecayEnvelope::Form::DoubleExponential, 1.0, 0.5, 0.0, false};
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 1.0, 0.0, false};
    e.window_lo = -3;
    e.window_hi = 8;
    return e;
}

CatalogEntry make_logistic() {
    CatalogEntry e;
    e.name = "logistic";
    e.lambda_text = "1 / (1 + exp(-x))";
    e.psi_text = "sin(pi s) / pi";
    e.support = Support{-INFINITY, INFINITY};
    e.strip_lo = 0;
    e.strip_hi = 1;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball xl = x.round_to(p);
        return (Ball::exact_si(1, p) + (-xl).exp()).recip().round_to(pr.bits());
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball pi = Ball::pi(p);
        return ((pi * s).sin() / pi).round_to(pr.bits());
    };
    LPFactorization fac;
    fac.C = 1;
    fac.m = 1;
    fac.paired = true;
    for (long n = 1; n <= kStoredZeros; ++n) {
        fac.zeros.emplace_back(1, n);
        fac.zeros.emplace_back(-1, n);
    }
    fac.tail = ZeroTail{ZeroTail::Kind::PowerReciprocal, 1, kStoredZeros + 1, true};
    e.lp_fac = fac;
    e.left_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 1.0, 0.0, false};
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 0.0, 0.0, false};
    e.window_lo = -8;
    e.window_hi = 8;
    e.integrable = false;
    e.pff_shift = -0.5;
    return e;
}

CatalogEntry make_jacobi_theta() {
    CatalogEntry e;
    e.name = "jacobi_theta";
    e.lambda_text = "sum_{j in Z} (-1)^j exp(-j^2 x) for x > 0, 0 for x <= 0";
    e.psi_text = "sqrt(s) sinh(pi sqrt(s)) / pi  (= -(1/pi) sqrt(-s) sin(pi sqrt(-s)))";
    e.support = Support{0, INFINITY};
    e.strip_lo = 0;
    e.strip_hi = INFINITY;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        auto body = [&](const Ball& t) { return theta_eval_impl(t, pr); };
        return eval_with_left_cutoff(x, 0.0, 1.0, body, p);
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball r = s.sqrt();
        return (r * (Ball::pi(p) * r).sinh() / Ball::pi(p)).round_to(pr.bits());
    };
    LPFactorization fac;
    fac.C = 1;
    fac.m = 1;
    fac.delta = pi_sq_over_6_const();
    for (long n = 1; n <= kStoredZeros; ++n) fac.zeros.emplace_back(1, n * n);
    fac.tail = ZeroTail{ZeroTail::Kind::PowerReciprocal, 2, kStoredZeros + 1, false};
    e.lp_fac = fac;
    e.left_env = DecayEnvelope{DecayEnvelope::Form::CompactSupport, 0, 0, 0, false};
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 0.0, 0.0, false};
    e.window_lo = -0.5;
    e.window_hi = 6;
    e.integrable = false;
    e.pff_shift = -1;
    return e;
}

// |E_{2k}| via the signed Euler-number recurrence
mpz_class secant_number(int k) {
    static std::vector<mpz_class> cache = {mpz_class(1)};
    while (static_cast<int>(cache.size()) <= k) {
        int kk = static_cast<int>(cache.size());
        mpz_class acc(0), b;
        for (int j = 0; j < kk; ++j) {
            mpz_bin_uiui(b.get_mpz_t(), 2 * kk, 2 * j);
            mpz_class ej = (j % 2 == 0) ? cache[j] : -cache[j];  // E_{2j} = (-1)^j |E_{2j}|
            acc += b * ej;
        }
        mpz_class e2k = -acc;  // signed E_{2k}
        cache.push_back(kk % 2 == 0 ? e2k : -e2k);
    }
    return cache[k];
}

CatalogEntry make_logistic_pff() {
    CatalogEntry e;
    e.name = "logistic_pff";
    e.lambda_text = "(1/2) sech(x/2)   [= e^{-x/2} logistic(x)]";
    e.psi_text = "cos(pi s) / pi";
    e.support = Support{-INFINITY, INFINITY};
    e.strip_lo = -0.5;
    e.strip_hi = 0.5;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball xl = x.round_to(p);
        return (xl.mul_2si(-1).cosh().mul_2si(1)).recip().round_to(pr.bits());
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball pi = Ball::pi(p);
        return ((pi * s).cos() / pi).round_to(pr.bits());
    };
    e.moment_rule = [](int j, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        if (j % 2 == 1) return Ball(p);
        // mu_{2k} = pi^{2k+1} |E_{2k}|
        return Ball::pi(p).pow_si(j + 1) * Ball::from_mpz(secant_number(j / 2), p);
    };
    e.left_env = e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 0.5, 0.0, false};
    e.window_lo = -8;
    e.window_hi = 8;
    return e;
}

CatalogEntry make_jacobi_theta_pff() {
    CatalogEntry e = make_jacobi_theta();
    e.name = "jacobi_theta_pff";
    e.lambda_text = "e^{-x} theta(x)";
    e.psi_text = "sqrt(s+1) sinh(pi sqrt(s+1)) / pi";
    e.strip_lo = -1;
    e.strip_hi = INFINITY;
    auto base_eval = e.eval;
    e.eval = [base_eval](const Ball& x, const PrecisionConfig& pr) {
        return base_eval(x, pr) * (-x).exp();
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        Ball r = s.add_si(1).sqrt();
        return (r * (Ball::pi(p) * r).sinh() / Ball::pi(p)).round_to(pr.bits());
    };
    e.lp_fac.reset();  // shifted-argument factorization not represented
    e.right_env = DecayEnvelope{DecayEnvelope::Form::Exponential, 1.0, 1.0, 0.0, false};
    e.integrable = true;
    e.pff_shift = 0;
    return e;
}

} // namespace

CatalogEntry make_indicator() {
    CatalogEntry e;
    e.name = "indicator";
    e.lambda_text = "indicator of [0, 1] (negative control: not totally positive)";
    e.psi_text = "s / (1 - exp(-s))";
    e.support = Support{0, 1};
    e.strip_lo = -INFINITY;
    e.strip_hi = INFINITY;
    e.eval = [](const Ball& x, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits();
        double lo = x.lower_d(), hi = x.upper_d();
        if (hi < 0.0 || lo > 1.0) return Ball(p);
        if (lo >= 0.0 && hi <= 1.0) return Ball::exact_si(1, p);
        mpfr_t l, h;
        mpfr_inits2(p, l, h, (mpfr_ptr) nullptr);
        mpfr_set_zero(l, 1);
        mpfr_set_ui(h, 1, MPFR_RNDU);
        Ball out = Ball::from_endpoints(l, h, p);
        mpfr_clears(l, h, (mpfr_ptr) nullptr);
        return out;
    };
    e.psi_eval = [](const Ball& s, const PrecisionConfig& pr) {
        mpfr_prec_t p = pr.bits() + 16;
        return s / (Ball::exact_si(1, p) - (-s).exp());
    };
    e.left_env = e.right_env = DecayEnvelope{DecayEnvelope::Form::CompactSupport, 0, 0, 0, false};
    e.window_lo = -1.5;
    e.window_hi = 2.5;
    e.is_tp = false;
    return e;
}

std::vector<CatalogEntry> catalog_list() {
    std::vector<CatalogEntry> out;
    out.push_back(make_gaussian(1));
    out.push_back(make_one_sided_exp(1));
    out.push_back(make_gumbel());
    out.push_back(make_gumbel_normalized());
    out.push_back(make_logistic());
    out.push_back(make_jacobi_theta());
    return out;
}

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "gaussian") return make_gaussian(1);
    if (name == "one_sided_exp") return make_one_sided_exp(1);
    if (name == "gumbel") return make_gumbel();
    if (name == "gumbel_normalized") return make_gumbel_normalized();
    if (name == "logistic") return make_logistic();
    if (name == "jacobi_theta") return make_jacobi_theta();
    if (name == "indicator") return make_indicator();
    if (name == "logistic_pff") return make_logistic_pff();
    if (name == "jacobi_theta_pff") return make_jacobi_theta_pff();
    throw invalid_argument("catalog_entry: unknown subject '" + name + "'");
}

CatalogEntry pff_normalized(const CatalogEntry& e) {
    if (e.integrable) return e;
    if (e.name == "gumbel") return make_gumbel_normalized();
    if (e.name == "logistic") return make_logistic_pff();
    if (e.name == "jacobi_theta") return make_jacobi_theta_pff();
    throw invalid_argument("pff_normalized: no normalized variant for '" + e.name + "'");
}

} // namespace pfflab
