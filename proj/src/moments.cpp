#include "pfflab/moments.hpp"

#include <cmath>

#include "pfflab/errors.hpp"
#include "pfflab/lp_class.hpp"

namespace pfflab {

namespace {

bool envelope_fast_enough(const DecayEnvelope& e) {
    switch (e.form) {
        case DecayEnvelope::Form::CompactSupport: return true;
        case DecayEnvelope::Form::Exponential: return e.a > 0;
        default: return !e.missing();
    }
}

Ball quadrature_moment(const CatalogEntry& f, int j, double target, const QuadratureConfig& qc,
                       const PrecisionConfig& prec) {
    mpfr_prec_t p = prec.bits() + 24;
    PrecisionConfig inner = prec.with_digits(prec.digits + 8);

    // truncation radius per side; x^j is absorbed into the shift
    // beta = j ln(R)/R, valid since ln(x)/x decreases for x >= R >= 3
    auto side_radius = [&](const DecayEnvelope& env) {
        double R = std::max(3.0, env.solve_radius(target / 8, 0.0, 8, p));
        for (int it = 0; it < 3; ++it) {
            double beta = j * std::log(R) / R;
            R = std::max(R, env.solve_radius(target / 8, beta, 8, p));
        }
        return R;
    };

    double a, b;
    Ball tail_l(p), tail_r(p);
    if (std::isfinite(f.support.lo)) {
        a = f.support.lo;
    } else {
        double R = side_radius(f.left_env);
        a = -R;
        tail_l = f.left_env.tail_bound(R, j * std::log(R) / R, p);
    }
    if (std::isfinite(f.support.hi)) {
        b = f.support.hi;
    } else {
        double R = side_radius(f.right_env);
        b = R;
        tail_r = f.right_env.tail_bound(R, j * std::log(R) / R, p);
    }

    auto integrand = [&](const Ball& x) {
        Ball v = f.eval(x, inner);
        return (j == 0) ? v : v * x.pow_si(j);
    };
    Ball val = integrate_de(integrand, Ball::exact_d(a, p), Ball::exact_d(b, p), p,
                            target * 0.5, qc.level);
    val.add_error(tail_l);
    val.add_error(tail_r);
    return val.round_to(prec.bits());
}

} // namespace

MomentSequence compute_moments(const CatalogEntry& f, int N, const QuadratureConfig& qc,
                               const PrecisionConfig& prec) {
    if (N < 0) throw invalid_argument("compute_moments: N must be >= 0");
    qc.validate();
    MomentSequence ms;
    ms.mu.reserve(N + 1);

    if (f.moment_rule) {
        ms.source = MomentSequence::Source::ClosedForm;
        for (int j = 0; j <= N; ++j) ms.mu.push_back(f.moment_rule(j, prec));
    } else {
        if (!f.integrable)
            throw domain_error("compute_moments: '" + f.name +
                               "' is not integrable (envelope missing); use its normalized variant");
        if (!envelope_fast_enough(f.left_env) || !envelope_fast_enough(f.right_env))
            throw domain_error("compute_moments: decay envelope of '" + f.name +
                               "' is not exponential-or-faster");
        ms.source = MomentSequence::Source::Quadrature;
        for (int j = 0; j <= N; ++j) {
            double target_j = qc.target_abs_err * std::pow(0.5, j);
            ms.mu.push_back(quadrature_moment(f, j, target_j, qc, prec));
        }
    }

    if (!ms.mu[0].is_positive())
        throw precision_error("compute_moments: mu_0 not certified positive");

    // exact view when every moment is a dyadic-exact rational
    bool exact = true;
    for (const Ball& b : ms.mu) exact &= b.is_exact();
    if (exact) {
        std::vector<mpq_class> q;
        q.reserve(ms.mu.size());
        for (const Ball& b : ms.mu) {
            mpq_class v;
            mpfr_get_q(v.get_mpq_t(), b.center());
            q.push_back(v);
        }
        ms.exact = std::move(q);
    }
    return ms;
}

PowerSeries f_series(const MomentSequence& ms) {
    if (ms.mu.empty()) throw invalid_argument("f_series: empty moment sequence");
    PowerSeries ps;
    ps.coeffs.reserve(ms.mu.size());
    for (std::size_t j = 0; j < ms.mu.size(); ++j)
        ps.coeffs.push_back(j % 2 == 0 ? ms.mu[j] : -ms.mu[j]);
    return ps;
}

PipelineResult schoenberg_pipeline(const CatalogEntry& f, int N, int n_max,
                                   const QuadratureConfig& qc, const PrecisionConfig& prec) {
    if (N < n_max) throw invalid_argument("schoenberg_pipeline: need N >= n_max");
    PipelineResult out;
    out.moments = compute_moments(f, N, qc, prec);
    out.f_ser = f_series(out.moments);
    out.psi_series = series_reciprocal(out.f_ser);

    for (int n = 1; n <= n_max; ++n) {
        Polynomial xn(RatPoly::monomial(mpq_class(1), n));
        Polynomial qn = apply_series_operator(out.psi_series, xn);
        Verdict3 v;
        if (poly_is_exact(qn)) {
            v = all_roots_real_exact(std::get<RatPoly>(qn)) ? Verdict3::CertifiedYes
                                                            : Verdict3::CertifiedNo;
        } else {
            v = certify_all_roots_real(std::get<BallPoly>(qn), prec);
        }
        out.jensen_report.push_back(JensenVerdictRow{n, v});
    }
    return out;
}

} // namespace pfflab
