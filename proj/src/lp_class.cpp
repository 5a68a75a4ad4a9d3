#include "pfflab/lp_class.hpp"

#include <cmath>

#include "pfflab/errors.hpp"
#include "pfflab/numerics.hpp"
#include "pfflab/rng.hpp"

namespace pfflab {

ConstFn rational_const(const mpq_class& q) {
    return [q](mpfr_prec_t p) { return Ball::from_mpq(q, p); };
}

ConstFn euler_gamma_const() {
    return [](mpfr_prec_t p) { return Ball::euler_gamma(p); };
}

ConstFn rational_over_4pi_const(const mpq_class& q) {
    return [q](mpfr_prec_t p) { return Ball::from_mpq(q, p) / Ball::pi(p).mul_2si(2); };
}

ConstFn pi_sq_over_6_const() {
    return [](mpfr_prec_t p) {
        Ball pi = Ball::pi(p);
        return (pi * pi).div_si(6);
    };
}

void LPFactorization::validate() const {
    if (C <= 0) throw invalid_argument("LPFactorization: C must be positive");
    if (m < 0) throw invalid_argument("LPFactorization: m must be non-negative");
    for (const auto& d : zeros)
        if (d == 0) throw invalid_argument("LPFactorization: zero delta_j");
    if (paired && zeros.size() % 2 != 0)
        throw invalid_argument("LPFactorization: paired zeros need even count");
    if (std::isinf(tail_sq_bound))
        throw domain_error("LPFactorization: divergent zero tail (sum delta_j^2 unbounded)");
    bool has_zero_mass = !zeros.empty() || tail.kind != ZeroTail::Kind::None || tail_sq_bound > 0;
    if (!gamma_positive && !has_zero_mass)
        throw invalid_argument(
            "LPFactorization: gamma + sum delta_j^2 must be positive (pure exponential excluded)");
}

void OneSidedFactorization::validate() const {
    if (C <= 0) throw invalid_argument("OneSidedFactorization: C must be positive");
    for (const auto& d : zeros)
        if (d < 0) throw invalid_argument("OneSidedFactorization: delta_j must be >= 0");
    if (std::isinf(tail_sum_bound))
        throw domain_error("OneSidedFactorization: divergent zero tail");
}

LPFactorization OneSidedFactorization::to_lp() const {
    validate();
    if (tail_sum_bound > 0)
        throw invalid_argument("OneSidedFactorization::to_lp: finite zero lists only");
    LPFactorization lp;
    lp.C = C;
    lp.m = 0;
    mpq_class shift(0);
    for (const auto& d : zeros) shift += d;
    ConstFn base = delta;
    lp.delta = [base, shift](mpfr_prec_t p) {
        Ball s = Ball::from_mpq(shift, p);
        return base ? base(p) + s : s;
    };
    for (const auto& d : zeros)
        if (d != 0) lp.zeros.push_back(d);
    lp.validate();
    return lp;
}

namespace {

// S(l) = sum_{j >= start} j^{-l}  (l >= 2)
Ball tail_power_sum(long start, unsigned long l, const PrecisionConfig& prec, mpfr_prec_t p) {
    Ball s = zeta_uint(l, prec).round_to(p);
    for (long j = 1; j < start; ++j) s -= Ball::exact_si(j, p).pow_si(-static_cast<long>(l));
    return s;
}

// log of the omitted tail product at the point s:
//   unpaired: sum_{j>=start} [ln(1 + s/j^p) - s/j^p]
//   paired:   sum_{j>=start} ln(1 - s^2/j^{2p})
Ball structured_tail_log(const ZeroTail& tail, const Ball& s, const PrecisionConfig& prec,
                         mpfr_prec_t p) {
    double s_mag = s.mag_d();
    double base = std::pow(static_cast<double>(tail.start), tail.power);
    double q = tail.paired ? (s_mag / base) * (s_mag / base) : s_mag / base;
    if (!(q <= 0.5))
        throw domain_error("lp_eval: |s| too large for the stored-zero prefix of the tail");

    Ball acc(p);
    Ball term_ref(p);
    for (long k = tail.paired ? 1 : 2; k <= prec.max_terms; ++k) {
        unsigned long l = tail.paired ? static_cast<unsigned long>(2 * tail.power * k)
                                      : static_cast<unsigned long>(tail.power * k);
        Ball S = tail_power_sum(tail.start, l, prec, p);
        Ball term(p);
        if (tail.paired) {
            term = -(s.pow_si(2 * k) * S).div_si(k);
        } else {
            term = (s.pow_si(k) * S).div_si(k);
            if (k % 2 == 0) term = -term;
        }
        acc += term;
        double rem = term.mag_d() * q / (1 - q);
        if (rem <= std::ldexp(1.0, static_cast<int>(-p - 8))) {
            acc.add_error_d(rem);
            return acc;
        }
    }
    throw precision_error("lp_eval: tail series did not reach the target radius");
}

} // namespace

Ball lp_eval(const LPFactorization& fac, const Ball& s, const PrecisionConfig& prec) {
    fac.validate();
    mpfr_prec_t p = prec.bits() + 16;
    Ball sb = s.round_to(p);

    Ball value = Ball::from_mpq(fac.C, p);
    if (fac.m > 0) value = value * sb.pow_si(fac.m);

    // exponent: delta s - gamma s^2 - (sum of stored delta_j) s
    mpq_class stored_sum(0);
    for (const auto& d : fac.zeros) stored_sum += d;
    Ball expo = Ball::from_mpq(-stored_sum, p) * sb;
    if (fac.delta) expo += fac.delta(p) * sb;
    if (fac.gamma) expo -= fac.gamma(p) * sb * sb;
    value = value * expo.exp();

    for (const auto& d : fac.zeros)
        value = value * (Ball::exact_si(1, p) + Ball::from_mpq(d, p) * sb);

    if (fac.tail.kind == ZeroTail::Kind::PowerReciprocal) {
        value = value * structured_tail_log(fac.tail, sb, prec, p).exp();
    } else if (fac.tail_sq_bound > 0) {
        double s_mag = sb.mag_d();
        double q = s_mag * fac.tail_delta_max;
        if (!(q <= 0.5))
            throw domain_error("lp_eval: |s| too large for the generic tail bound");
        double bound = s_mag * s_mag * fac.tail_sq_bound / (2 * (1 - q));
        value = value * Ball::zero_pm_d(bound, p).exp();
    }
    return value.round_to(prec.bits());
}

RatPoly lp_truncate(const LPFactorization& fac, long n) {
    fac.validate();
    long groups = fac.stored_zero_groups();
    if (n < 0 || n > groups)
        throw invalid_argument("lp_truncate: n exceeds the stored zero list");
    RatPoly poly = RatPoly::monomial(fac.C, fac.m);
    long count = fac.paired ? 2 * n : n;
    for (long j = 0; j < count; ++j) {
        RatPoly lin(std::vector<mpq_class>{mpq_class(1), fac.zeros[j]});
        poly = poly * lin;
    }
    return poly;
}

PowerSeries lp_series(const LPFactorization& fac, int N, const PrecisionConfig& prec) {
    fac.validate();
    if (fac.m > 0)
        throw domain_error("lp_series: zero at the origin (m > 0); no reciprocal-ready series");
    if (N < 0) throw invalid_argument("lp_series: N must be >= 0");
    mpfr_prec_t p = prec.bits() + 16;

    // factorial-normalized log coefficients
    PowerSeries L;
    L.coeffs.reserve(N + 1);
    L.coeffs.push_back(Ball::from_mpq(fac.C, p).log());
    if (N >= 1) L.coeffs.push_back(fac.delta ? fac.delta(p) : Ball(p));
    for (int k = 2; k <= N; ++k) {
        // P_k = sum over all zeros of delta_j^k
        mpq_class stored(0);
        mpq_class dk;
        for (const auto& d : fac.zeros) {
            mpz_pow_ui(dk.get_num_mpz_t(), d.get_num_mpz_t(), k);
            mpz_pow_ui(dk.get_den_mpz_t(), d.get_den_mpz_t(), k);
            dk.canonicalize();
            stored += dk;
        }
        Ball Pk = Ball::from_mpq(stored, p);
        if (fac.tail.kind == ZeroTail::Kind::PowerReciprocal) {
            bool tail_contributes = !fac.tail.paired || (k % 2 == 0);
            if (tail_contributes) {
                Ball S = tail_power_sum(fac.tail.start,
                                        static_cast<unsigned long>(fac.tail.power) * k, prec, p);
                Pk += fac.tail.paired ? S.mul_2si(1) : S;
            }
        } else if (fac.tail_sq_bound > 0) {
            // |tail of P_k| <= tail_sq_bound * tail_delta_max^{k-2}
            double b = fac.tail_sq_bound * std::pow(fac.tail_delta_max, k - 2);
            Pk.add_error_d(b);
        }
        // L_k = (-1)^{k+1} (k-1)! P_k - 2 gamma [k=2]
        Ball lk = Pk * factorial_ball(static_cast<unsigned long>(k - 1), p);
        if (k % 2 == 0) lk = -lk;
        if (k == 2 && fac.gamma) lk -= fac.gamma(p).mul_2si(1);
        L.coeffs.push_back(std::move(lk));
    }

    PowerSeries out = series_exp(L);
    for (auto& b : out.coeffs) b = b.round_to(prec.bits());
    return out;
}

std::pair<Polynomial, Polynomial> jensen(const PowerSeries& ps, int n) {
    if (n < 0 || static_cast<std::size_t>(n) + 1 > ps.size())
        throw invalid_argument("jensen: n exceeds the series length");
    auto exact = ps.exact_view();
    if (exact) {
        RatPoly p, q;
        p.c.assign(n + 1, mpq_class(0));
        q.c.assign(n + 1, mpq_class(0));
        mpz_class b;
        for (int j = 0; j <= n; ++j) {
            mpz_bin_uiui(b.get_mpz_t(), n, j);
            mpq_class v = (*exact)[j] * mpq_class(b);
            p.c[j] = v;
            q.c[n - j] = v;
        }
        p.normalize();
        q.normalize();
        return {Polynomial(p), Polynomial(q)};
    }
    mpfr_prec_t prec = ps[0].prec();
    BallPoly p, q;
    p.c.assign(n + 1, Ball(prec));
    q.c.assign(n + 1, Ball(prec));
    for (int j = 0; j <= n; ++j) {
        Ball v = ps[j] * binom_ball(n, j, prec);
        p.c[j] = v;
        q.c[n - j] = v;
    }
    return {Polynomial(p), Polynomial(q)};
}

std::vector<Ball> turan_deltas(const PowerSeries& ps) {
    if (ps.size() < 3) throw invalid_argument("turan_deltas: need at least 3 coefficients");
    std::vector<Ball> out;
    out.reserve(ps.size() - 2);
    for (std::size_t n = 1; n + 1 < ps.size(); ++n)
        out.push_back(ps[n] * ps[n] - ps[n - 1] * ps[n + 1]);
    return out;
}

PsdResult hankel_psd(const PowerSeries& reciprocal_series, int n, const PrecisionConfig& prec) {
    if (n < 1) throw invalid_argument("hankel_psd: n must be >= 1");
    if (static_cast<std::size_t>(2 * n - 1) > reciprocal_series.size())
        throw invalid_argument("hankel_psd: series too short for this order");
    mpfr_prec_t p = reciprocal_series[0].prec();
    BallMatrix g(n, std::vector<Ball>(n, Ball(p)));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) g[j][k] = reciprocal_series[j + k];
    MinEigResult r = min_eig_enclosure(g, prec);
    return PsdResult{r.psd_verdict, r.min_eig};
}

Polynomial multiplier_apply(const PowerSeries& ps, const Polynomial& p) {
    int deg = poly_degree(p);
    if (deg < 0) throw invalid_argument("multiplier_apply: zero polynomial");
    if (static_cast<std::size_t>(deg) + 1 > ps.size())
        throw invalid_argument("multiplier_apply: series too short for this degree");

    if (poly_is_exact(p)) {
        const RatPoly& rp = std::get<RatPoly>(p);
        if (!roots_real_nonpositive_exact(rp))
            throw domain_error("multiplier_apply: p certifiably has a zero off (-inf, 0]");
        auto exact = ps.exact_view();
        if (exact) {
            RatPoly q;
            q.c.assign(rp.c.size(), mpq_class(0));
            for (int j = 0; j <= deg; ++j) q.c[j] = (*exact)[j] * rp.c[j];
            q.normalize();
            return Polynomial(q);
        }
        mpfr_prec_t prec = ps[0].prec();
        BallPoly q;
        q.c.reserve(deg + 1);
        for (int j = 0; j <= deg; ++j) q.c.push_back(ps[j] * Ball::from_mpq(rp.c[j], prec));
        return Polynomial(q);
    }
    const BallPoly& bp = std::get<BallPoly>(p);
    mpfr_prec_t prec = ps[0].prec();
    BallPoly q;
    q.c.reserve(bp.c.size());
    for (int j = 0; j <= deg; ++j) q.c.push_back(ps[j] * bp.c[j]);
    return Polynomial(q);
}

Polynomial apply_series_operator(const PowerSeries& ps, const Polynomial& p) {
    int deg = poly_degree(p);
    if (deg < 0) throw invalid_argument("apply_series_operator: zero polynomial");

    auto exact = ps.exact_view();
    if (exact && poly_is_exact(p)) {
        const RatPoly& rp = std::get<RatPoly>(p);
        RatPoly q;
        RatPoly d = rp;
        mpz_class fact(1);
        for (int j = 0; j <= deg && static_cast<std::size_t>(j) < ps.size() && !d.is_zero(); ++j) {
            if (j > 0) {
                fact *= j;
                d = d.derivative();
            }
            q = q + d.scaled((*exact)[j] / mpq_class(fact));
        }
        return Polynomial(q);
    }
    mpfr_prec_t prec = ps[0].prec();
    BallPoly bp = to_ball_poly(p, prec);
    BallPoly q;
    q.c.assign(bp.c.size(), Ball(prec));
    BallPoly d = bp;
    for (int j = 0; j <= deg && static_cast<std::size_t>(j) < ps.size() && d.degree() >= 0; ++j) {
        if (j > 0) d = d.derivative();
        Ball coef = ps[j] / factorial_ball(static_cast<unsigned long>(j), prec);
        for (std::size_t i = 0; i < d.c.size(); ++i) q.c[i] += coef * d.c[i];
    }
    return Polynomial(q);
}

namespace {

bool next_combination(std::vector<int>& idx, int m) {
    int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[i] < m - (r - i)) {
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double binom_count(int m, int r) {
    double v = 1;
    for (int i = 0; i < r; ++i) v = v * (m - i) / (i + 1);
    return v;
}

} // namespace

MinorScan pf_sequence_minors(const std::vector<Ball>& a, int max_order, long trials,
                             uint64_t seed) {
    if (max_order < 1 || max_order > 6)
        throw invalid_argument("pf_sequence_minors: max_order must be in 1..6");
    int m = static_cast<int>(a.size());
    if (m < max_order)
        throw invalid_argument("pf_sequence_minors: window too small for the requested order");
    mpfr_prec_t p = a[0].prec();

    auto entry = [&](int j, int k) {
        if (k < j || k - j >= m) return Ball(p);  // exact zero
        return a[k - j];
    };
    auto minor_det = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        int r = static_cast<int>(rows.size());
        BallMatrix sub(r, std::vector<Ball>(r, Ball(p)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i][j] = entry(rows[i], cols[j]);
        return det_enclosure(std::move(sub));
    };

    MinorScan out;
    out.worst_minor = a[0];  // placeholder; replaced by the first evaluation
    out.exhaustive = true;
    bool first = true;
    bool any_negative = false;
    double zero_floor = std::ldexp(1.0, -static_cast<int>(p) / 2);

    auto consider = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        Ball d = minor_det(rows, cols);
        ++out.evaluated;
        if (d.is_negative()) any_negative = true;
        if (d.contains_zero() && d.radius_d() > zero_floor) ++out.undecided;
        if (first || d.cmp_center(out.worst_minor) < 0) {
            out.worst_minor = d;
            out.worst_rows = rows;
            out.worst_cols = cols;
            first = false;
        }
    };

    for (int r = 1; r <= max_order && !any_negative; ++r) {
        double total_pairs = binom_count(m, r) * binom_count(m, r);
        if (trials <= 0 || total_pairs <= static_cast<double>(trials)) {
            std::vector<int> rows(r), cols(r);
            for (int i = 0; i < r; ++i) rows[i] = i;
            do {
                for (int i = 0; i < r; ++i) cols[i] = i;
                do {
                    consider(rows, cols);
                } while (next_combination(cols, m));
            } while (next_combination(rows, m));
        } else {
            out.exhaustive = false;
            Rng rng = Rng::for_trial(seed, static_cast<uint64_t>(r));
            for (long t = 0; t < trials; ++t) {
                auto draw = [&](std::vector<int>& idx) {
                    idx.clear();
                    while (static_cast<int>(idx.size()) < r) {
                        int v = static_cast<int>(rng.below(m));
                        bool dup = false;
                        for (int u : idx) dup |= (u == v);
                        if (!dup) idx.push_back(v);
                    }
                    std::sort(idx.begin(), idx.end());
                };
                std::vector<int> rows, cols;
                draw(rows);
                draw(cols);
                consider(rows, cols);
            }
        }
    }

    if (any_negative)
        out.verdict = Verdict3::CertifiedNo;
    else if (out.undecided > 0)
        out.verdict = Verdict3::Undecided;
    else
        out.verdict = Verdict3::CertifiedYes;
    return out;
}

} // namespace pfflab
