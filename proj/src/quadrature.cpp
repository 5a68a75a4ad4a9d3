#include "pfflab/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace pfflab {

// --- decay envelopes ----------------------------------------------------------

Ball DecayEnvelope::tail_bound(double R, double beta, mpfr_prec_t prec) const {
    if (form == Form::CompactSupport) return Ball(prec);
    if (missing()) throw domain_error("DecayEnvelope: envelope missing for this side");
    Ball Rb = Ball::exact_d(R, prec);
    Ball cb = Ball::exact_d(c, prec);
    Ball ab = Ball::exact_d(a, prec);
    Ball bb = Ball::exact_d(beta, prec);

    // For phi with -(log phi)' >= m on [R, inf):
    //   Integral_R^inf c phi(x) e^{beta x} dx <= c phi(R) e^{beta R} / (m - beta),  m > beta.
    Ball log_at_R(prec), slope(prec);
    switch (form) {
        case Form::Exponential:
            log_at_R = -(ab * Rb);
            slope = ab;
            break;
        case Form::Gaussian:
            log_at_R = -(ab * Rb * Rb);
            slope = ab.mul_2si(1) * Rb;
            break;
        case Form::SuperExponential:
            if (R < 3.0) throw precision_error("DecayEnvelope: super-exponential bound needs R >= 3");
            log_at_R = -(ab * Rb * Rb.log());
            slope = ab * (Rb.log() + Ball::exact_si(1, prec));
            break;
        case Form::DoubleExponential:
            log_at_R = -(ab * Rb.exp());
            slope = ab * Rb.exp();
            break;
        case Form::CompactSupport:
            return Ball(prec);
    }
    Ball denom = slope - bb;
    if (!denom.is_positive())
        throw precision_error("DecayEnvelope: tail integral does not converge at this shift");
    return cb * (log_at_R + bb * Rb).exp() / denom;
}

double DecayEnvelope::solve_radius(double eps, double beta, double R_min, mpfr_prec_t prec) const {
    if (form == Form::CompactSupport) return std::max(R_min, valid_from);
    double R = std::max({R_min, valid_from, 1.0});
    for (int i = 0; i < 4000; ++i) {
        try {
            if (tail_bound(R, beta, prec).upper_d() <= eps) return R;
        } catch (const precision_error&) {
            // slope not yet above beta; keep growing R for the forms where
            // the slope increases (otherwise fail below)
            if (form == Form::Exponential) throw;
        }
        R = (R < 16) ? R + 1 : R * 1.25;
        if (R > 1e7)
            throw precision_error("DecayEnvelope: truncation radius search exceeded 1e7");
    }
    throw precision_error("DecayEnvelope: truncation radius not found");
}

// --- tanh-sinh ---------------------------------------------------------------

namespace {

struct DeLevelSum {
    Ball sum;
    double tail_est = 0;  // bound for the omitted node tail (see below)
    DeLevelSum() : sum(64) {}
};

// One tanh-sinh level: h = 2^-level, nodes x = c + hw*tanh(pi/2 sinh(kh)).
DeLevelSum de_level(const std::function<Ball(const Ball&)>& f, const Ball& c, const Ball& hw,
                    mpfr_prec_t p, int level, double stop_tol, long max_nodes) {
    DeLevelSum out;
    out.sum = Ball(p);
    Ball pi_half = Ball::pi(p).mul_2si(-1);
    Ball h = Ball::exact_si(1, p).mul_2si(-level);

    for (int side = 0; side <= 1; ++side) {
        int below = 0;
        double last_mag = 0;
        for (long k = (side == 0) ? 0 : -1;; side == 0 ? ++k : --k) {
            if (std::labs(k) > max_nodes) break;
            Ball u = Ball::exact_si(k, p).mul_2si(-level);
            Ball t = pi_half * u.sinh();
            Ball x = t.tanh();
            Ball ch = t.cosh();
            Ball w = pi_half * u.cosh() / (ch * ch);
            // saturation: node indistinguishable from the endpoint
            Ball gap = Ball::exact_si(1, p) - x.abs();
            if (gap.upper_d() < std::ldexp(1.0, static_cast<int>(-p + 8))) break;

            Ball contrib = hw * h * w * f(c + hw * x);
            out.sum += contrib;
            last_mag = contrib.mag_d();
            if (k != 0) {
                if (last_mag < stop_tol) {
                    if (++below >= 2) break;
                } else {
                    below = 0;
                }
            }
        }
        // double-exponential weight decay: the omitted tail is dominated by a
        // small multiple of the last retained contributions (estimate)
        out.tail_est += 8.0 * last_mag;
    }
    return out;
}

} // namespace

Ball integrate_de(const std::function<Ball(const Ball&)>& f, const Ball& a, const Ball& b,
                  mpfr_prec_t prec, double target_abs_err, int max_level) {
    mpfr_prec_t p = prec + 16;
    Ball c = (a + b).mul_2si(-1);
    Ball hw = (b - a).mul_2si(-1);
    if (!hw.is_positive()) {
        if (hw.contains_zero()) return Ball(p).round_to(prec);
        throw invalid_argument("integrate_de: b < a");
    }

    double stop_tol = target_abs_err / 64.0;
    long max_nodes_per_side = 1L << (max_level + 4);

    Ball best(p);
    bool have_best = false;
    double prev_diff = 0;
    Ball prev_mid(p);
    for (int level = 2; level <= max_level; ++level) {
        DeLevelSum ls = de_level(f, c, hw, p, level, stop_tol, max_nodes_per_side);
        Ball enc = ls.sum;
        enc.add_error_d(ls.tail_est);

        if (level > 2) {
            double diff = (ls.sum - prev_mid).mag_d();
            double est;
            if (prev_diff > 0 && diff > 0)
                est = std::min(diff, diff * (diff / prev_diff));
            else
                est = diff;
            est = est * 8.0 + std::ldexp(1.0, static_cast<int>(-p + 4));
            enc.add_error_d(est);

            if (have_best) {
                try {
                    enc = Ball::intersect(enc, best);
                } catch (const invalid_argument&) {
                    // disjoint estimates: keep the newer, wider-margin one
                }
            }
            best = enc;
            have_best = true;
            prev_diff = diff;
            if (est + ls.tail_est <= target_abs_err * 0.5) break;
        }
        prev_mid = ls.sum;
    }
    if (!have_best) throw precision_error("integrate_de: no levels computed");
    return best.round_to(prec);
}

// --- Gauss-Legendre ------------------------------------------------------------

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence, raw mpfr
void legendre_pair_mpfr(int n, const mpfr_t x, mpfr_t pn, mpfr_t pnm1, mpfr_prec_t p) {
    mpfr_t p0, p1, t;
    mpfr_inits2(p, p0, p1, t, (mpfr_ptr) nullptr);
    mpfr_set_ui(p0, 1, MPFR_RNDN);
    mpfr_set(p1, x, MPFR_RNDN);
    for (int k = 1; k < n; ++k) {
        // p_{k+1} = ((2k+1) x p_k - k p_{k-1}) / (k+1)
        mpfr_mul(t, x, p1, MPFR_RNDN);
        mpfr_mul_ui(t, t, 2 * k + 1, MPFR_RNDN);
        mpfr_mul_ui(p0, p0, k, MPFR_RNDN);
        mpfr_sub(t, t, p0, MPFR_RNDN);
        mpfr_div_ui(t, t, k + 1, MPFR_RNDN);
        mpfr_set(p0, p1, MPFR_RNDN);
        mpfr_set(p1, t, MPFR_RNDN);
    }
    mpfr_set(pn, p1, MPFR_RNDN);
    mpfr_set(pnm1, p0, MPFR_RNDN);
    mpfr_clears(p0, p1, t, (mpfr_ptr) nullptr);
}

// ball evaluation of (P_n, P_{n-1}) over a ball argument
void legendre_pair_ball(int n, const Ball& x, Ball& pn, Ball& pnm1) {
    mpfr_prec_t p = x.prec();
    Ball p0 = Ball::exact_si(1, p);
    Ball p1 = x;
    for (int k = 1; k < n; ++k) {
        Ball t = (x * p1).mul_si(2 * k + 1) - p0.mul_si(k);
        p0 = p1;
        p1 = t.div_si(k + 1);
    }
    pn = p1;
    pnm1 = p0;
}

std::unique_ptr<GLRule> make_gl_rule(int m, mpfr_prec_t prec) {
    mpfr_prec_t p = prec + 32;
    auto rule = std::make_unique<GLRule>();
    rule->nodes.reserve(m);
    rule->weights.reserve(m);

    mpfr_t x, pn, pnm1, dp, t;
    mpfr_inits2(p, x, pn, pnm1, dp, t, (mpfr_ptr) nullptr);
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like seed
        double seed = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        mpfr_set_d(x, seed, MPFR_RNDN);
        for (int it = 0; it < 30; ++it) {
            legendre_pair_mpfr(m, x, pn, pnm1, p);
            // P'_m = m (P_{m-1} - x P_m) / (1 - x^2)
            mpfr_mul(t, x, pn, MPFR_RNDN);
            mpfr_sub(dp, pnm1, t, MPFR_RNDN);
            mpfr_mul_ui(dp, dp, m, MPFR_RNDN);
            mpfr_mul(t, x, x, MPFR_RNDN);
            mpfr_ui_sub(t, 1, t, MPFR_RNDN);
            mpfr_div(dp, dp, t, MPFR_RNDN);
            mpfr_div(t, pn, dp, MPFR_RNDN);
            mpfr_sub(x, x, t, MPFR_RNDN);
            mpfr_abs(t, t, MPFR_RNDU);
            if (mpfr_get_exp(t) < -static_cast<long>(p) + 8 || mpfr_zero_p(t)) break;
        }

        // certify with one interval Newton step on a widened box
        Ball node(p);
        bool certified = false;
        for (int widen = 0; widen < 6 && !certified; ++widen) {
            Ball xh = Ball::from_mpfr(x, p);
            Ball box = xh;
            box.add_error_2si(-static_cast<long>(p) + 12 + 8 * widen);
            Ball bpn(p), bpnm1(p);
            legendre_pair_ball(m, box, bpn, bpnm1);
            Ball dpb = (bpnm1 - box * bpn).mul_si(m) / (Ball::exact_si(1, p) - box * box);
            if (dpb.contains_zero()) continue;
            Ball pn_mid(p), dummy(p);
            legendre_pair_ball(m, xh, pn_mid, dummy);
            Ball newton = xh - pn_mid / dpb;
            if (box.contains(newton)) {
                node = newton;
                certified = true;
            }
        }
        if (!certified) throw precision_error("gl_rule: node certification failed");

        Ball bpn(p), bpnm1(p);
        legendre_pair_ball(m, node, bpn, bpnm1);
        Ball dpb = (bpnm1 - node * bpn).mul_si(m) / (Ball::exact_si(1, p) - node * node);
        Ball w = Ball::exact_si(2, p) / ((Ball::exact_si(1, p) - node * node) * dpb * dpb);
        rule->nodes.push_back(node.round_to(prec));
        rule->weights.push_back(w.round_to(prec));
    }
    mpfr_clears(x, pn, pnm1, dp, t, (mpfr_ptr) nullptr);
    return rule;
}

std::map<std::pair<int, mpfr_prec_t>, std::unique_ptr<GLRule>> g_gl_cache;
std::mutex g_gl_mu;

} // namespace

const GLRule& gl_rule(int order, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lk(g_gl_mu);
    auto key = std::make_pair(order, prec);
    auto it = g_gl_cache.find(key);
    if (it == g_gl_cache.end())
        it = g_gl_cache.emplace(key, make_gl_rule(order, prec)).first;
    return *it->second;
}

Ball integrate_gl_panels(const std::function<Ball(const Ball&)>& f, const Ball& a, const Ball& b,
                         mpfr_prec_t prec, int order, int n_panels) {
    if (n_panels < 1) throw invalid_argument("integrate_gl_panels: need at least one panel");
    mpfr_prec_t p = prec + 16;
    const GLRule& rule = gl_rule(order, p);
    Ball width = (b - a).div_si(n_panels);
    Ball acc(p);
    for (int j = 0; j < n_panels; ++j) {
        Ball lo = a + width.mul_si(j);
        Ball mid = lo + width.mul_2si(-1);
        Ball hw = width.mul_2si(-1);
        for (int i = 0; i < order; ++i)
            acc += hw * rule.weights[i] * f(mid + hw * rule.nodes[i]);
    }
    return acc.round_to(prec);
}

} // namespace pfflab
