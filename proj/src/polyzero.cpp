#include "pfflab/polyzero.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pfflab/errors.hpp"
#include "pfflab/power_series.hpp"

namespace pfflab {

BallPoly BallPoly::from_rat(const RatPoly& p, mpfr_prec_t prec) {
    BallPoly b;
    b.c.reserve(p.c.size());
    for (const auto& q : p.c) b.c.push_back(Ball::from_mpq(q, prec));
    return b;
}

Ball BallPoly::eval(const Ball& x) const {
    mpfr_prec_t p = c.empty() ? x.prec() : std::max(c[0].prec(), x.prec());
    Ball acc(p);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BallPoly BallPoly::derivative() const {
    BallPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i].mul_si(static_cast<long>(i)));
    return d;
}

bool BallPoly::leading_certified_nonzero() const {
    return !c.empty() && !c.back().contains_zero();
}

BallPoly to_ball_poly(const Polynomial& p, mpfr_prec_t prec) {
    if (std::holds_alternative<RatPoly>(p)) return BallPoly::from_rat(std::get<RatPoly>(p), prec);
    return std::get<BallPoly>(p);
}

bool poly_is_exact(const Polynomial& p) {
    return std::holds_alternative<RatPoly>(p);
}

int poly_degree(const Polynomial& p) {
    if (std::holds_alternative<RatPoly>(p)) return std::get<RatPoly>(p).degree();
    return std::get<BallPoly>(p).degree();
}

// --- ball-mode real root isolation ------------------------------------------

namespace {

// Durand-Kerner on the center polynomial; deterministic start.
std::vector<std::complex<double>> approx_roots(const BallPoly& p) {
    int n = p.degree();
    std::vector<std::complex<double>> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = p.c[i].center_d();
    for (int i = 0; i <= n; ++i) a[i] /= std::abs(a[n]) > 0 ? a[n] : 1.0;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * z + a[i];
        return acc;
    };

    double bound = 1.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
    bound += 1.0;

    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = seed;
    for (int i = 0; i < n; ++i, w *= seed) z[i] = w * (0.5 * bound);

    for (int it = 0; it < 400; ++it) {
        double move = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) d *= (z[i] - z[j]);
            if (std::abs(d) < 1e-280) continue;
            std::complex<double> step = eval(z[i]) / d;
            z[i] -= step;
            move = std::max(move, std::abs(step));
        }
        if (move < 1e-13 * bound) break;
    }
    return z;
}

struct RootAnalysis {
    bool usable = false;        // leading coefficient certified nonzero
    bool coverage_ok = false;   // rest of the real line certified root-free
    int certified = 0;          // certified simple real roots
    int degree = 0;
};

// one interval Newton certification attempt around a double approximation
bool newton_certify(const BallPoly& p, const BallPoly& dp, double approx, double scale,
                    mpfr_prec_t prec, Ball& out_box) {
    double hw = std::max(1e-10 * scale, 1e-14);
    for (int widen = 0; widen < 14; ++widen, hw *= 8) {
        Ball box = Ball::exact_d(approx, prec);
        box.add_error_d(hw);
        Ball dpv = dp.eval(box);
        if (dpv.contains_zero()) continue;
        Ball mid = Ball::exact_d(approx, prec);
        Ball nb = mid - p.eval(mid) / dpv;
        if (box.contains(nb)) {
            // refine for a tighter box
            for (int r = 0; r < 3; ++r) {
                Ball m2 = Ball::exact_d(nb.center_d(), prec);
                Ball dv2 = dp.eval(nb);
                if (dv2.contains_zero()) break;
                Ball nb2 = m2 - p.eval(m2) / dv2;
                try {
                    nb2 = Ball::intersect(nb2, nb);
                } catch (const invalid_argument&) {
                    break;
                }
                nb = nb2;
            }
            out_box = nb;
            return true;
        }
    }
    return false;
}

// certify that p has no root in the segment ball S (recursively)
bool segment_root_free(const BallPoly& p, const BallPoly& dp, const Ball& seg, int depth) {
    Ball v = p.eval(seg);
    if (!v.contains_zero()) return true;
    if (!dp.eval(seg).contains_zero()) {
        // monotone on the segment: endpoint signs decide
        mpfr_prec_t pr = seg.prec();
        mpfr_t lo, hi;
        mpfr_inits2(pr, lo, hi, (mpfr_ptr) nullptr);
        seg.lower(lo);
        seg.upper(hi);
        Ball vlo = p.eval(Ball::from_mpfr(lo, pr));
        Ball vhi = p.eval(Ball::from_mpfr(hi, pr));
        mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
        if ((vlo.is_positive() && vhi.is_positive()) || (vlo.is_negative() && vhi.is_negative()))
            return true;
        return false;  // sign change or undecided: there is (likely) a root here
    }
    if (depth >= 30) return false;
    mpfr_prec_t pr = seg.prec();
    mpfr_t lo, hi, mid;
    mpfr_inits2(pr, lo, hi, mid, (mpfr_ptr) nullptr);
    seg.lower(lo);
    seg.upper(hi);
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
    Ball left = Ball::from_endpoints(lo, mid, pr);
    Ball right = Ball::from_endpoints(mid, hi, pr);
    mpfr_clears(lo, hi, mid, (mpfr_ptr) nullptr);
    return segment_root_free(p, dp, left, depth + 1) && segment_root_free(p, dp, right, depth + 1);
}

RootAnalysis analyze_real_roots(const BallPoly& p, const PrecisionConfig& prec) {
    RootAnalysis res;
    res.degree = p.degree();
    if (res.degree < 0) return res;
    if (res.degree == 0) {
        res.usable = true;
        res.coverage_ok = true;
        return res;
    }
    if (!p.leading_certified_nonzero()) return res;
    res.usable = true;

    mpfr_prec_t pr = std::max(p.c[0].prec(), prec.bits()) + 32;
    BallPoly dp = p.derivative();

    // Cauchy bound from coefficient balls
    double lead_lo = p.c.back().abs().lower_d();
    double maxc = 0;
    for (int i = 0; i < res.degree; ++i) maxc = std::max(maxc, p.c[i].mag_d());
    double B = 1.0 + maxc / lead_lo;
    B = B * 1.0001 + 1.0;

    auto roots = approx_roots(p);
    double im_tol = 1e-7 * B;
    std::vector<double> candidates;
    for (const auto& z : roots)
        if (std::fabs(z.imag()) <= im_tol) candidates.push_back(z.real());
    std::sort(candidates.begin(), candidates.end());

    std::vector<Ball> boxes;
    bool all_candidates_ok = true;
    for (double r : candidates) {
        Ball box(pr);
        if (newton_certify(p, dp, r, B, pr, box)) {
            boxes.push_back(box);
        } else {
            all_candidates_ok = false;
        }
    }
    // overlapping boxes would double-count a root: bail to an interval answer
    for (std::size_t i = 0; i + 1 < boxes.size(); ++i)
        if (boxes[i].overlaps(boxes[i + 1])) return res;

    res.certified = static_cast<int>(boxes.size());

    if (!all_candidates_ok) return res;

    // coverage: [-B, B] minus the certified boxes must be root-free
    mpfr_t lo, hi;
    mpfr_inits2(pr, lo, hi, (mpfr_ptr) nullptr);
    std::vector<Ball> segments;
    Ball cursor = Ball::exact_d(-B, pr);
    for (const Ball& b : boxes) {
        cursor.lower(lo);
        b.lower(hi);
        if (mpfr_cmp(lo, hi) < 0) segments.push_back(Ball::from_endpoints(lo, hi, pr));
        mpfr_t t;
        mpfr_init2(t, pr);
        b.upper(t);
        cursor = Ball::from_mpfr(t, pr);
        mpfr_clear(t);
    }
    cursor.lower(lo);
    mpfr_set_d(hi, B, MPFR_RNDU);
    if (mpfr_cmp(lo, hi) < 0) segments.push_back(Ball::from_endpoints(lo, hi, pr));
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);

    res.coverage_ok = true;
    for (const Ball& seg : segments) {
        if (!segment_root_free(p, dp, seg, 0)) {
            res.coverage_ok = false;
            break;
        }
    }
    return res;
}

} // namespace

RootCount real_root_count(const Polynomial& p, const PrecisionConfig& prec) {
    if (std::holds_alternative<RatPoly>(p)) {
        const RatPoly& rp = std::get<RatPoly>(p);
        if (rp.is_zero()) throw invalid_argument("real_root_count: zero polynomial");
        int n = real_root_count_exact(rp);
        return RootCount{n, n};
    }
    const BallPoly& bp = std::get<BallPoly>(p);
    RootAnalysis a = analyze_real_roots(bp, prec);
    if (!a.usable) return RootCount{0, std::max(0, bp.degree())};
    if (a.coverage_ok) return RootCount{a.certified, a.certified};
    return RootCount{a.certified, a.degree};
}

Verdict3 certify_all_roots_real(const BallPoly& p, const PrecisionConfig& prec) {
    RootAnalysis a = analyze_real_roots(p, prec);
    if (!a.usable) return Verdict3::Undecided;
    if (a.coverage_ok) {
        // exactly `certified` simple real roots; the other degree - certified
        // roots are certainly non-real
        return a.certified == a.degree ? Verdict3::CertifiedYes : Verdict3::CertifiedNo;
    }
    return Verdict3::Undecided;
}

SignChangeResult sign_changes(const SignSampling& s) {
    if (s.grid.size() != s.values.size())
        throw invalid_argument("sign_changes: grid/value length mismatch");
    for (std::size_t i = 1; i < s.grid.size(); ++i)
        if (!(s.grid[i - 1] < s.grid[i]))
            throw invalid_argument("sign_changes: grid not strictly increasing");
    SignChangeResult out;
    int prev = 0;
    for (const Ball& v : s.values) {
        int sgn;
        if (v.is_positive())
            sgn = 1;
        else if (v.is_negative())
            sgn = -1;
        else {
            out.undecided_skipped = true;
            continue;
        }
        if (prev != 0 && sgn != prev) ++out.count;
        prev = sgn;
    }
    return out;
}

Polynomial convolve_moments(const MomentSequence& ms, const Polynomial& p) {
    int deg = poly_degree(p);
    if (deg < 0) throw invalid_argument("convolve_moments: zero polynomial");
    if (static_cast<int>(ms.size()) <= deg)
        throw invalid_argument("convolve_moments: insufficient moments for this degree");

    if (ms.exact && std::holds_alternative<RatPoly>(p)) {
        const RatPoly& rp = std::get<RatPoly>(p);
        RatPoly q;
        RatPoly d = rp;
        mpz_class fact(1);
        for (int j = 0; j <= deg && !d.is_zero(); ++j) {
            if (j > 0) {
                fact *= j;
                d = d.derivative();
            }
            mpq_class coef = (*ms.exact)[j] / mpq_class(fact);
            if (j % 2 == 1) coef = -coef;
            q = q + d.scaled(coef);
        }
        return q;
    }

    mpfr_prec_t prec = ms.mu.empty() ? 128 : ms.mu[0].prec();
    BallPoly bp = to_ball_poly(p, prec);
    BallPoly q;
    q.c.assign(bp.c.size(), Ball(prec));
    BallPoly d = bp;
    for (int j = 0; j <= deg && d.degree() >= 0; ++j) {
        if (j > 0) d = d.derivative();
        Ball coef = ms.mu[j] / factorial_ball(static_cast<unsigned long>(j), prec);
        if (j % 2 == 1) coef = -coef;
        for (std::size_t i = 0; i < d.c.size(); ++i) q.c[i] += coef * d.c[i];
    }
    return q;
}

ZdResult zero_decreasing_check(const MomentSequence& ms, const Polynomial& p,
                               const PrecisionConfig& prec) {
    ZdResult out;
    out.n_p = real_root_count(p, prec);
    Polynomial q = convolve_moments(ms, p);
    out.n_q = real_root_count(q, prec);
    if (out.n_p.exact()) {
        if (out.n_q.hi <= out.n_p.lo)
            out.verdict = ZdVerdict::Holds;
        else if (out.n_q.lo > out.n_p.lo)
            out.verdict = ZdVerdict::Violated;
        else
            out.verdict = ZdVerdict::Undecided;
    }
    return out;
}

} // namespace pfflab
