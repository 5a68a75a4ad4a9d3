#include "pfflab/ball.hpp"

#include <cmath>
#include <cstdio>

namespace pfflab {

namespace {

// scratch radius-precision temporary
struct RTmp {
    mpfr_t v;
    RTmp() { mpfr_init2(v, Ball::kRadiusPrec); }
    explicit RTmp(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~RTmp() { mpfr_clear(v); }
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
};

} // namespace

Ball::Ball(mpfr_prec_t prec) {
    mpfr_init2(c_, prec);
    mpfr_set_zero(c_, 1);
    mpfr_init2(r_, kRadiusPrec);
    mpfr_set_zero(r_, 1);
}

Ball::Ball(const Ball& o) {
    mpfr_init2(c_, mpfr_get_prec(o.c_));
    mpfr_set(c_, o.c_, MPFR_RNDN);
    mpfr_init2(r_, kRadiusPrec);
    mpfr_set(r_, o.r_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
    mpfr_init2(c_, mpfr_get_prec(o.c_));
    mpfr_init2(r_, kRadiusPrec);
    mpfr_swap(c_, o.c_);
    mpfr_swap(r_, o.r_);
}

Ball& Ball::operator=(const Ball& o) {
    if (this != &o) {
        mpfr_set_prec(c_, mpfr_get_prec(o.c_));
        mpfr_set(c_, o.c_, MPFR_RNDN);
        mpfr_set(r_, o.r_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    if (this != &o) {
        mpfr_swap(c_, o.c_);
        mpfr_swap(r_, o.r_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(c_);
    mpfr_clear(r_);
}

void Ball::bump_rounding(int ternary) {
    if (ternary == 0) return;
    // one full ulp of the center covers the half-ulp of round-to-nearest
    mpfr_exp_t e;
    if (mpfr_zero_p(c_) || !mpfr_number_p(c_)) {
        // inexact zero can only arise deep in the exponent range
        e = mpfr_get_emin() + mpfr_get_prec(c_) + 1;
    } else {
        e = mpfr_get_exp(c_);
    }
    RTmp u;
    mpfr_set_ui_2exp(u, 1, e - mpfr_get_prec(c_), MPFR_RNDU);
    mpfr_add(r_, r_, u, MPFR_RNDU);
}

void Ball::rad_abs_upper(mpfr_t out, const mpfr_t x) {
    mpfr_abs(out, x, MPFR_RNDU);
}

// --- construction -----------------------------------------------------------

Ball Ball::exact_si(long v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_si(b.c_, v, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::exact_ui(unsigned long v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_ui(b.c_, v, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::exact_d(double v, mpfr_prec_t prec) {
    if (!std::isfinite(v)) throw invalid_argument("Ball::exact_d: non-finite input");
    Ball b(prec);
    int t = mpfr_set_d(b.c_, v, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_q(b.c_, q.get_mpq_t(), MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_z(b.c_, z.get_mpz_t(), MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::from_str(const std::string& s, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_str(b.c_, s.c_str(), 10, MPFR_RNDN);
    if (t == -1 && mpfr_nan_p(b.c_))
        throw invalid_argument("Ball::from_str: unparsable string: " + s);
    // mpfr_set_str's return is not a ternary; re-read with directed rounding
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_str(lo, s.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(hi, s.c_str(), 10, MPFR_RNDU);
    Ball out = from_endpoints(lo, hi, prec);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

Ball Ball::from_mpfr(const mpfr_t x, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set(b.c_, x, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
    if (mpfr_cmp(lo, hi) > 0)
        throw invalid_argument("Ball::from_endpoints: lo > hi");
    Ball b(prec);
    int t = mpfr_add(b.c_, lo, hi, MPFR_RNDN);
    t |= mpfr_div_2si(b.c_, b.c_, 1, MPFR_RNDN);
    b.bump_rounding(t);
    // radius >= max(hi - c, c - lo)
    RTmp d1, d2;
    mpfr_sub(d1, hi, b.c_, MPFR_RNDU);
    mpfr_sub(d2, b.c_, lo, MPFR_RNDU);
    if (mpfr_cmp(d1.v, d2.v) < 0) mpfr_set(d1.v, d2.v, MPFR_RNDU);
    if (mpfr_sgn(d1.v) > 0) mpfr_add(b.r_, b.r_, d1, MPFR_RNDU);
    return b;
}

Ball Ball::zero_pm(const Ball& eps) {
    Ball b(eps.prec());
    RTmp m;
    mpfr_abs(m, eps.c_, MPFR_RNDU);
    mpfr_add(m, m, eps.r_, MPFR_RNDU);
    mpfr_set(b.r_, m.v, MPFR_RNDU);
    return b;
}

Ball Ball::zero_pm_d(double eps, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_d(b.r_, std::fabs(eps), MPFR_RNDU);
    return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_const_pi(b.c_, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::euler_gamma(mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_const_euler(b.c_, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

Ball Ball::ln2(mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_const_log2(b.c_, MPFR_RNDN);
    b.bump_rounding(t);
    return b;
}

// --- arithmetic ---------------------------------------------------------------

Ball operator+(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int t = mpfr_add(out.c_, a.c_, b.c_, MPFR_RNDN);
    mpfr_add(out.r_, a.r_, b.r_, MPFR_RNDU);
    out.bump_rounding(t);
    return out;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int t = mpfr_sub(out.c_, a.c_, b.c_, MPFR_RNDN);
    mpfr_add(out.r_, a.r_, b.r_, MPFR_RNDU);
    out.bump_rounding(t);
    return out;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec(), b.prec()));
    int t = mpfr_mul(out.c_, a.c_, b.c_, MPFR_RNDN);
    // r = |a.c|*b.r + |b.c|*a.r + a.r*b.r
    if (!(mpfr_zero_p(a.r_) && mpfr_zero_p(b.r_))) {
        RTmp ma, mb, acc;
        mpfr_abs(ma, a.c_, MPFR_RNDU);
        mpfr_abs(mb, b.c_, MPFR_RNDU);
        mpfr_mul(acc, ma, b.r_, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, acc, MPFR_RNDU);
        mpfr_mul(acc, mb, a.r_, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, acc, MPFR_RNDU);
        mpfr_mul(acc, a.r_, b.r_, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, acc, MPFR_RNDU);
    }
    out.bump_rounding(t);
    return out;
}

Ball operator/(const Ball& a, const Ball& b) {
    // lower bound of |b|
    RTmp mig;
    mpfr_abs(mig, b.c_, MPFR_RNDD);
    mpfr_sub(mig, mig, b.r_, MPFR_RNDD);
    if (mpfr_sgn(mig.v) <= 0)
        throw domain_error("Ball division: denominator ball contains zero");

    Ball out(std::max(a.prec(), b.prec()));
    int t = mpfr_div(out.c_, a.c_, b.c_, MPFR_RNDN);
    if (!(mpfr_zero_p(a.r_) && mpfr_zero_p(b.r_))) {
        // err <= a.r/mig + b.r*|a.c| / (mig*|b.c|)
        RTmp t1, t2, mbc;
        mpfr_div(t1, a.r_, mig, MPFR_RNDU);
        mpfr_abs(t2, a.c_, MPFR_RNDU);
        mpfr_mul(t2, t2, b.r_, MPFR_RNDU);
        mpfr_abs(mbc, b.c_, MPFR_RNDD);
        mpfr_mul(mbc, mbc, mig, MPFR_RNDD);
        mpfr_div(t2, t2, mbc, MPFR_RNDU);
        mpfr_add(t1, t1, t2, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, t1, MPFR_RNDU);
    }
    out.bump_rounding(t);
    return out;
}

Ball Ball::operator-() const {
    Ball out(prec());
    mpfr_neg(out.c_, c_, MPFR_RNDN);  // exact
    mpfr_set(out.r_, r_, MPFR_RNDU);
    return out;
}

Ball Ball::add_si(long v) const {
    Ball out(prec());
    int t = mpfr_add_si(out.c_, c_, v, MPFR_RNDN);
    mpfr_set(out.r_, r_, MPFR_RNDU);
    out.bump_rounding(t);
    return out;
}

Ball Ball::mul_si(long v) const {
    Ball out(prec());
    int t = mpfr_mul_si(out.c_, c_, v, MPFR_RNDN);
    if (!mpfr_zero_p(r_)) {
        RTmp m;
        mpfr_set_si(m, v, MPFR_RNDU);
        mpfr_abs(m, m, MPFR_RNDU);
        mpfr_mul(m, m, r_, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, m, MPFR_RNDU);
    }
    out.bump_rounding(t);
    return out;
}

Ball Ball::div_si(long v) const {
    if (v == 0) throw domain_error("Ball::div_si: division by zero");
    Ball out(prec());
    int t = mpfr_div_si(out.c_, c_, v, MPFR_RNDN);
    if (!mpfr_zero_p(r_)) {
        RTmp m;
        mpfr_set_si(m, v, MPFR_RNDD);
        mpfr_abs(m, m, MPFR_RNDD);
        mpfr_div(m, r_, m, MPFR_RNDU);
        mpfr_add(out.r_, out.r_, m, MPFR_RNDU);
    }
    out.bump_rounding(t);
    return out;
}

Ball Ball::mul_2si(long e) const {
    Ball out(prec());
    mpfr_mul_2si(out.c_, c_, e, MPFR_RNDN);  // exact
    mpfr_mul_2si(out.r_, r_, e, MPFR_RNDU);
    return out;
}

Ball Ball::recip() const {
    return Ball::exact_si(1, prec()) / *this;
}

Ball Ball::abs() const {
    Ball out(prec());
    mpfr_abs(out.c_, c_, MPFR_RNDN);  // exact
    mpfr_set(out.r_, r_, MPFR_RNDU);
    return out;
}

// monotone map via directed endpoint evaluation
namespace {
template <typename F>
Ball monotone_increasing(const Ball& x, F f, const char* name, bool need_pos_lo = false,
                         bool allow_zero_lo = false) {
    mpfr_prec_t p = x.prec();
    mpfr_t lo, hi, flo, fhi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    mpfr_init2(flo, p);
    mpfr_init2(fhi, p);
    x.lower(lo);
    x.upper(hi);
    if (need_pos_lo) {
        int s = mpfr_sgn(lo);
        if (s < 0 || (s == 0 && !allow_zero_lo)) {
            mpfr_clears(lo, hi, flo, fhi, (mpfr_ptr) nullptr);
            throw domain_error(std::string(name) + ": argument ball extends outside domain");
        }
    }
    f(flo, lo, MPFR_RNDD);
    f(fhi, hi, MPFR_RNDU);
    Ball out = Ball::from_endpoints(flo, fhi, p);
    mpfr_clears(lo, hi, flo, fhi, (mpfr_ptr) nullptr);
    return out;
}
} // namespace

Ball Ball::sqrt() const {
    return monotone_increasing(*this, [](mpfr_t o, const mpfr_t a, mpfr_rnd_t r) { mpfr_sqrt(o, a, r); },
                               "Ball::sqrt", true, true);
}

Ball Ball::exp() const {
    return monotone_increasing(*this, [](mpfr_t o, const mpfr_t a, mpfr_rnd_t r) { mpfr_exp(o, a, r); },
                               "Ball::exp");
}

Ball Ball::log() const {
    return monotone_increasing(*this, [](mpfr_t o, const mpfr_t a, mpfr_rnd_t r) { mpfr_log(o, a, r); },
                               "Ball::log", true, false);
}

Ball Ball::sinh() const {
    return monotone_increasing(*this, [](mpfr_t o, const mpfr_t a, mpfr_rnd_t r) { mpfr_sinh(o, a, r); },
                               "Ball::sinh");
}

Ball Ball::tanh() const {
    return monotone_increasing(*this, [](mpfr_t o, const mpfr_t a, mpfr_rnd_t r) { mpfr_tanh(o, a, r); },
                               "Ball::tanh");
}

Ball Ball::cosh() const {
    // even; monotone on |x|
    mpfr_prec_t p = prec();
    mpfr_t lo, hi;
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);
    lower(lo);
    upper(hi);
    mpfr_abs(lo, lo, MPFR_RNDU);
    mpfr_abs(hi, hi, MPFR_RNDU);
    if (mpfr_cmp(lo, hi) > 0) mpfr_swap(lo, hi);
    mpfr_t flo, fhi;
    mpfr_init2(flo, p);
    mpfr_init2(fhi, p);
    if (contains_zero()) {
        mpfr_set_ui(flo, 1, MPFR_RNDD);
    } else {
        mpfr_cosh(flo, lo, MPFR_RNDD);
    }
    mpfr_cosh(fhi, hi, MPFR_RNDU);
    Ball out = from_endpoints(flo, fhi, p);
    mpfr_clears(lo, hi, flo, fhi, (mpfr_ptr) nullptr);
    return out;
}

Ball Ball::sin() const {
    Ball out(prec());
    int t = mpfr_sin(out.c_, c_, MPFR_RNDN);
    mpfr_set(out.r_, r_, MPFR_RNDU);  // Lipschitz constant 1
    out.bump_rounding(t);
    return out;
}

Ball Ball::cos() const {
    Ball out(prec());
    int t = mpfr_cos(out.c_, c_, MPFR_RNDN);
    mpfr_set(out.r_, r_, MPFR_RNDU);
    out.bump_rounding(t);
    return out;
}

Ball Ball::pow_si(long n) const {
    mpfr_prec_t p = prec();
    if (n == 0) return exact_si(1, p);
    if (n < 0) return pow_si(-n).recip();
    // square and multiply
    Ball base = *this;
    Ball acc = exact_si(1, p);
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

Ball Ball::pow(const Ball& e) const {
    if (!is_positive())
        throw domain_error("Ball::pow: base not certified positive");
    return (e * log()).exp();
}

void Ball::add_error(const Ball& err) {
    RTmp m;
    mpfr_abs(m, err.c_, MPFR_RNDU);
    mpfr_add(m, m, err.r_, MPFR_RNDU);
    mpfr_add(r_, r_, m, MPFR_RNDU);
}

void Ball::add_error_d(double err) {
    RTmp m;
    mpfr_set_d(m, std::fabs(err), MPFR_RNDU);
    mpfr_add(r_, r_, m, MPFR_RNDU);
}

void Ball::add_error_2si(long e) {
    RTmp m;
    mpfr_set_ui_2exp(m, 1, e, MPFR_RNDU);
    mpfr_add(r_, r_, m, MPFR_RNDU);
}

// --- predicates ----------------------------------------------------------------

bool Ball::contains_zero() const {
    return mpfr_cmpabs(c_, r_) <= 0;
}

bool Ball::is_positive() const {
    return mpfr_sgn(c_) > 0 && mpfr_cmpabs(c_, r_) > 0;
}

bool Ball::is_negative() const {
    return mpfr_sgn(c_) < 0 && mpfr_cmpabs(c_, r_) > 0;
}

bool Ball::is_nonnegative() const {
    if (mpfr_sgn(c_) >= 0 && mpfr_zero_p(r_)) return true;
    return mpfr_sgn(c_) > 0 && mpfr_cmpabs(c_, r_) >= 0;
}

bool Ball::is_exact() const {
    return mpfr_zero_p(r_);
}

bool Ball::is_finite() const {
    return mpfr_number_p(c_) && mpfr_number_p(r_);
}

void Ball::lower(mpfr_t out) const {
    mpfr_sub(out, c_, r_, MPFR_RNDD);
}

void Ball::upper(mpfr_t out) const {
    mpfr_add(out, c_, r_, MPFR_RNDU);
}

double Ball::lower_d() const {
    RTmp t(64);
    mpfr_sub(t, c_, r_, MPFR_RNDD);
    return mpfr_get_d(t, MPFR_RNDD);
}

double Ball::upper_d() const {
    RTmp t(64);
    mpfr_add(t, c_, r_, MPFR_RNDU);
    return mpfr_get_d(t, MPFR_RNDU);
}

double Ball::mag_d() const {
    RTmp t;
    mpfr_abs(t, c_, MPFR_RNDU);
    mpfr_add(t, t, r_, MPFR_RNDU);
    return mpfr_get_d(t, MPFR_RNDU);
}

bool Ball::contains(const Ball& o) const {
    // inward-rounded self endpoints vs outward-rounded other endpoints
    mpfr_prec_t p = std::max(prec(), o.prec()) + 64;
    mpfr_t slo, shi, olo, ohi;
    mpfr_inits2(p, slo, shi, olo, ohi, (mpfr_ptr) nullptr);
    mpfr_sub(slo, c_, r_, MPFR_RNDU);
    mpfr_add(shi, c_, r_, MPFR_RNDD);
    mpfr_sub(olo, o.c_, o.r_, MPFR_RNDD);
    mpfr_add(ohi, o.c_, o.r_, MPFR_RNDU);
    bool ok = mpfr_cmp(slo, olo) <= 0 && mpfr_cmp(ohi, shi) <= 0;
    mpfr_clears(slo, shi, olo, ohi, (mpfr_ptr) nullptr);
    return ok;
}

bool Ball::contains_si(long v) const {
    mpfr_prec_t p = prec() + 64;
    mpfr_t lo, hi;
    mpfr_inits2(p, lo, hi, (mpfr_ptr) nullptr);
    mpfr_sub(lo, c_, r_, MPFR_RNDD);
    mpfr_add(hi, c_, r_, MPFR_RNDU);
    bool ok = mpfr_cmp_si(lo, v) <= 0 && mpfr_cmp_si(hi, v) >= 0;
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    return ok;
}

bool Ball::overlaps(const Ball& o) const {
    return !(certainly_lt(o) || certainly_gt(o));
}

bool Ball::certainly_lt(const Ball& o) const {
    mpfr_prec_t p = std::max(prec(), o.prec()) + 64;
    mpfr_t hi, olo;
    mpfr_inits2(p, hi, olo, (mpfr_ptr) nullptr);
    mpfr_add(hi, c_, r_, MPFR_RNDU);
    mpfr_sub(olo, o.c_, o.r_, MPFR_RNDD);
    bool ok = mpfr_cmp(hi, olo) < 0;
    mpfr_clears(hi, olo, (mpfr_ptr) nullptr);
    return ok;
}

bool Ball::certainly_gt(const Ball& o) const {
    return o.certainly_lt(*this);
}

Ball Ball::round_to(mpfr_prec_t p) const {
    Ball out(p);
    int t = mpfr_set(out.c_, c_, MPFR_RNDN);
    mpfr_set(out.r_, r_, MPFR_RNDU);
    out.bump_rounding(t);
    return out;
}

std::string Ball::center_str(long digits) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%%.%ldRe", digits - 1);
    char* s = nullptr;
    if (mpfr_asprintf(&s, buf, c_) < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::radius_str() const {
    if (mpfr_zero_p(r_)) return "0";
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.2Re", r_) < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::str(long digits) const {
    return center_str(digits) + " +/- " + radius_str();
}

Ball Ball::hull(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    mpfr_t alo, ahi, blo, bhi;
    mpfr_inits2(p, alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
    a.lower(alo);
    a.upper(ahi);
    b.lower(blo);
    b.upper(bhi);
    if (mpfr_cmp(blo, alo) < 0) mpfr_set(alo, blo, MPFR_RNDD);
    if (mpfr_cmp(bhi, ahi) > 0) mpfr_set(ahi, bhi, MPFR_RNDU);
    Ball out = from_endpoints(alo, ahi, p);
    mpfr_clears(alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
    return out;
}

Ball Ball::intersect(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    mpfr_t alo, ahi, blo, bhi;
    mpfr_inits2(p, alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
    a.lower(alo);
    a.upper(ahi);
    b.lower(blo);
    b.upper(bhi);
    if (mpfr_cmp(blo, alo) > 0) mpfr_set(alo, blo, MPFR_RNDD);
    if (mpfr_cmp(bhi, ahi) < 0) mpfr_set(ahi, bhi, MPFR_RNDU);
    bool bad = mpfr_cmp(alo, ahi) > 0;
    Ball out = bad ? Ball(p) : from_endpoints(alo, ahi, p);
    mpfr_clears(alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
    if (bad) throw invalid_argument("Ball::intersect: disjoint balls");
    return out;
}

} // namespace pfflab
