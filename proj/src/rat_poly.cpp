#include "pfflab/rat_poly.hpp"

#include <sstream>

#include "pfflab/errors.hpp"

namespace pfflab {

RatPoly RatPoly::constant(const mpq_class& v) {
    RatPoly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

RatPoly RatPoly::monomial(const mpq_class& v, int k) {
    RatPoly p;
    if (v != 0) {
        p.c.assign(k + 1, mpq_class(0));
        p.c[k] = v;
    }
    return p;
}

void RatPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const mpq_class& RatPoly::leading() const {
    if (c.empty()) throw invalid_argument("RatPoly::leading: zero polynomial");
    return c.back();
}

mpq_class RatPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Ball RatPoly::eval_ball(const Ball& x, mpfr_prec_t prec) const {
    Ball acc(prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + Ball::from_mpq(*it, prec);
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * mpq_class(static_cast<long>(i)));
    d.normalize();
    return d;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    RatPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

RatPoly RatPoly::scaled(const mpq_class& v) const {
    if (v == 0) return RatPoly();
    RatPoly r = *this;
    for (auto& q : r.c) q *= v;
    return r;
}

namespace {
RatPoly content_scale(const RatPoly& p, bool fix_sign) {
    if (p.is_zero()) return p;
    // common denominator, then integer content
    mpz_class den(1);
    for (const auto& q : p.c) den = den / gcd(den, q.get_den()) * q.get_den();
    mpz_class cont(0);
    std::vector<mpz_class> ints;
    ints.reserve(p.c.size());
    for (const auto& q : p.c) {
        mpz_class z = q.get_num() * (den / q.get_den());
        cont = gcd(cont, z);
        ints.push_back(z);
    }
    if (cont == 0) cont = 1;
    if (fix_sign && ints.back() < 0) cont = -cont;
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& z : ints) r.c.push_back(mpq_class(z / cont));
    r.normalize();
    return r;
}
} // namespace

RatPoly RatPoly::primitive_part() const {
    return content_scale(*this, true);
}

RatPoly RatPoly::content_normalized() const {
    return content_scale(*this, false);
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << c[i].get_str();
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw invalid_argument("rat_poly_rem: division by zero polynomial");
    RatPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        mpq_class q = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= q * b.c[i];
        r.normalize();
    }
    return r;
}

RatPoly rat_poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly f = a.primitive_part(), g = b.primitive_part();
    while (!g.is_zero()) {
        RatPoly r = rat_poly_rem(f, g).primitive_part();
        f = g;
        g = r;
    }
    return f.primitive_part();
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    // content normalization controls coefficient growth; signs must be kept
    std::vector<RatPoly> chain;
    chain.push_back(p.content_normalized());
    RatPoly d = p.derivative().content_normalized();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        RatPoly r = rat_poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back((-r).content_normalized());
    }
    return chain;
}

int sign_changes_at(const std::vector<RatPoly>& chain, const mpq_class& x) {
    int prev = 0, changes = 0;
    for (const auto& f : chain) {
        mpq_class v = f.eval(x);
        int s = sgn(v);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int sign_changes_at_inf(const std::vector<RatPoly>& chain, int dir) {
    int prev = 0, changes = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sgn(f.leading());
        if (dir < 0 && f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int sturm_count_interval(const RatPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw invalid_argument("sturm_count_interval: zero polynomial");
    if (a >= b) return 0;
    auto chain = sturm_chain(p);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

int sturm_count_all(const RatPoly& p) {
    if (p.is_zero()) throw invalid_argument("sturm_count_all: zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
}

int real_root_count_exact(const RatPoly& p) {
    if (p.is_zero()) throw invalid_argument("real_root_count_exact: zero polynomial");
    // d_0 = p, d_{k+1} = gcd(d_k, d_k'): a root of multiplicity m contributes
    // one distinct root to d_0 ... d_{m-1}
    int total = 0;
    RatPoly d = p.primitive_part();
    while (d.degree() >= 1) {
        total += sturm_count_all(d);
        d = rat_poly_gcd(d, d.derivative());
    }
    return total;
}

bool all_roots_real_exact(const RatPoly& p) {
    if (p.is_zero()) throw invalid_argument("all_roots_real_exact: zero polynomial");
    return real_root_count_exact(p) == p.degree();
}

bool roots_real_nonpositive_exact(const RatPoly& p) {
    if (p.is_zero()) throw invalid_argument("roots_real_nonpositive_exact: zero polynomial");
    if (p.degree() == 0) return true;
    if (!all_roots_real_exact(p)) return false;
    mpq_class bound = cauchy_root_bound(p);
    return sturm_count_interval(p, mpq_class(0), bound) == 0;
}

mpq_class cauchy_root_bound(const RatPoly& p) {
    if (p.degree() < 1) return mpq_class(1);
    mpq_class m(0);
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class v = abs(p.c[i] / p.leading());
        if (v > m) m = v;
    }
    return m + 2;
}

} // namespace pfflab
