#include "pfflab/linalg.hpp"

#include <cmath>

#include "pfflab/errors.hpp"

namespace pfflab {

namespace {

Ball det_laplace(const BallMatrix& m, std::vector<int> rows, std::vector<int> cols,
                 mpfr_prec_t p) {
    std::size_t n = rows.size();
    if (n == 0) return Ball::exact_si(1, p);
    if (n == 1) return m[rows[0]][cols[0]];
    Ball acc(p);
    std::vector<int> sub_cols(cols.begin() + 1, cols.end());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> sub_rows;
        sub_rows.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        Ball term = m[rows[i]][cols[0]] * det_laplace(m, sub_rows, sub_cols, p);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

Ball det_enclosure(BallMatrix m) {
    std::size_t n = m.size();
    if (n == 0) throw invalid_argument("det_enclosure: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw invalid_argument("det_enclosure: matrix not square");
    mpfr_prec_t p = m[0][0].prec();

    Ball det = Ball::exact_si(1, p);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // full pivot by center magnitude (deterministic tie-break: lowest index)
        std::size_t pr = k, pc = k;
        double best = -1;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                double mag = std::fabs(m[i][j].center_d());
                if (mag > best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (m[pr][pc].contains_zero()) {
            // no usable pivot: expand the remaining block directly
            std::vector<int> idx;
            for (std::size_t i = k; i < n; ++i) idx.push_back(static_cast<int>(i));
            Ball rest = det_laplace(m, idx, idx, p);
            return (sign > 0) ? det * rest : -(det * rest);
        }
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
            sign = -sign;
        }
        det = det * m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Ball f = m[i][k] / m[k][k];
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return (sign > 0) ? det : -det;
}

Verdict3 cholesky_pd(const BallMatrix& a) {
    std::size_t n = a.size();
    if (n == 0) throw invalid_argument("cholesky_pd: empty matrix");
    mpfr_prec_t p = a[0][0].prec();
    BallMatrix L(n, std::vector<Ball>(n, Ball(p)));
    for (std::size_t j = 0; j < n; ++j) {
        Ball d = a[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= L[j][k] * L[j][k];
        if (d.is_negative()) return Verdict3::CertifiedNo;  // a Schur pivot is negative
        if (!d.is_positive()) return Verdict3::Undecided;
        Ball root = d.sqrt();
        L[j][j] = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            Ball s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
            L[i][j] = s / root;
        }
    }
    return Verdict3::CertifiedYes;
}

MinEigResult min_eig_enclosure(const BallMatrix& a, const PrecisionConfig& prec) {
    std::size_t n = a.size();
    if (n == 0) throw invalid_argument("min_eig_enclosure: empty matrix");
    mpfr_prec_t p = prec.bits() + 16;

    MinEigResult out;
    out.psd_verdict = cholesky_pd(a);

    // Gershgorin bracket
    double lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row += a[i][j].mag_d();
        double dlo = a[i][i].lower_d() - row;
        double dhi = a[i][i].upper_d();
        if (i == 0 || dlo < lo) lo = dlo;
        if (i == 0 || dhi < hi) hi = dhi;  // lambda_min <= min_i a_ii
    }
    if (!(lo <= hi)) lo = hi - 1;

    auto shifted_pd = [&](double mu) {
        BallMatrix s = a;
        Ball m = Ball::exact_d(mu, p);
        for (std::size_t i = 0; i < n; ++i) s[i][i] = s[i][i] - m;
        return cholesky_pd(s);
    };

    double width_target = std::max(1e-3 * (hi - lo), std::ldexp(std::max(1.0, std::fabs(hi)),
                                                                 -static_cast<int>(prec.bits()) / 2));
    // modest bisection depth: the enclosure is for reporting, the verdict at 0
    // is what certifies
    for (int it = 0; it < 96 && (hi - lo) > width_target; ++it) {
        double mu = 0.5 * (lo + hi);
        Verdict3 v = shifted_pd(mu);
        if (v == Verdict3::CertifiedYes)
            lo = mu;  // lambda_min > mu
        else if (v == Verdict3::CertifiedNo)
            hi = mu;
        else
            break;  // straddling zone reached
    }

    mpfr_t mlo, mhi;
    mpfr_inits2(p, mlo, mhi, (mpfr_ptr) nullptr);
    mpfr_set_d(mlo, lo, MPFR_RNDD);
    mpfr_set_d(mhi, hi, MPFR_RNDU);
    out.min_eig = Ball::from_endpoints(mlo, mhi, p);
    mpfr_clears(mlo, mhi, (mpfr_ptr) nullptr);
    return out;
}

} // namespace pfflab
