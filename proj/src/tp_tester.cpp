#include "pfflab/tp_tester.hpp"

#include <algorithm>
#include <cmath>

#include "pfflab/errors.hpp"
#include "pfflab/numerics.hpp"
#include "pfflab/parallel.hpp"
#include "pfflab/rng.hpp"

namespace pfflab {

void Grid::validate(int order_cap) const {
    if (xs.size() != ys.size()) throw invalid_argument("Grid: xs/ys length mismatch");
    if (xs.empty() || static_cast<int>(xs.size()) > order_cap)
        throw invalid_argument("Grid: order must be in 1..cap");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i]) || !(ys[i - 1] < ys[i]))
            throw invalid_argument("Grid: coordinates must be strictly increasing");
}

Ball tp_det(const CatalogEntry& f, const Grid& g, const PrecisionConfig& prec) {
    g.validate();
    std::size_t n = g.xs.size();
    mpfr_prec_t p = prec.bits();
    BallMatrix m(n, std::vector<Ball>(n, Ball(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Ball arg = Ball::exact_d(g.xs[i], p) - Ball::exact_d(g.ys[j], p);
            m[i][j] = f.eval(arg, prec);
        }
    return det_enclosure(std::move(m));
}

GridStrategy strategy_from_string(const std::string& s) {
    if (s == "uniform-window") return GridStrategy::UniformWindow;
    if (s == "clustered") return GridStrategy::Clustered;
    if (s == "adversarial-support-edges") return GridStrategy::AdversarialSupportEdges;
    throw invalid_argument("unknown grid strategy '" + s + "'");
}

const char* to_string(GridStrategy s) {
    switch (s) {
        case GridStrategy::UniformWindow: return "uniform-window";
        case GridStrategy::Clustered: return "clustered";
        default: return "adversarial-support-edges";
    }
}

namespace {

std::vector<double> sorted_distinct(Rng& rng, int n, double lo, double hi) {
    std::vector<double> v(n);
    for (;;) {
        for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
        std::sort(v.begin(), v.end());
        bool ok = true;
        for (int i = 1; i < n; ++i) ok &= (v[i - 1] < v[i]);
        if (ok) return v;
    }
}

Grid make_grid(const CatalogEntry& f, GridStrategy strategy, int n, Rng& rng) {
    double lo = f.window_lo, hi = f.window_hi;
    Grid g;
    switch (strategy) {
        case GridStrategy::UniformWindow:
            g.xs = sorted_distinct(rng, n, lo, hi);
            g.ys = sorted_distinct(rng, n, lo, hi);
            break;
        case GridStrategy::Clustered: {
            double c = rng.uniform(lo, hi);
            double scale = (hi - lo) * std::pow(10.0, -rng.uniform(0.0, 2.0));
            g.xs = sorted_distinct(rng, n, c - scale, c + scale);
            g.ys = sorted_distinct(rng, n, c - scale, c + scale);
            break;
        }
        case GridStrategy::AdversarialSupportEdges: {
            // cluster differences x - y around the support boundaries
            std::vector<double> edges;
            if (std::isfinite(f.support.lo)) edges.push_back(f.support.lo);
            if (std::isfinite(f.support.hi)) edges.push_back(f.support.hi);
            if (edges.empty()) edges.push_back(0.0);
            auto draw = [&](int count) {
                std::vector<double> v(count);
                for (int i = 0; i < count; ++i) {
                    double e = edges[rng.below(edges.size())];
                    double off = (rng.uniform() - 0.5) * 0.6;
                    v[i] = e + off;
                }
                std::sort(v.begin(), v.end());
                for (int i = 1; i < count; ++i)
                    if (!(v[i - 1] < v[i])) return std::vector<double>();
                return v;
            };
            std::vector<double> xs, ys;
            do {
                xs = draw(n);
            } while (xs.empty());
            // y offsets relative to a random base so that x - y sweeps the edges
            do {
                double base = rng.uniform(-0.5, 0.5);
                ys = draw(n);
                for (auto& y : ys) y += base;
            } while (ys.empty());
            g.xs = xs;
            g.ys = ys;
            break;
        }
    }
    return g;
}

} // namespace

TPReport tp_battery(const CatalogEntry& f, int max_order, long trials, uint64_t seed,
                    GridStrategy strategy, const PrecisionConfig& prec, int threads,
                    double noise_floor) {
    if (max_order < 1 || max_order > 6)
        throw invalid_argument("tp_battery: max_order must be in 1..6");
    if (trials < 1) throw invalid_argument("tp_battery: trials must be >= 1");
    if (noise_floor <= 0)
        noise_floor = std::ldexp(1.0, -static_cast<int>(prec.bits()) / 2);

    TPReport rep;
    rep.subject = f.name;
    rep.strategy = strategy;
    rep.seed = seed;
    bool any_violation = false;
    long total_undecided = 0;

    for (int n = 1; n <= max_order; ++n) {
        std::vector<Ball> dets(trials, Ball(prec.bits()));
        std::vector<Grid> grids(trials);
        std::vector<char> undecided(trials, 0);
        parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
            Rng rng = Rng::for_trial(seed, (static_cast<uint64_t>(n) << 32) | t);
            Grid g = make_grid(f, strategy, n, rng);
            Ball d = tp_det(f, g, prec);
            if (d.contains_zero() && d.radius_d() > noise_floor) {
                // escalate once before conceding
                PrecisionConfig esc = prec.with_digits(prec.digits + prec.digits / 2 + 10);
                d = tp_det(f, g, esc).round_to(prec.bits());
                if (d.contains_zero() && d.radius_d() > noise_floor) undecided[t] = 1;
            }
            dets[t] = std::move(d);
            grids[t] = std::move(g);
        });

        OrderReport orep;
        orep.n = n;
        orep.trials = trials;
        orep.min_det = dets[0];
        orep.worst_grid = grids[0];
        for (long t = 0; t < trials; ++t) {
            if (dets[t].cmp_center(orep.min_det) < 0) {
                orep.min_det = dets[t];
                orep.worst_grid = grids[t];
            }
            if (dets[t].is_negative()) any_violation = true;
            if (undecided[t]) ++orep.undecided;
        }
        total_undecided += orep.undecided;
        rep.orders.push_back(std::move(orep));
        if (any_violation) break;  // the interesting outcome; stop the scan
    }

    if (any_violation)
        rep.verdict = TPVerdict::CertifiedViolation;
    else if (total_undecided > 0)
        rep.verdict = TPVerdict::Undecided;
    else
        rep.verdict = TPVerdict::NoCertifiedViolation;
    return rep;
}

GramResult bochner_gram(const std::vector<double>& taus, const PrecisionConfig& prec) {
    std::size_t n = taus.size();
    if (n == 0) throw invalid_argument("bochner_gram: empty tau set");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (taus[i] == taus[j]) throw invalid_argument("bochner_gram: taus must be distinct");

    mpfr_prec_t p = prec.bits() + 16;
    BallMatrix g(n, std::vector<Ball>(n, Ball(p)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
            Ball d = Ball::exact_d(taus[j], p) - Ball::exact_d(taus[k], p);
            Ball v = inv_xi_half_plus(d, prec);  // even: only |d| matters
            g[j][k] = v;
            g[k][j] = v;
        }
    }
    MinEigResult r = min_eig_enclosure(g, prec);
    return GramResult{r.psd_verdict, r.min_eig};
}

} // namespace pfflab
