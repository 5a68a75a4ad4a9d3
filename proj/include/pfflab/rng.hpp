#pragma once

#include <cstdint>

namespace pfflab {

// splitmix64: tiny, seedable, and stable across platforms. Every battery
// derives one independent stream per (seed, trial) pair so that results do
// not depend on thread scheduling.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng for_trial(uint64_t seed, uint64_t trial) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        r.next();  // decorrelate nearby seeds
        return r;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    uint64_t state_;
};

} // namespace pfflab
