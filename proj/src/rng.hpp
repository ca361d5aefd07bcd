#ifndef SDPEXACT_RNG_HPP
#define SDPEXACT_RNG_HPP

// Self-contained splitmix64-based generator.  Standard-library distributions
// are avoided so that seeded runs are byte-identical across toolchains.

#include <cmath>
#include <cstdint>
#include <vector>

namespace sdpexact {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    double gaussian() {
        // Box-Muller; retries uniform01() == 0
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::vector<double> unit_vector(int n) {
        std::vector<double> v(n);
        double s = 0.0;
        do {
            s = 0.0;
            for (int i = 0; i < n; ++i) {
                v[i] = gaussian();
                s += v[i] * v[i];
            }
        } while (s == 0.0);
        s = std::sqrt(s);
        for (int i = 0; i < n; ++i) v[i] /= s;
        return v;
    }

    // decorrelated substream, used for per-sample parallel fan-out
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t k) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace sdpexact

#endif
