/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_RNG_HPP
#define HYPERCUT_RNG_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace hypercut {

// Deterministic random source. std::mt19937_64 has a fixed bitstream, but
// the standard distributions do not, so the sampling helpers are spelled
// out here to keep results identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // uniform integer in [0, n)
    std::size_t next_index(std::size_t n) {
        assert(n > 0);
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return static_cast<std::size_t>(x % n);
    }

    // integer in [lo, hi] inclusive
    long long uniform_int(long long lo, long long hi) {
        assert(hi >= lo);
        return lo + static_cast<long long>(
                        next_index(static_cast<std::size_t>(hi - lo + 1)));
    }

    // standard normal via Box-Muller (deterministic, no cached spare)
    double gaussian() {
        double u1 = next_double();
        while (u1 <= 0.0) {
            u1 = next_double();
        }
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // index drawn proportionally to non-negative weights; returns the first
    // index with positive weight if the total mass is zero
    std::size_t weighted_index(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) {
            total += w;
        }
        if (total <= 0.0) {
            return 0;
        }
        const double target = next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (target < acc) {
                return i;
            }
        }
        return weights.size() - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hypercut

#endif // HYPERCUT_RNG_HPP
