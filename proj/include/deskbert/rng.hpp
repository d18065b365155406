#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace deskbert::rng {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based generator: the value stream is a pure function of
// (seed, key1, key2, counter), so parallel producers that agree on keys get
// identical draws regardless of scheduling.
class Counter {
public:
    explicit Counter(uint64_t seed, uint64_t key1 = 0, uint64_t key2 = 0)
        : state_(mix(seed, key1, key2)) {}

    uint64_t next_u64() {
        uint64_t v = splitmix64(state_ + counter_);
        ++counter_;
        return v;
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) without modulo bias.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

    // Standard normal via Box-Muller, one value per call (spare discarded).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    static uint64_t mix(uint64_t seed, uint64_t key1, uint64_t key2) {
        uint64_t s = splitmix64(seed);
        s = splitmix64(s ^ splitmix64(key1 + 0x243F6A8885A308D3ULL));
        s = splitmix64(s ^ splitmix64(key2 + 0x13198A2E03707344ULL));
        return s;
    }

    uint64_t state_;
    uint64_t counter_ = 0;
};

// Fisher-Yates; pinned here rather than delegated to std::shuffle so the
// permutation is a function of our code alone.
template <typename T>
void shuffle(std::vector<T>& items, Counter& rng) {
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.next_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace deskbert::rng
