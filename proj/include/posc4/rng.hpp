#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace posc4 {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seeded stream over std::mt19937_64, which is bit-stable across platforms by
// the standard's specification of the engine. Bounded draws use rejection
// sampling instead of std::uniform_int_distribution, whose output is
// implementation-defined and would break transcript portability.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        if ((bound & (bound - 1)) == 0) return eng_() & (bound - 1);
        const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t two64_mod = (max64 % bound + 1) % bound;
        const std::uint64_t max_ok = max64 - two64_mod;
        for (;;) {
            const std::uint64_t r = eng_();
            if (r <= max_ok) return r % bound;
        }
    }

private:
    std::mt19937_64 eng_;
};

// Named sub-stream so Maker and Breaker never share draws.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::string_view tag) {
    return splitmix64(base_seed ^ fnv1a64(tag));
}

} // namespace posc4
