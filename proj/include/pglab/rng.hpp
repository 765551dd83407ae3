#pragma once

#include <cstdint>
#include <random>

namespace pglab {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic 64-bit generator. Bounded draws use mask rejection instead
/// of std::uniform_int_distribution so that sequences are identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t u64() { return gen_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t mask = ~0ULL;
        std::uint64_t limit = n - 1;
        int bits = 0;
        while (limit >> bits) ++bits;
        mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
        for (;;) {
            std::uint64_t r = gen_() & mask;
            if (r < n) return r;
        }
    }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent stream for trial `i` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t i) {
        return Rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL * (i + 1))));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pglab
