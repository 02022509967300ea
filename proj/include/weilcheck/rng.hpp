#pragma once

// Deterministic, platform-independent RNG for seeded sweeps and property
// tests (splitmix64). std::uniform_int_distribution is not portable across
// standard libraries, so reductions are done by hand.

#include <cstdint>

namespace weilcheck {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); slight modulo bias is irrelevant here
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream deterministically
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        Rng r(a ^ (0x9E3779B97F4A7C15ULL * (b + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace weilcheck
