#pragma once

// Integer factorization: trial division up to 10^6, then Pollard rho
// (Brent variant) on the remaining cofactors, with deterministic
// Miller-Rabin as the primality oracle.

#include "weilcheck/numeric.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace weilcheck {

using Factorization = std::map<BigInt, long>;

namespace detail {

inline constexpr std::uint32_t kTrialBound = 1000000;

// Brent's cycle-finding variant of Pollard rho with batched gcds and
// backtracking when the batch overshoots. n must be odd, composite, and
// free of factors below the trial bound.
inline BigInt pollard_brent(const BigInt& n, std::uint64_t c0) {
    for (BigInt c = c0;; ++c) {
        auto f = [&](const BigInt& v) { return (v * v + c) % n; };
        BigInt y = 2, d = 1, q = 1, x, ys;
        const long batch = 128;
        for (BigInt r = 1; d == 1; r <<= 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = f(y);
            for (BigInt k = 0; k < r && d == 1; k += batch) {
                ys = y;
                BigInt steps = min(BigInt(batch), r - k);
                for (BigInt i = 0; i < steps; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
        }
        if (d == n) {
            // the batch collapsed several factors at once: redo stepwise
            do {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;  // else the cycle degenerated; retry with the next c
    }
}

inline void factor_rec(const BigInt& n, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (is_perfect_square(n)) {
        Factorization half;
        factor_rec(isqrt_floor(n), half);
        for (auto& [p, e] : half) out[p] += 2 * e;
        return;
    }
    BigInt d = pollard_brent(n, 1);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

struct FactorCache {
    std::mutex mu;
    std::unordered_map<std::string, Factorization> map;
};

inline FactorCache& factor_cache() {
    static FactorCache cache;
    return cache;
}

}  // namespace detail

// Factorization of |n| as prime -> exponent; the sign is the caller's business.
inline Factorization factor_integer(const BigInt& n_in) {
    if (n_in == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
    BigInt n = abs(n_in);
    if (n == 1) return {};

    {
        auto& cache = detail::factor_cache();
        std::scoped_lock lock(cache.mu);
        auto it = cache.map.find(n.str());
        if (it != cache.map.end()) return it->second;
    }
    const BigInt original = n;

    Factorization out;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1 && !is_prime(n)) {
        static constexpr std::uint32_t wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
        std::uint32_t p = 7;
        int w = 0;
        while (p <= detail::kTrialBound && BigInt(p) * p <= n) {
            if (n % p == 0) {
                while (n % p == 0) {
                    ++out[p];
                    n /= p;
                }
                if (n == 1 || is_prime(n)) break;
            }
            p += wheel[w];
            w = (w + 1) & 7;
        }
    }
    if (n > 1) detail::factor_rec(n, out);

    {
        auto& cache = detail::factor_cache();
        std::scoped_lock lock(cache.mu);
        if (cache.map.size() < 100000) cache.map.emplace(original.str(), out);
    }
    return out;
}

// signed squarefree part of a nonzero integer
inline BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero input");
    BigInt s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 != 0) s *= p;
    return s;
}

}  // namespace weilcheck
