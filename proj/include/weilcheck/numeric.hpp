#pragma once

// Exact scalar types and small number-theoretic helpers used everywhere:
// arbitrary-precision integers/rationals, p-adic valuations, binomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace weilcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& x) { return numerator(x); }
inline BigInt den(const Rat& x) { return denominator(x); }

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// x^e for integer e (negative e allowed when x != 0)
inline Rat rpow(const Rat& x, long e) {
    if (e >= 0) {
        Rat r = 1, b = x;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (x == 0) throw std::invalid_argument("rpow: negative power of zero");
    return Rat(1) / rpow(x, -e);
}

inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// p-adic valuation of a nonzero integer
inline long ivaluation(BigInt n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("ivaluation: zero input");
    long v = 0;
    n = abs(n);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// nu_p of a rational; infinite (nullopt) for zero
struct LocalValuation {
    BigInt p;
    bool infinite = false;
    long value = 0;  // meaningful iff !infinite
};

inline LocalValuation valuation(const Rat& x, const BigInt& p);

namespace detail {
bool miller_rabin_is_prime(const BigInt& n);
}

inline bool is_prime(const BigInt& n) { return detail::miller_rabin_is_prime(n); }

inline LocalValuation valuation(const Rat& x, const BigInt& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    if (x == 0) return {p, true, 0};
    return {p, false, ivaluation(num(x), p) - ivaluation(den(x), p)};
}

// nu_q = nu_p / k as an exact rational, for q = p^k; nullopt = +infinity
inline std::optional<Rat> valuation_q(const Rat& x, const BigInt& p, long k) {
    if (k < 1) throw std::invalid_argument("valuation_q: k must be positive");
    LocalValuation v = valuation(x, p);
    if (v.infinite) return std::nullopt;
    return Rat(v.value, k);
}

inline BigInt binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt b = 1;
    for (long i = 0; i < r; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// floor of sqrt; exactness query for perfect squares
inline BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative input");
    return sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = sqrt(n);
    return r * r == n;
}

}  // namespace weilcheck

#include "weilcheck/detail/primality.hpp"
