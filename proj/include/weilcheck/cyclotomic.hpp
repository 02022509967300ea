#pragma once

// Cyclotomic polynomials and roots-of-unity detection by exact trial
// division. phi_n is computed as (T^n - 1) / prod_{d | n, d < n} phi_d and
// memoized behind a mutex.

#include "weilcheck/numeric.hpp"
#include "weilcheck/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace weilcheck {

inline std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {
struct CyclotomicCache {
    std::mutex mu;
    std::map<long, RatPoly> table;
};
inline CyclotomicCache& cyclotomic_cache() {
    static CyclotomicCache c;
    return c;
}
}  // namespace detail

inline RatPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    {
        auto& cache = detail::cyclotomic_cache();
        std::scoped_lock lock(cache.mu);
        auto it = cache.table.find(n);
        if (it != cache.table.end()) return it->second;
    }
    RatPoly result;
    if (n == 1) {
        result = RatPoly::from_ints({-1, 1});
    } else {
        std::vector<Rat> xn(static_cast<std::size_t>(n) + 1, Rat(0));
        xn[0] = -1;
        xn.back() = 1;
        RatPoly f{std::move(xn)};
        for (long d : divisors_of(n))
            if (d != n) f = exact_div(f, cyclotomic(d));
        result = f;
    }
    auto& cache = detail::cyclotomic_cache();
    std::scoped_lock lock(cache.mu);
    cache.table.emplace(n, result);
    return result;
}

// phi_n(-1), exactly. (-2 at n=1, 0 at n=2, 2 at n=2^e with e>1, the odd
// prime p at n=2p^e, and 1 otherwise.)
inline BigInt cyclotomic_minus_one(long n) {
    Rat v = cyclotomic(n).eval(-1);
    return num(v);
}

// true iff f (monic, integral) is a product of cyclotomic polynomials,
// decided by trial division with the Euler-phi degree filter and an
// explicit cutoff n <= max(30, deg^2)
inline bool all_roots_of_unity(const RatPoly& f_in) {
    if (f_in.is_zero() || !f_in.is_monic()) throw std::invalid_argument("all_roots_of_unity: input must be monic");
    if (!f_in.is_integral()) throw std::invalid_argument("all_roots_of_unity: input must have integer coefficients");
    RatPoly f = f_in;
    if (f.degree() == 0) return true;
    if (abs(f[0]) != 1) return false;  // product of roots of unity has norm 1
    long cutoff = std::max<long>(30, f.degree() * f.degree());
    for (long n = 1; n <= cutoff && f.degree() > 0; ++n) {
        if (euler_phi(n) > f.degree()) continue;
        RatPoly phin = cyclotomic(n);
        while (f.degree() >= phin.degree()) {
            auto [q, r] = divmod(f, phin);
            if (!r.is_zero()) break;
            f = q;
        }
    }
    return f.degree() == 0;
}

}  // namespace weilcheck
