#pragma once

// Resultants via fraction-free Bareiss elimination on the Sylvester matrix.
// Scalar case: denominators are cleared first and divided back out
// (Res(c*f, g) = c^{deg g} Res(f, g)).

#include "weilcheck/linalg.hpp"
#include "weilcheck/numeric.hpp"
#include "weilcheck/poly.hpp"

#include <stdexcept>
#include <vector>

namespace weilcheck {

inline Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    long n = f.degree(), m = g.degree();
    if (n == 0) return rpow(Rat(f[0]), m);
    if (m == 0) return rpow(Rat(g[0]), n);

    BigInt lf = 1, lg = 1;
    for (long r = 0; r <= n; ++r) lf = lcm(lf, den(f[r]));
    for (long r = 0; r <= m; ++r) lg = lcm(lg, den(g[r]));

    std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, BigInt(0)));
    // m rows of f's coefficients, then n rows of g's
    for (long i = 0; i < m; ++i)
        for (long r = 0; r <= n; ++r)
            syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + n - r)] = num(f[r] * Rat(lf));
    for (long i = 0; i < n; ++i)
        for (long r = 0; r <= m; ++r)
            syl[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + m - r)] = num(g[r] * Rat(lg));

    BigInt d = bareiss_det<BigInt>(
        std::move(syl), BigInt(1), [](const BigInt& x) { return x == 0; },
        [](const BigInt& x, const BigInt& y) { return x / y; });
    return Rat(d) / (rpow(Rat(lf), m) * rpow(Rat(lg), n));
}

}  // namespace weilcheck
