#pragma once

// Floating-point root finding (Durand-Kerner) for the advisory layer of the
// Weil bound check. Never feeds a hard verdict; exact conditions do that.

#include "weilcheck/poly.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace weilcheck {

inline std::vector<std::complex<double>> approximate_roots(const RatPoly& f) {
    long n = f.degree();
    if (n < 1) return {};
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    double lead = f.leading().convert_to<double>();
    for (long r = 0; r <= n; ++r) c[static_cast<std::size_t>(r)] = f[r].convert_to<double>() / lead;

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (long r = n; r >= 0; --r) acc = acc * x + c[static_cast<std::size_t>(r)];
        return acc;
    };

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1.0;
    for (auto& zi : z) {
        w *= seed;
        zi = w;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0) continue;
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// max | |z| - 1 | over the approximate roots
inline double max_unit_circle_deviation(const RatPoly& f) {
    double worst = 0;
    for (const auto& z : approximate_roots(f)) worst = std::max(worst, std::fabs(std::abs(z) - 1.0));
    return worst;
}

}  // namespace weilcheck
