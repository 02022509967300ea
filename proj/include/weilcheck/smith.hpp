#pragma once

// Elementary divisors over the localization Z_(p): valuations of a square
// nonsingular rational matrix. At each step the entry of minimal p-adic
// valuation pivots; all elimination multipliers are then p-integral, so the
// transforms are unimodular over Z_(p) and the pivot valuations are the
// invariant factors.

#include "weilcheck/linalg.hpp"
#include "weilcheck/numeric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weilcheck {

inline std::vector<long> local_smith_lengths(RatMat m, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("local_smith_lengths: p must be prime");
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("local_smith_lengths: matrix must be square");

    std::vector<long> vals;
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<long> best;
        std::size_t bi = k, bj = k;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (m[i][j] == 0) continue;
                long v = valuation(m[i][j], p).value;
                if (!best || v < *best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (!best) throw std::invalid_argument("local_smith_lengths: singular matrix");
        std::swap(m[k], m[bi]);
        for (auto& row : m) std::swap(row[k], row[bj]);
        const Rat piv = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / piv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m[k][j] == 0) continue;
            Rat f = m[k][j] / piv;
            for (std::size_t i = k; i < n; ++i) m[i][j] -= f * m[i][k];
        }
        vals.push_back(*best);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

// length of (A*H + H)/H over Z_(p), H the standard lattice: with s_i the
// elementary divisor valuations of A, this is sum of max(0, -s_i)
inline long lattice_index_over(const RatMat& a, const BigInt& p) {
    long l = 0;
    for (long s : local_smith_lengths(a, p)) l += std::max(0L, -s);
    return l;
}

// length of H/(H cap A*H) = length of [H/(H cap A*H)]_tors for nonsingular A:
// sum of max(0, s_i)
inline long lattice_index_under(const RatMat& a, const BigInt& p) {
    long l = 0;
    for (long s : local_smith_lengths(a, p)) l += std::max(0L, s);
    return l;
}

}  // namespace weilcheck
