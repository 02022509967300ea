#pragma once

// Small dense exact linear algebra: rational matrices, Gauss-Jordan,
// fraction-free Bareiss determinants (generic over any integral domain
// with exact division).

#include "weilcheck/numeric.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weilcheck {

using RatMat = std::vector<std::vector<Rat>>;

inline RatMat identity_mat(std::size_t n) {
    RatMat m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat c(n, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline RatMat mat_add(const RatMat& a, const RatMat& b) {
    RatMat c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline RatMat mat_sub(const RatMat& a, const RatMat& b) {
    RatMat c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] -= b[i][j];
    return c;
}

inline RatMat mat_transpose(const RatMat& a) {
    if (a.empty()) return a;
    RatMat t(a[0].size(), std::vector<Rat>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// Fraction-free Bareiss determinant over an integral domain. Div must be
// exact division (the algorithm only divides by earlier pivots, which is
// exact in any integral domain).
template <typename T, typename IsZero, typename Div>
T bareiss_det(std::vector<std::vector<T>> m, const T& one, IsZero is_zero, Div div) {
    std::size_t n = m.size();
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return T{};  // zero column -> singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div(t, prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sign == 1 ? d : T{} - d;
}

// Determinant of a rational matrix: clear denominators per row, run integer
// Bareiss, divide the scaling back out.
inline Rat mat_det(const RatMat& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (const Rat& v : a[i]) l = lcm(l, den(v));
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = a[i][j] * Rat(l);
            m[i][j] = num(v);
        }
    }
    BigInt d = bareiss_det<BigInt>(
        std::move(m), BigInt(1), [](const BigInt& x) { return x == 0; },
        [](const BigInt& x, const BigInt& y) { return x / y; });
    return Rat(d, scale);
}

// Gauss-Jordan inverse; nullopt when singular
inline std::optional<RatMat> mat_inverse(const RatMat& a) {
    std::size_t n = a.size();
    RatMat m = a;
    RatMat inv = identity_mat(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[c], m[piv]);
        std::swap(inv[c], inv[piv]);
        Rat pv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= pv;
            inv[c][j] /= pv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Exact solution of a (possibly over- or under-determined) linear system.
struct LinearSolution {
    enum class Kind { kUnique, kUnderdetermined, kInconsistent } kind;
    std::vector<Rat> values;  // populated when unique
    long free_count = 0;      // populated when underdetermined
};

inline LinearSolution solve_linear(RatMat rows, std::vector<Rat> rhs, std::size_t nvars) {
    std::size_t m = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nvars && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && rows[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(rows[row], rows[sel]);
        std::swap(rhs[row], rhs[sel]);
        Rat pv = rows[row][col];
        for (std::size_t j = col; j < nvars; ++j) rows[row][j] /= pv;
        rhs[row] /= pv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || rows[r][col] == 0) continue;
            Rat f = rows[r][col];
            for (std::size_t j = col; j < nvars; ++j) rows[r][j] -= f * rows[row][j];
            rhs[r] -= f * rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (rhs[r] != 0) return {LinearSolution::Kind::kInconsistent, {}, 0};
    if (pivot_col.size() < nvars)
        return {LinearSolution::Kind::kUnderdetermined, {}, static_cast<long>(nvars - pivot_col.size())};
    std::vector<Rat> x(nvars, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return {LinearSolution::Kind::kUnique, std::move(x), 0};
}

}  // namespace weilcheck
