#pragma once

// Dense polynomials over Q. Coefficient index r is the coefficient of T^r;
// the zero polynomial has an empty coefficient vector and degree -1.

#include "weilcheck/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weilcheck {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(const Rat& v) { return RatPoly({v}); }
    // x^n
    static RatPoly monomial(long n, const Rat& v = 1) {
        std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
        c.back() = v;
        return RatPoly(std::move(c));
    }
    static RatPoly from_ints(std::initializer_list<long> coeffs) {
        std::vector<Rat> c;
        for (long v : coeffs) c.emplace_back(v);
        return RatPoly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rat& operator[](long r) const {
        static const Rat kZero = 0;
        if (r < 0 || r > degree()) return kZero;
        return c_[static_cast<std::size_t>(r)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    bool is_integral() const {
        for (const Rat& v : c_)
            if (den(v) != 1) return false;
        return true;
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const {
        if (degree() < 1) return zero();
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t r = 1; r < c_.size(); ++r) d[r - 1] = c_[r] * Rat(static_cast<long>(r));
        return RatPoly(std::move(d));
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a) {
        std::vector<Rat> c = a.c_;
        for (Rat& v : c) v = -v;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const Rat& s) {
        std::vector<Rat> c = a.c_;
        for (Rat& v : c) v *= s;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const Rat& s, const RatPoly& a) { return a * s; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    RatPoly monic() const {
        if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
        return *this * (Rat(1) / leading());
    }

    // T^deg * f(1/T); requires f(0) != 0 to stay of the same degree
    RatPoly reversal() const {
        std::vector<Rat> c(c_.rbegin(), c_.rend());
        return RatPoly(std::move(c));
    }

    // f(s*T)
    RatPoly scale_arg(const Rat& s) const {
        std::vector<Rat> c = c_;
        Rat f = 1;
        for (std::size_t r = 1; r < c.size(); ++r) {
            f *= s;
            c[r] *= f;
        }
        return RatPoly(std::move(c));
    }

    std::string str(const std::string& var = "T") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    long dq = a.degree() - db;
    if (dq < 0) return {RatPoly::zero(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(dq) + 1, Rat(0));
    const Rat& lb = b.leading();
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        Rat f = rem[static_cast<std::size_t>(i)] / lb;
        if (f == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

inline bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).second.is_zero(); }

// exact division; throws when the remainder is nonzero
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

// multiplicity of the root x0, by repeated exact division
inline long root_multiplicity(RatPoly f, const Rat& x0) {
    if (f.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
    long m = 0;
    RatPoly lin({-x0, Rat(1)});
    while (f.eval(x0) == 0) {
        f = exact_div(f, lin);
        ++m;
    }
    return m;
}

// first M power sums p_n = sum z_i^n of the roots of a monic polynomial,
// by the Newton recurrence on the coefficients
inline std::vector<Rat> power_sums(const RatPoly& f, long M) {
    if (!f.is_monic()) throw std::invalid_argument("power_sums: polynomial must be monic");
    long N = f.degree();
    std::vector<Rat> a(static_cast<std::size_t>(N) + 1);
    for (long r = 0; r <= N; ++r) a[static_cast<std::size_t>(r)] = f[N - r];  // a[i] multiplies T^(N-i)
    std::vector<Rat> p(static_cast<std::size_t>(M) + 1, Rat(0));
    for (long n = 1; n <= M; ++n) {
        Rat s = 0;
        if (n <= N) {
            for (long i = 1; i < n; ++i) s += a[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(n - i)];
            p[static_cast<std::size_t>(n)] = -s - Rat(n) * a[static_cast<std::size_t>(n)];
        } else {
            for (long i = 1; i <= N; ++i) s += a[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(n - i)];
            p[static_cast<std::size_t>(n)] = -s;
        }
    }
    return std::vector<Rat>(p.begin() + 1, p.end());
}

inline std::string rat_str(const Rat& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

inline std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long r = degree(); r >= 0; --r) {
        const Rat& v = (*this)[r];
        if (v == 0) continue;
        Rat a = v;
        if (!out.empty()) {
            out += (a > 0) ? " + " : " - ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            out += "-";
            a = -a;
        }
        if (r == 0 || a != 1) out += rat_str(a);
        if (r > 0) {
            if (a != 1) out += "*";
            out += var;
            if (r > 1) out += "^" + std::to_string(r);
        }
    }
    return out;
}

}  // namespace weilcheck
