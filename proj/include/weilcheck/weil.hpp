#pragma once

// Weil-polynomial domain types and the classical admissibility checks:
// functional equation, real-root multiplicities, l-adic units, coefficient
// bounds plus numeric root moduli, the forced unit root, and the
// Newton-above-Hodge coefficient bounds.
//
// The normalized (weight-zero) form is canonical: phi is the characteristic
// polynomial on middle cohomology after twisting so that the conjectural
// root moduli are 1. The untwisted integral form is derived on demand.

#include "weilcheck/newton_polygon.hpp"
#include "weilcheck/numeric.hpp"
#include "weilcheck/poly.hpp"
#include "weilcheck/roots_numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilcheck {

struct WeilContext {
    BigInt p;
    long k = 1;  // q = p^k
    long d = 0;  // cohomological degree (here: the variety dimension)
    long N = 0;  // degree of phi

    BigInt q() const { return ipow(p, static_cast<unsigned long>(k)); }

    void validate() const {
        if (!is_prime(p)) throw std::invalid_argument("WeilContext: p must be prime");
        if (k < 1) throw std::invalid_argument("WeilContext: k must be positive");
        if (d < 0 || N < 0) throw std::invalid_argument("WeilContext: negative degree");
    }
};

struct FrobPolynomial {
    WeilContext ctx;
    RatPoly phi;  // normalized, monic of degree ctx.N

    FrobPolynomial(WeilContext c, RatPoly f) : ctx(std::move(c)), phi(std::move(f)) {
        ctx.validate();
        if (phi.is_zero() || !phi.is_monic()) throw std::invalid_argument("FrobPolynomial: phi must be monic");
        if (phi.degree() != ctx.N) throw std::invalid_argument("FrobPolynomial: degree does not match N");
    }
};

// abstract Hodge numbers h'_{d-m,m} for m = 0..d
struct HodgeVector {
    std::vector<long> entries;

    long degree() const { return static_cast<long>(entries.size()) - 1; }
    long sum() const {
        long s = 0;
        for (long h : entries) s += h;
        return s;
    }
    // Serre symmetry h'_{n,m} = h'_{d-n,d-m}, i.e. the vector is palindromic
    bool serre_symmetric() const {
        long d = degree();
        for (long m = 0; m <= d; ++m)
            if (entries[static_cast<std::size_t>(m)] != entries[static_cast<std::size_t>(d - m)]) return false;
        return true;
    }
};

// Psi(T) = q^{N d/2} phi(T / q^{d/2}): the characteristic polynomial before
// the weight-normalizing twist. Coefficientwise b_r = a_r q^{r d/2}, which
// is rational only when every odd-index contribution vanishes for odd d.
inline RatPoly untwist(const FrobPolynomial& fp) {
    const long d = fp.ctx.d;
    const long n = fp.ctx.N;
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    Rat q{fp.ctx.q()};
    for (long r = 0; r <= n; ++r) {  // a_r multiplies T^{N-r} and picks up q^{r d/2}
        const Rat& a = fp.phi[n - r];
        if (a == 0) continue;
        if ((r * d) % 2 != 0)
            throw std::domain_error("untwist: irrational scaling (odd d with nonvanishing odd coefficient)");
        b[static_cast<std::size_t>(n - r)] = a * rpow(q, r * d / 2);
    }
    return RatPoly(std::move(b));
}

// inverse of untwist: normalize an untwisted polynomial to weight zero
inline RatPoly normalize_to_weight_zero(const RatPoly& psi, const BigInt& p, long k, long d) {
    if (psi.is_zero() || !psi.is_monic()) throw std::invalid_argument("normalize: psi must be monic");
    long N = psi.degree();
    Rat q{ipow(p, static_cast<unsigned long>(k))};
    std::vector<Rat> a(static_cast<std::size_t>(N) + 1, Rat(0));
    for (long r = 0; r <= N; ++r) {
        const Rat& b = psi[N - r];
        if (b == 0) continue;
        if ((r * d) % 2 != 0)
            throw std::domain_error("normalize: irrational scaling (odd d with nonvanishing odd coefficient)");
        a[static_cast<std::size_t>(N - r)] = b / rpow(q, r * d / 2);
    }
    return RatPoly(std::move(a));
}

enum class FeSign { kPlus, kMinus, kIncompatible };

// sign in T^N phi(1/T) = eps * phi(T), tested coefficientwise
inline FeSign functional_equation_sign(const RatPoly& phi) {
    if (phi.is_zero()) return FeSign::kIncompatible;
    long N = phi.degree();
    bool plus = true, minus = true;
    for (long r = 0; r <= N; ++r) {
        if (phi[r] != phi[N - r]) plus = false;
        if (phi[r] != -phi[N - r]) minus = false;
    }
    if (plus) return FeSign::kPlus;
    if (minus) return FeSign::kMinus;
    return FeSign::kIncompatible;
}

inline FeSign functional_equation_sign(const FrobPolynomial& fp) { return functional_equation_sign(fp.phi); }

inline std::string fe_sign_str(FeSign s) {
    switch (s) {
        case FeSign::kPlus: return "+1";
        case FeSign::kMinus: return "-1";
        default: return "incompatible";
    }
}

struct RealRootReport {
    long mult_plus_one = 0;
    long mult_minus_one = 0;
    bool both_even = false;
    bool theorem_applies = false;  // the evenness assertion is a theorem only for odd d
};

inline RealRootReport check_real_root_multiplicity(const FrobPolynomial& fp) {
    RealRootReport r;
    r.mult_plus_one = root_multiplicity(fp.phi, 1);
    r.mult_minus_one = root_multiplicity(fp.phi, -1);
    r.both_even = r.mult_plus_one % 2 == 0 && r.mult_minus_one % 2 == 0;
    r.theorem_applies = fp.ctx.d % 2 != 0;
    return r;
}

struct LUnitsReport {
    bool integral = false;        // untwisted polynomial has integer coefficients
    bool constant_is_p_power = false;
    bool pass = false;
    std::string constant;  // constant term of the untwisted polynomial
};

// all roots are l-adic units for every l coprime to q iff the constant term
// of the untwisted polynomial is +-(power of p)
inline LUnitsReport check_l_units(const FrobPolynomial& fp) {
    LUnitsReport rep;
    RatPoly psi;
    try {
        psi = untwist(fp);
    } catch (const std::domain_error&) {
        return rep;
    }
    rep.integral = psi.is_integral();
    if (!rep.integral) return rep;
    Rat c0 = psi[0];
    rep.constant = rat_str(c0);
    if (c0 == 0) return rep;
    BigInt n = abs(num(c0));
    while (n % fp.ctx.p == 0) n /= fp.ctx.p;
    rep.constant_is_p_power = (n == 1);
    rep.pass = rep.constant_is_p_power;
    return rep;
}

struct WeilBoundsReport {
    bool reversal_ok = false;           // exact necessary condition
    bool coefficient_bounds_ok = false; // exact necessary condition
    long first_bad_coefficient = -1;
    bool exact_pass = false;
    double max_deviation = 0.0;  // numeric advisory: max | |z| - 1 |
    bool numeric_ok = true;
};

inline WeilBoundsReport check_weil_bounds(const FrobPolynomial& fp, double tol = 1e-6) {
    if (fp.phi.is_zero()) throw std::invalid_argument("check_weil_bounds: zero polynomial");
    WeilBoundsReport rep;
    rep.reversal_ok = functional_equation_sign(fp.phi) != FeSign::kIncompatible;
    rep.coefficient_bounds_ok = true;
    long N = fp.ctx.N;
    for (long r = 0; r <= N; ++r) {
        Rat bound{binomial(N, r)};
        if (abs(fp.phi[r]) > bound) {
            rep.coefficient_bounds_ok = false;
            rep.first_bad_coefficient = r;
            break;
        }
    }
    rep.exact_pass = rep.reversal_ok && rep.coefficient_bounds_ok;
    rep.max_deviation = max_unit_circle_deviation(fp.phi);
    rep.numeric_ok = rep.max_deviation < tol;
    return rep;
}

struct TrivialRootReport {
    bool pass = false;
    long multiplicity = 0;
};

// normalized form of Phi(q^{d/2 - j}) = 0: phi(1) = 0 (even d)
inline TrivialRootReport check_trivial_root(const FrobPolynomial& fp) {
    if (fp.ctx.d % 2 != 0) throw std::invalid_argument("check_trivial_root: d must be even");
    TrivialRootReport rep;
    rep.multiplicity = root_multiplicity(fp.phi, 1);
    rep.pass = rep.multiplicity >= 1;
    return rep;
}

struct KatzReport {
    bool pass = false;
    long first_violation = -1;      // coefficient index r, when failing
    std::vector<Rat> bounds;        // bound for nu_q(a_r), r = 0..N
};

// Katz bound: nu_q(a_r) >= int_0^r [G(t) - d/2] dt for the coefficients
// a_r of the normalized polynomial (a_r multiplies T^{N-r}); G is the step
// function of the cumulative Hodge numbers.
inline KatzReport check_katz(const FrobPolynomial& fp, const HodgeVector& h) {
    const long N = fp.ctx.N;
    const long d = fp.ctx.d;
    if (h.degree() != d) throw std::invalid_argument("check_katz: Hodge vector length must be d+1");
    if (h.sum() != N) throw std::invalid_argument("check_katz: Hodge numbers must sum to N");
    if (d % 2 != 0) throw std::invalid_argument("check_katz: d must be even");

    // cumulative breakpoints of G
    std::vector<long> cum(h.entries.size() + 1, 0);
    for (std::size_t m = 0; m < h.entries.size(); ++m) cum[m + 1] = cum[m] + h.entries[m];

    KatzReport rep;
    rep.pass = true;
    rep.bounds.resize(static_cast<std::size_t>(N) + 1);
    // integral of G over [0, r] for integer r: sum over unit intervals
    long acc = 0;  // integer since G is integer-valued on integer breakpoints
    long level = 0;
    for (long r = 0; r <= N; ++r) {
        rep.bounds[static_cast<std::size_t>(r)] = Rat(acc) - Rat(r * d, 2);
        if (r == N) break;
        while (level + 1 < static_cast<long>(cum.size()) && cum[static_cast<std::size_t>(level) + 1] <= r) ++level;
        acc += level;  // G on (r, r+1]; breakpoints are integers
    }
    for (long r = 1; r <= N; ++r) {
        const Rat& a = fp.phi[N - r];
        if (a == 0) continue;
        Rat nu = *valuation_q(a, fp.ctx.p, fp.ctx.k);
        if (nu < rep.bounds[static_cast<std::size_t>(r)]) {
            rep.pass = false;
            rep.first_violation = r;
            break;
        }
    }
    return rep;
}

}  // namespace weilcheck
