#pragma once

// Root-composition algebra: Phi^{(k)} (base extension), composed-product
// polynomials for direct products, and the parity lemmas they satisfy.
// Both maps go through Sylvester resultants with the symbolic variable
// handled as polynomial entries, eliminated fraction-free.

#include "weilcheck/linalg.hpp"
#include "weilcheck/parity.hpp"
#include "weilcheck/poly.hpp"
#include "weilcheck/squareclass.hpp"
#include "weilcheck/weil.hpp"

#include <stdexcept>
#include <vector>

namespace weilcheck {

namespace detail {

// resultant in x of two polynomials whose x-coefficients are RatPoly in T
inline RatPoly poly_resultant(const std::vector<RatPoly>& fx, const std::vector<RatPoly>& gx) {
    long n = static_cast<long>(fx.size()) - 1;
    long m = static_cast<long>(gx.size()) - 1;
    std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
    for (long i = 0; i < m; ++i)
        for (long r = 0; r <= n; ++r)
            syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + n - r)] = fx[static_cast<std::size_t>(r)];
    for (long i = 0; i < n; ++i)
        for (long r = 0; r <= m; ++r)
            syl[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + m - r)] = gx[static_cast<std::size_t>(r)];
    return bareiss_det<RatPoly>(
        std::move(syl), RatPoly::constant(1), [](const RatPoly& p) { return p.is_zero(); },
        [](const RatPoly& a, const RatPoly& b) { return exact_div(a, b); });
}

}  // namespace detail

// monic polynomial with roots z_i^k, as Res_x(f(x), x^k - T); negative k
// goes through the reversal polynomial T^N f(1/T) / f(0)
inline RatPoly power_map(const RatPoly& f, long k) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("power_map: f must be monic");
    if (k == 0) throw std::invalid_argument("power_map: k must be nonzero");
    if (k < 0) {
        if (f[0] == 0) throw std::invalid_argument("power_map: negative k needs f(0) != 0");
        return power_map(f.reversal().monic(), -k);
    }
    long n = f.degree();
    if (n == 0) return RatPoly::constant(1);

    std::vector<RatPoly> fx(static_cast<std::size_t>(n) + 1);
    for (long r = 0; r <= n; ++r) fx[static_cast<std::size_t>(r)] = RatPoly::constant(f[r]);
    std::vector<RatPoly> gx(static_cast<std::size_t>(k) + 1);
    gx[0] = RatPoly({0, -1});  // -T
    gx[static_cast<std::size_t>(k)] = RatPoly::constant(1);

    RatPoly res = detail::poly_resultant(fx, gx);
    return res.monic();
}

// composed-product polynomial with roots z_i^(1) z_j^(2) / q^{(d1+d2)/2},
// inputs untwisted monic of weights d1, d2 over q = p^k
inline RatPoly product_map(const RatPoly& f, long d1, const RatPoly& g, long d2, const BigInt& p, long k) {
    if ((d1 - d2) % 2 != 0) throw std::invalid_argument("product_map: d1 and d2 must have equal parity");
    if (f.is_zero() || g.is_zero() || !f.is_monic() || !g.is_monic())
        throw std::invalid_argument("product_map: inputs must be monic");
    if (f[0] == 0 || g[0] == 0) throw std::invalid_argument("product_map: inputs must have nonzero constant term");
    if (!is_prime(p)) throw std::invalid_argument("product_map: p must be prime");
    const long n1 = f.degree(), n2 = g.degree();
    Rat s = rpow(Rat(ipow(p, static_cast<unsigned long>(k))), (d1 + d2) / 2);

    std::vector<RatPoly> fx(static_cast<std::size_t>(n1) + 1);
    for (long r = 0; r <= n1; ++r) fx[static_cast<std::size_t>(r)] = RatPoly::constant(f[r]);
    // h(x) = x^{n2} g(sT/x): coefficient of x^{n2-j} is g_j s^j T^j
    std::vector<RatPoly> hx(static_cast<std::size_t>(n2) + 1);
    for (long j = 0; j <= n2; ++j)
        hx[static_cast<std::size_t>(n2 - j)] = RatPoly::monomial(j, g[j] * rpow(s, j));

    RatPoly res = detail::poly_resultant(fx, hx);
    if (res.degree() != n1 * n2) throw std::logic_error("product_map: unexpected composed degree");
    return res.monic();
}

// base-extension parity: for f reciprocal up to sign, (-2)^N Phi^{(k)}(-1)
// is a square when k is even, and carries p^{k e} when k is odd
inline ParityVerdict base_extension_parity_check(const RatPoly& f, long k, const BigInt& p, long e) {
    if (functional_equation_sign(f) == FeSign::kIncompatible)
        throw std::invalid_argument("base_extension_parity_check: f violates the functional equation");
    RatPoly phik = power_map(f, k);
    long exponent = (k % 2 == 0) ? 0 : k * e;
    ParityVerdict v;
    v.theorem = ParityTheorem::kBaseExtension;
    v.exponent_used = exponent;
    v.phi_at_test_point = phik.eval(-1);
    v.tested_quantity = rpow(Rat(-2), f.degree()) * rpow(Rat(p), exponent) * v.phi_at_test_point;
    if (v.tested_quantity == 0) {
        v.kind = VerdictKind::kVacuous;
        v.tested_value = SquareClass::zero();
        return v;
    }
    v.tested_value = square_class(v.tested_quantity);
    v.kind = v.tested_value.is_one() ? VerdictKind::kPass : VerdictKind::kFail;
    return v;
}

struct CompositionReport {
    RatPoly result;
    long predicted_exponent = 0;
    ParityVerdict verdict;
    bool hypotheses_ok = true;   // even case: the inputs' own square-class hypotheses
    std::string note;
};

// parity of the composed product: exponent N1 N2 / 4 when the weights are
// odd, N1 e2 + N2 e1 when they are even
inline CompositionReport product_parity_check(const RatPoly& f, long d1, const RatPoly& g, long d2,
                                              const BigInt& p, long k, long e1, long e2) {
    CompositionReport rep;
    rep.result = product_map(f, d1, g, d2, p, k);
    const long n1 = f.degree(), n2 = g.degree();

    if (d1 % 2 != 0) {
        if ((n1 * n2) % 4 != 0)
            throw std::invalid_argument("product_parity_check: N1*N2 not divisible by 4 in the odd case");
        rep.predicted_exponent = n1 * n2 / 4;
    } else {
        rep.predicted_exponent = n1 * e2 + n2 * e1;
        // hypothesis of the even-case lemma: a minus-sign input requires the
        // other factor's own class statement to hold
        auto own_class_ok = [&](const RatPoly& untwisted, long d, long e) {
            RatPoly norm = normalize_to_weight_zero(untwisted, p, k, d);
            Rat val = rpow(Rat(-2), norm.degree()) * rpow(Rat(p), e) * norm.eval(-1);
            return val == 0 || square_class(val).is_one();
        };
        FeSign s1 = functional_equation_sign(normalize_to_weight_zero(f, p, k, d1));
        FeSign s2 = functional_equation_sign(normalize_to_weight_zero(g, p, k, d2));
        if (s1 == FeSign::kMinus && !own_class_ok(g, d2, e2)) {
            rep.hypotheses_ok = false;
            rep.note = "second input violates its own square-class hypothesis";
        }
        if (s2 == FeSign::kMinus && !own_class_ok(f, d1, e1)) {
            rep.hypotheses_ok = false;
            rep.note = "first input violates its own square-class hypothesis";
        }
    }

    ParityVerdict& v = rep.verdict;
    v.theorem = ParityTheorem::kProduct;
    v.exponent_used = rep.predicted_exponent;
    v.phi_at_test_point = rep.result.eval(-1);
    v.tested_quantity = rpow(Rat(-2), n1 * n2) * rpow(Rat(p), rep.predicted_exponent) * v.phi_at_test_point;
    if (v.tested_quantity == 0) {
        v.kind = VerdictKind::kVacuous;
        v.tested_value = SquareClass::zero();
        return rep;
    }
    v.tested_value = square_class(v.tested_quantity);
    v.kind = v.tested_value.is_one() ? VerdictKind::kPass : VerdictKind::kFail;
    return rep;
}

// parity of e(X1 x X2): N1 N2 / 4 mod 2 for odd weights, N1 e2 + N2 e1 mod 2
// for even weights
inline int e_product_parity(long n1, long n2, long d1, long d2, long e1, long e2) {
    if ((d1 - d2) % 2 != 0) throw std::invalid_argument("e_product_parity: d1 and d2 must have equal parity");
    if (d1 % 2 != 0) {
        if ((n1 * n2) % 4 != 0) throw std::invalid_argument("e_product_parity: N1*N2 must be divisible by 4");
        return static_cast<int>((n1 * n2 / 4) % 2);
    }
    long v = n1 * e2 + n2 * e1;
    return static_cast<int>(((v % 2) + 2) % 2);
}

}  // namespace weilcheck
