#pragma once

// The square-class parity tests on (-2)^N Phi(-1): the plain form (square
// or p times a square), the refined form with the crystalline invariant e,
// the twist-covariant form, and the supersingular consequences.
//
// Verdict conventions:
//  - VACUOUS whenever the polynomial vanishes at the test point; it is
//    never collapsed into PASS.
//  - The plain test reports the p-free part of the obstruction class and
//    the extracted p-exponent parity separately, so PASS means exactly
//    "obstruction trivial modulo squares and p".

#include "weilcheck/cyclotomic.hpp"
#include "weilcheck/newton_polygon.hpp"
#include "weilcheck/squareclass.hpp"
#include "weilcheck/weil.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace weilcheck {

enum class VerdictKind { kPass, kFail, kVacuous };
enum class ParityTheorem { kMain, kMain2, kTwisted, kArtinTate, kBaseExtension, kProduct };

struct ParityVerdict {
    VerdictKind kind = VerdictKind::kVacuous;
    SquareClass tested_value;   // zero sentinel iff VACUOUS
    long exponent_used = 0;
    ParityTheorem theorem = ParityTheorem::kMain;
    bool char_two_warning = false;  // p = 2 lies outside the refined theorem's hypothesis
    Rat phi_at_test_point = 0;      // raw evidence value phi(-1) (or its twisted image)
    Rat tested_quantity = 0;        // the full expression whose square class is taken

    bool failed() const { return kind == VerdictKind::kFail; }
};

inline std::string verdict_kind_str(VerdictKind k) {
    switch (k) {
        case VerdictKind::kPass: return "PASS";
        case VerdictKind::kFail: return "FAIL";
        default: return "VACUOUS";
    }
}

// e(X) = sum_{m < d/2} (d/2 - m) h'_{d-m,m}
inline long e_from_hodge(const HodgeVector& h, long d) {
    if (d % 2 != 0) throw std::invalid_argument("e_from_hodge: d must be even");
    if (h.degree() != d) throw std::invalid_argument("e_from_hodge: Hodge vector length must be d+1");
    long e = 0;
    for (long m = 0; m < d / 2; ++m) e += (d / 2 - m) * h.entries[static_cast<std::size_t>(m)];
    return e;
}

// Hodge-Witt reading of e: minus the sum of the negative root valuations,
// i.e. the positive slope mass of the normalized Newton polygon
inline long e_from_slopes(const FrobPolynomial& fp) {
    if (fp.phi[0] == 0) throw std::invalid_argument("e_from_slopes: zero constant term");
    NewtonPolygon np = newton_polygon(fp.phi, fp.ctx.p, fp.ctx.k);
    Rat e = 0;
    for (const auto& seg : np.segments)
        if (seg.slope > 0) e += seg.slope * Rat(seg.length);
    if (den(e) != 1) throw std::domain_error("e_from_slopes: slope sum is not an integer");
    return num(e).convert_to<long>();
}

// (-2)^N Phi(-1) is a square or p times a square. The obstruction class is
// factored as p^delta * s with s coprime to p; PASS iff s = 1.
inline ParityVerdict test_main(const FrobPolynomial& fp) {
    if (fp.ctx.d % 2 != 0) throw std::invalid_argument("test_main: d must be even");
    ParityVerdict v;
    v.theorem = ParityTheorem::kMain;
    v.phi_at_test_point = fp.phi.eval(-1);
    v.tested_quantity = rpow(Rat(-2), fp.ctx.N) * v.phi_at_test_point;
    if (v.tested_quantity == 0) {
        v.kind = VerdictKind::kVacuous;
        v.tested_value = SquareClass::zero();
        return v;
    }
    SquareClass cls = square_class(v.tested_quantity);
    BigInt rep = cls.representative();
    long delta = 0;
    if (rep % fp.ctx.p == 0) {
        delta = 1;
        rep /= fp.ctx.p;
    }
    v.exponent_used = delta;
    v.tested_value = SquareClass::of_squarefree(rep);
    v.kind = v.tested_value.is_one() ? VerdictKind::kPass : VerdictKind::kFail;
    return v;
}

// (-2)^N q^e Phi(-1) is a square (characteristic != 2; at p = 2 the verdict
// carries a warning instead of erroring, matching how the refined statement
// still holds for the bundled characteristic-2 example)
inline ParityVerdict test_main2(const FrobPolynomial& fp, long e) {
    if (fp.ctx.d % 2 != 0) throw std::invalid_argument("test_main2: d must be even");
    ParityVerdict v;
    v.theorem = ParityTheorem::kMain2;
    v.char_two_warning = (fp.ctx.p == 2);
    v.exponent_used = e;
    v.phi_at_test_point = fp.phi.eval(-1);
    v.tested_quantity = rpow(Rat(-2), fp.ctx.N) * rpow(Rat(fp.ctx.q()), e) * v.phi_at_test_point;
    if (v.tested_quantity == 0) {
        v.kind = VerdictKind::kVacuous;
        v.tested_value = SquareClass::zero();
        return v;
    }
    v.tested_value = square_class(v.tested_quantity);
    v.kind = v.tested_value.is_one() ? VerdictKind::kPass : VerdictKind::kFail;
    return v;
}

// (-2)^N q^{e - N(d/2 - j)} Phi_j(-q^{d/2 - j}) is a square, for an
// arbitrary Tate twist j; evaluated literally on the twisted polynomial
inline ParityVerdict test_twisted(const FrobPolynomial& fp, long e, long j) {
    if (fp.ctx.d % 2 != 0) throw std::invalid_argument("test_twisted: d must be even");
    ParityVerdict v;
    v.theorem = ParityTheorem::kTwisted;
    v.char_two_warning = (fp.ctx.p == 2);
    v.exponent_used = e;
    const long shift = fp.ctx.d / 2 - j;
    Rat q{fp.ctx.q()};
    Rat qs = rpow(q, shift);
    // Phi_j(T) = q^{N*shift} phi(T / q^shift), so Phi_j(-q^shift) = q^{N*shift} phi(-1);
    // build and evaluate the twisted polynomial anyway to exercise the formula as displayed
    RatPoly phi_j = fp.phi.scale_arg(Rat(1) / qs) * rpow(q, fp.ctx.N * shift);
    v.phi_at_test_point = phi_j.eval(-qs);
    v.tested_quantity = rpow(Rat(-2), fp.ctx.N) * rpow(q, e - fp.ctx.N * shift) * v.phi_at_test_point;
    if (v.tested_quantity == 0) {
        v.kind = VerdictKind::kVacuous;
        v.tested_value = SquareClass::zero();
        return v;
    }
    v.tested_value = square_class(v.tested_quantity);
    v.kind = v.tested_value.is_one() ? VerdictKind::kPass : VerdictKind::kFail;
    return v;
}

enum class SupersingularVerdict { kConsistent, kContradiction, kNotApplicable };

inline std::string supersingular_verdict_str(SupersingularVerdict v) {
    switch (v) {
        case SupersingularVerdict::kConsistent: return "CONSISTENT";
        case SupersingularVerdict::kContradiction: return "CONTRADICTION";
        default: return "NOT_APPLICABLE";
    }
}

struct SupersingularReport {
    SupersingularVerdict verdict = SupersingularVerdict::kNotApplicable;
    std::string reason;
};

// Even-dimensional supersingular case: under p != 2, k odd, e odd, constant
// slope zero and all roots of unity, (-1) must be an eigenvalue. Hypotheses
// are checked, not assumed.
inline SupersingularReport supersingular_forced_eigenvalue(const FrobPolynomial& fp, long e) {
    SupersingularReport rep;
    if (fp.ctx.d % 2 != 0) {
        rep.reason = "d odd";
        return rep;
    }
    if (fp.ctx.p == 2) {
        rep.reason = "p = 2";
        return rep;
    }
    if (fp.ctx.k % 2 == 0) {
        rep.reason = "k even";
        return rep;
    }
    if (e % 2 == 0) {
        rep.reason = "e even";
        return rep;
    }
    if (fp.phi[0] == 0 || !newton_polygon(fp.phi, fp.ctx.p, fp.ctx.k).constant_slope(0)) {
        rep.reason = "Newton polygon not of constant slope";
        return rep;
    }
    if (!fp.phi.is_integral() || !all_roots_of_unity(fp.phi)) {
        rep.reason = "roots are not all roots of unity";
        return rep;
    }
    rep.verdict = fp.phi.eval(-1) == 0 ? SupersingularVerdict::kConsistent : SupersingularVerdict::kContradiction;
    rep.reason = rep.verdict == SupersingularVerdict::kConsistent
                     ? "(-1) is an eigenvalue"
                     : "no (-1) eigenvalue: such a polynomial cannot occur";
    return rep;
}

// Odd-dimensional supersingular case: when N = 2 mod 4, constant slope,
// k odd and p != 2, the normalized images of +-sqrt(-p^{dk}) must be
// eigenvalues, i.e. T^2 + 1 divides the normalized polynomial.
inline SupersingularReport odd_dim_supersingular(const FrobPolynomial& fp) {
    if (fp.ctx.d % 2 == 0) throw std::invalid_argument("odd_dim_supersingular: d must be odd");
    SupersingularReport rep;
    if (fp.ctx.N % 4 != 2) {
        rep.reason = "N not 2 mod 4";
        return rep;
    }
    if (fp.ctx.p == 2) {
        rep.reason = "p = 2";
        return rep;
    }
    if (fp.ctx.k % 2 == 0) {
        rep.reason = "k even";
        return rep;
    }
    if (fp.phi[0] == 0 || !newton_polygon(fp.phi, fp.ctx.p, fp.ctx.k).constant_slope(0)) {
        rep.reason = "Newton polygon not of constant slope";
        return rep;
    }
    bool has = divides(RatPoly::from_ints({1, 0, 1}), fp.phi);
    rep.verdict = has ? SupersingularVerdict::kConsistent : SupersingularVerdict::kContradiction;
    rep.reason = has ? "T^2 + 1 divides phi" : "T^2 + 1 does not divide phi";
    return rep;
}

}  // namespace weilcheck
