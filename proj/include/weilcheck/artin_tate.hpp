#pragma once

// Surface-level consistency layer: Milne's invariant alpha, the square
// class predicted for disc Pic under the Tate conjecture, and the
// base-change contradiction detector. Brauer order and Neron-Severi
// torsion contribute perfect squares and are deliberately not modeled;
// everything here lives in Q*/(Q*)^2.

#include "weilcheck/compose.hpp"
#include "weilcheck/parity.hpp"
#include "weilcheck/squareclass.hpp"
#include "weilcheck/weil.hpp"

#include <stdexcept>
#include <string>

namespace weilcheck {

struct SurfaceInvariants {
    long h2_o = 0;  // dim H^2(X, O_X)
    long h1_o = 0;  // dim H^1(X, O_X)
    long b1 = 0;    // dim H^1_et, must be even
};

inline long alpha(const SurfaceInvariants& si) {
    if (si.b1 % 2 != 0) throw std::invalid_argument("alpha: b1 must be even");
    return si.h2_o - si.h1_o + si.b1 / 2;
}

// (-2)^N q^alpha Phi(-1) is a square, assuming the Tate conjecture
inline ParityVerdict test_artin_tate(const FrobPolynomial& fp, long alpha_val) {
    if (fp.ctx.d != 2) throw std::invalid_argument("test_artin_tate: surfaces only (d = 2)");
    ParityVerdict v = test_main2(fp, alpha_val);
    v.theorem = ParityTheorem::kArtinTate;
    v.char_two_warning = false;
    return v;
}

// predicted square class of disc Pic(X): (-1)^{rho - 1} q^alpha Phi*(1),
// with rho the multiplicity of the root 1 and Phi* = Phi/(T-1)^rho. The
// sign follows the Hodge index theorem convention.
inline SquareClass disc_square_class(const FrobPolynomial& fp, long alpha_val) {
    if (fp.ctx.d != 2) throw std::invalid_argument("disc_square_class: surfaces only (d = 2)");
    long rho = root_multiplicity(fp.phi, 1);
    RatPoly star = fp.phi;
    RatPoly lin = RatPoly::from_ints({-1, 1});
    for (long i = 0; i < rho; ++i) star = exact_div(star, lin);
    Rat value = rpow(Rat(fp.ctx.q()), alpha_val) * star.eval(1);
    if (rho % 2 == 0) value = -value;
    return square_class(value);
}

enum class BaseChangeVerdict { kConsistent, kContradiction, kNotApplicable };

struct BaseChangeReport {
    BaseChangeVerdict verdict = BaseChangeVerdict::kNotApplicable;
    long rank_base = 0;      // multiplicity of root 1 over F_q
    long rank_extended = 0;  // multiplicity of root 1 over F_{q^2}
    SquareClass disc_base;
    SquareClass disc_extended;
    SquareClass ratio;
};

// disc Pic(X) / disc Pic(X_{F_{q^2}}) must be a perfect square when the
// predicted ranks agree; a nontrivial ratio class is a contradiction
inline BaseChangeReport base_change_consistency(const FrobPolynomial& fp, long alpha_val) {
    if (fp.ctx.d != 2) throw std::invalid_argument("base_change_consistency: surfaces only (d = 2)");
    BaseChangeReport rep;
    RatPoly phi2 = power_map(fp.phi, 2);
    rep.rank_base = root_multiplicity(fp.phi, 1);
    rep.rank_extended = root_multiplicity(phi2, 1);
    if (rep.rank_base != rep.rank_extended) return rep;  // rank would jump

    FrobPolynomial fp2{WeilContext{fp.ctx.p, 2 * fp.ctx.k, fp.ctx.d, fp.ctx.N}, phi2};
    rep.disc_base = disc_square_class(fp, alpha_val);
    rep.disc_extended = disc_square_class(fp2, alpha_val);
    rep.ratio = rep.disc_base * rep.disc_extended;  // a class equals its inverse
    rep.verdict = rep.ratio.is_one() ? BaseChangeVerdict::kConsistent : BaseChangeVerdict::kContradiction;
    return rep;
}

inline std::string base_change_verdict_str(BaseChangeVerdict v) {
    switch (v) {
        case BaseChangeVerdict::kConsistent: return "CONSISTENT";
        case BaseChangeVerdict::kContradiction: return "CONTRADICTION";
        default: return "NOT_APPLICABLE";
    }
}

}  // namespace weilcheck
