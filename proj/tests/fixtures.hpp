#pragma once

// Shared fixtures: the two bundled datasets (a degree-two K3 surface over
// F_7 and a cubic fourfold over F_2) with their reference candidate
// polynomials.

#include "weilcheck/weilcheck.hpp"

#include <vector>

namespace testdata {

using weilcheck::BigInt;
using weilcheck::Rat;
using weilcheck::RatPoly;

inline RatPoly k3_phi0() {
    return RatPoly({Rat(1),      Rat(-10, 7), Rat(1, 7),  Rat(-1, 7), Rat(6, 7),  Rat(-3, 7), Rat(-2, 7), Rat(0),
                    Rat(4, 7),   Rat(-1, 7),  Rat(-1, 7), Rat(0),     Rat(-1, 7), Rat(-1, 7), Rat(4, 7),  Rat(0),
                    Rat(-2, 7),  Rat(-3, 7),  Rat(6, 7),  Rat(-1, 7), Rat(1, 7),  Rat(-10, 7), Rat(1)});
}

inline RatPoly k3_phi1() {
    return RatPoly({Rat(-1),     Rat(10, 7),  Rat(-1, 7), Rat(1, 7),  Rat(-6, 7), Rat(3, 7),  Rat(2, 7),  Rat(0),
                    Rat(-4, 7),  Rat(1, 7),   Rat(1, 7),  Rat(0),     Rat(-1, 7), Rat(-1, 7), Rat(4, 7),  Rat(0),
                    Rat(-2, 7),  Rat(-3, 7),  Rat(6, 7),  Rat(-1, 7), Rat(1, 7),  Rat(-10, 7), Rat(1)});
}

inline RatPoly cubic_phi() {
    return RatPoly({Rat(-1),    Rat(3, 2),  Rat(0),     Rat(-3, 2), Rat(1),     Rat(1),     Rat(-3, 2), Rat(0),
                    Rat(3, 2),  Rat(-3, 2), Rat(0),     Rat(1),     Rat(-1),    Rat(0),     Rat(3, 2),  Rat(-3, 2),
                    Rat(0),     Rat(3, 2),  Rat(-1),    Rat(-1),    Rat(3, 2),  Rat(0),     Rat(-3, 2), Rat(1)});
}

inline std::vector<BigInt> k3_counts() {
    return {BigInt(60),
            BigInt(2488),
            BigInt(118587),
            BigInt(5765828),
            BigInt(282498600),
            BigInt("13841656159"),
            BigInt("678225676496"),
            BigInt("33232936342644"),
            BigInt("1628413665268026"),
            BigInt("79792266679604918")};
}

inline std::vector<BigInt> cubic_counts() {
    return {BigInt(33),
            BigInt(361),
            BigInt(4545),
            BigInt(69665),
            BigInt(1084673),
            BigInt(17044609),
            BigInt(270543873),
            BigInt("4311990785"),
            BigInt("68853026817"),
            BigInt("1100586076161"),
            BigInt("17600769409025")};
}

inline weilcheck::FrobPolynomial k3_fp(const RatPoly& phi) {
    return weilcheck::FrobPolynomial{weilcheck::WeilContext{BigInt(7), 1, 2, 22}, phi};
}

inline weilcheck::FrobPolynomial cubic_fp() {
    return weilcheck::FrobPolynomial{weilcheck::WeilContext{BigInt(2), 1, 4, 23}, cubic_phi()};
}

inline weilcheck::HodgeVector k3_hodge() { return weilcheck::HodgeVector{{1, 20, 1}}; }
inline weilcheck::HodgeVector cubic_hodge() { return weilcheck::HodgeVector{{0, 1, 21, 1, 0}}; }

inline weilcheck::VarietyDescriptor k3_descriptor() {
    weilcheck::VarietyDescriptor vd;
    vd.name = "k3_double_cover_f7";
    vd.p = 7;
    vd.k = 1;
    vd.d = 2;
    vd.hodge = k3_hodge();
    vd.point_counts = k3_counts();
    vd.ambient = {{0, 1, false}, {2, 1, false}};
    vd.forced_unit_root_multiplicity = 1;
    return vd;
}

inline weilcheck::VarietyDescriptor cubic_descriptor() {
    weilcheck::VarietyDescriptor vd;
    vd.name = "cubic_fourfold_f2";
    vd.p = 2;
    vd.k = 1;
    vd.d = 4;
    vd.hodge = cubic_hodge();
    vd.point_counts = cubic_counts();
    vd.ambient = {{0, 1, false}, {1, 1, false}, {3, 1, false}, {4, 1, false}};
    vd.forced_unit_root_multiplicity = 1;
    return vd;
}

// random monic polynomial with the reversal symmetry a_{N-r} = sign * a_r
inline RatPoly random_reciprocal(weilcheck::Rng& rng, long n, int sign) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[static_cast<std::size_t>(n)] = 1;
    c[0] = Rat(sign);
    for (long r = 1; 2 * r < n; ++r) {
        Rat v{rng.int_in(-6, 6)};
        c[static_cast<std::size_t>(n - r)] = v;
        c[static_cast<std::size_t>(r)] = Rat(sign) * v;
    }
    if (n % 2 == 0 && sign == 1) c[static_cast<std::size_t>(n / 2)] = Rat(rng.int_in(-6, 6));
    return RatPoly(std::move(c));
}

}  // namespace testdata
