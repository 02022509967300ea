#include "weilcheck/weilcheck.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace weilcheck;
using namespace testdata;

TEST_CASE("e from abstract Hodge numbers") {
    REQUIRE(e_from_hodge(k3_hodge(), 2) == 1);
    REQUIRE(e_from_hodge(cubic_hodge(), 4) == 1);
    REQUIRE(e_from_hodge(HodgeVector{{0, 0, 0}}, 2) == 0);
    REQUIRE_THROWS_AS(e_from_hodge(HodgeVector{{1, 1}}, 1), std::invalid_argument);
}

TEST_CASE("e from Newton slopes") {
    REQUIRE(e_from_slopes(k3_fp(k3_phi1())) == 1);
    REQUIRE(e_from_slopes(k3_fp(k3_phi0())) == 1);
    REQUIRE(e_from_slopes(cubic_fp()) == 1);

    FrobPolynomial ss{WeilContext{5, 1, 2, 2}, RatPoly::from_ints({-1, 0, 1})};
    REQUIRE(e_from_slopes(ss) == 0);

    // slope shape {-1/2 x2, +1/2 x2}: T^4 + T^2/5 + 1 at p = 5
    FrobPolynomial ab{WeilContext{5, 1, 2, 4}, RatPoly({Rat(1), Rat(0), Rat(1, 5), Rat(0), Rat(1)})};
    REQUIRE(e_from_slopes(ab) == 1);
}

TEST_CASE("hodge-witt consistency on the two datasets") {
    REQUIRE(e_from_slopes(k3_fp(k3_phi1())) == e_from_hodge(k3_hodge(), 2));
    REQUIRE(e_from_slopes(cubic_fp()) == e_from_hodge(cubic_hodge(), 4));
}

TEST_CASE("parity test, plain form") {
    ParityVerdict v0 = test_main(k3_fp(k3_phi0()));
    REQUIRE(v0.kind == VerdictKind::kFail);
    REQUIRE(v0.tested_value.representative() == 15);  // p-free obstruction; raw class is 7*15
    REQUIRE(v0.exponent_used == 1);
    REQUIRE(v0.phi_at_test_point == Rat(60, 7));

    ParityVerdict v1 = test_main(k3_fp(k3_phi1()));
    REQUIRE(v1.kind == VerdictKind::kVacuous);
    REQUIRE(v1.tested_value.is_zero());

    ParityVerdict vc = test_main(cubic_fp());
    REQUIRE(vc.kind == VerdictKind::kPass);
    REQUIRE(vc.phi_at_test_point == -1);
    REQUIRE(vc.exponent_used == 1);  // the class is p itself
    REQUIRE(vc.tested_value.is_one());
}

TEST_CASE("parity test, refined form with e") {
    ParityVerdict v0 = test_main2(k3_fp(k3_phi0()), 1);
    REQUIRE(v0.kind == VerdictKind::kFail);
    REQUIRE(v0.tested_value.representative() == 15);
    REQUIRE(v0.tested_quantity == Rat(BigInt(251658240)));  // 2^24 * 3 * 5
    REQUIRE(!v0.char_two_warning);

    ParityVerdict vc = test_main2(cubic_fp(), 1);
    REQUIRE(vc.kind == VerdictKind::kPass);
    REQUIRE(vc.tested_value.is_one());
    REQUIRE(vc.tested_quantity == Rat(ipow(2, 24)));
    REQUIRE(vc.char_two_warning);  // p = 2 sits outside the hypothesis

    FrobPolynomial vac{WeilContext{3, 1, 2, 2}, RatPoly::from_ints({-1, 0, 1})};
    REQUIRE(test_main2(vac, 1).kind == VerdictKind::kVacuous);
}

TEST_CASE("plain test passes whenever the refined test does") {
    Rng rng(2718);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        long n = rng.int_in(1, 8);
        RatPoly phi = random_reciprocal(rng, n, rng.int_in(0, 1) ? 1 : -1);
        FrobPolynomial fp{WeilContext{5, 1, 2, n}, phi};
        ParityVerdict m2 = test_main2(fp, rng.int_in(0, 3));
        if (m2.kind == VerdictKind::kPass) {
            ParityVerdict m = test_main(fp);
            REQUIRE(m.kind != VerdictKind::kFail);
            ++checked;
        }
    }
    REQUIRE(checked > 0);
}

TEST_CASE("twisted form agrees with the refined form at every twist") {
    for (long j : {-2L, -1L, 0L, 1L, 2L}) {
        ParityVerdict t0 = test_twisted(k3_fp(k3_phi0()), 1, j);
        REQUIRE(t0.kind == VerdictKind::kFail);
        REQUIRE(t0.tested_value.representative() == 15);
        REQUIRE(test_twisted(k3_fp(k3_phi1()), 1, j).kind == VerdictKind::kVacuous);
    }
    Rng rng(555);
    for (int i = 0; i < 60; ++i) {
        long n = rng.int_in(1, 6);
        RatPoly phi = random_reciprocal(rng, n, rng.int_in(0, 1) ? 1 : -1);
        FrobPolynomial fp{WeilContext{3, 1, 4, n}, phi};
        long e = rng.int_in(0, 2);
        long j = rng.int_in(-1, 3);
        ParityVerdict tw = test_twisted(fp, e, j);
        ParityVerdict m2 = test_main2(fp, e);
        REQUIRE(tw.kind == m2.kind);
        if (tw.kind != VerdictKind::kVacuous) REQUIRE(tw.tested_value == m2.tested_value);
    }
}

TEST_CASE("roots of unity detection") {
    RatPoly f = RatPoly::from_ints({1, 0, 1}) * RatPoly::from_ints({-1, 1});
    REQUIRE(all_roots_of_unity(f));
    REQUIRE(!all_roots_of_unity(RatPoly::from_ints({1, -3, 1})));
    REQUIRE(all_roots_of_unity(cyclotomic(12)));
    REQUIRE(all_roots_of_unity(cyclotomic(105)));
    REQUIRE(!all_roots_of_unity(RatPoly::from_ints({2, 0, 1})));
    REQUIRE_THROWS_AS(all_roots_of_unity(RatPoly::from_ints({1, 2})), std::invalid_argument);
    REQUIRE_THROWS_AS(all_roots_of_unity(RatPoly({Rat(1, 2), Rat(1)})), std::invalid_argument);
}

TEST_CASE("random cyclotomic products are detected") {
    Rng rng(808);
    for (int i = 0; i < 40; ++i) {
        RatPoly f = RatPoly::constant(1);
        long deg = 0;
        while (deg < 20) {
            long n = rng.int_in(1, 40);
            if (euler_phi(n) + deg > 24) break;
            f = f * cyclotomic(n);
            deg = f.degree();
        }
        REQUIRE(all_roots_of_unity(f));
    }
}

TEST_CASE("cyclotomic values at -1") {
    REQUIRE(cyclotomic_minus_one(1) == -2);
    REQUIRE(cyclotomic_minus_one(2) == 0);
    REQUIRE(cyclotomic_minus_one(8) == 2);
    REQUIRE(cyclotomic_minus_one(12) == 1);

    // exact closed form: -2 at 1, 0 at 2, 2 at 2^e (e > 1), p at 2 p^e for an
    // odd prime p, and 1 otherwise. (Note the 2 p^e case: phi_6(-1) = 3.)
    for (long n = 1; n <= 400; ++n) {
        BigInt got = cyclotomic_minus_one(n);
        BigInt expect;
        if (n == 1) {
            expect = -2;
        } else if (n == 2) {
            expect = 0;
        } else if ((n & (n - 1)) == 0) {
            expect = 2;
        } else if (n % 2 == 0) {
            auto f = factor_integer(BigInt(n / 2));
            expect = (n / 2) % 2 != 0 && f.size() == 1 ? f.begin()->first : BigInt(1);
        } else {
            expect = 1;
        }
        INFO("n = " << n);
        REQUIRE(got == expect);
    }
}

TEST_CASE("value at -1 of a cyclotomic product matches the per-factor values") {
    Rng rng(909);
    for (int i = 0; i < 200; ++i) {
        RatPoly f = RatPoly::constant(1);
        Rat expected = 1;
        long deg = 0;
        while (true) {
            long n = rng.int_in(1, 60);
            if (euler_phi(n) + deg > 50) break;
            f = f * cyclotomic(n);
            expected *= Rat(cyclotomic_minus_one(n));
            deg = f.degree();
            if (rng.int_in(0, 4) == 0) break;
        }
        REQUIRE(f.eval(-1) == expected);
    }
}

TEST_CASE("forced eigenvalue in the even supersingular case") {
    // phi_2 times cyclotomics of odd order filling degree 22
    RatPoly phi = cyclotomic(2) * cyclotomic(1) * cyclotomic(3) * cyclotomic(3) * cyclotomic(5) *
                  cyclotomic(7) * cyclotomic(9);
    REQUIRE(phi.degree() == 22);
    FrobPolynomial fp{WeilContext{7, 1, 2, 22}, phi};
    SupersingularReport rep = supersingular_forced_eigenvalue(fp, 1);
    REQUIRE(rep.verdict == SupersingularVerdict::kConsistent);

    // no -1 eigenvalue: product of odd-order cyclotomics only
    RatPoly odd = cyclotomic(3) * cyclotomic(5) * cyclotomic(7) * cyclotomic(9) * cyclotomic(15);
    FrobPolynomial fp2{WeilContext{7, 1, 2, odd.degree()}, odd};
    REQUIRE(abs(num(odd.eval(-1))) == 1);
    SupersingularReport rep2 = supersingular_forced_eigenvalue(fp2, 1);
    REQUIRE(rep2.verdict == SupersingularVerdict::kContradiction);

    // hypotheses not met: k even
    FrobPolynomial fp3{WeilContext{7, 2, 2, odd.degree()}, odd};
    REQUIRE(supersingular_forced_eigenvalue(fp3, 1).verdict == SupersingularVerdict::kNotApplicable);
    // hypotheses not met: e even
    REQUIRE(supersingular_forced_eigenvalue(fp, 2).verdict == SupersingularVerdict::kNotApplicable);
    // hypotheses not met: non-constant slope
    REQUIRE(supersingular_forced_eigenvalue(k3_fp(k3_phi1()), 1).verdict == SupersingularVerdict::kNotApplicable);
}

TEST_CASE("odd-dimensional supersingular criterion") {
    RatPoly with = RatPoly::from_ints({1, 0, 1}) * cyclotomic(3) * cyclotomic(6);
    REQUIRE(with.degree() == 6);  // 6 = 2 mod 4
    FrobPolynomial fp{WeilContext{7, 1, 3, 6}, with};
    REQUIRE(odd_dim_supersingular(fp).verdict == SupersingularVerdict::kConsistent);

    RatPoly four = cyclotomic(3) * cyclotomic(6);
    FrobPolynomial fp2{WeilContext{7, 1, 3, 4}, four};
    REQUIRE(odd_dim_supersingular(fp2).verdict == SupersingularVerdict::kNotApplicable);

    RatPoly without = cyclotomic(5) * cyclotomic(1) * cyclotomic(2);
    REQUIRE(without.degree() == 6);
    FrobPolynomial fp3{WeilContext{7, 1, 3, 6}, without};
    REQUIRE(odd_dim_supersingular(fp3).verdict == SupersingularVerdict::kContradiction);

    REQUIRE_THROWS_AS(odd_dim_supersingular(k3_fp(k3_phi1())), std::invalid_argument);
}

TEST_CASE("roots of unity force constant slope zero") {
    Rng rng(111);
    for (int i = 0; i < 40; ++i) {
        RatPoly f = cyclotomic(rng.int_in(1, 30)) * cyclotomic(rng.int_in(1, 30));
        FrobPolynomial fp{WeilContext{5, 1, 2, f.degree()}, f};
        REQUIRE(all_roots_of_unity(f));
        REQUIRE(newton_polygon(f, 5, 1).constant_slope(0));
        REQUIRE(e_from_slopes(fp) == 0);
    }
}
