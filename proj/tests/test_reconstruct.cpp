#include "weilcheck/weilcheck.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace weilcheck;
using namespace testdata;

TEST_CASE("middle traces from point counts") {
    std::vector<Rat> k3 = middle_traces(k3_descriptor());
    REQUIRE(k3.size() == 10);
    REQUIRE(k3[0] == Rat(10, 7));  // (60 - 1 - 49) / 7

    std::vector<Rat> cubic = middle_traces(cubic_descriptor());
    REQUIRE(cubic.size() == 11);
    REQUIRE(cubic[0] == Rat(3, 2));  // (33 - 1 - 2 - 8 - 16) / 4

    // zero-dimensional point: all counts 1, empty ambient
    VarietyDescriptor pt;
    pt.p = 5;
    pt.k = 1;
    pt.d = 0;
    pt.middle_degree = 1;
    pt.point_counts = {1, 1, 1};
    REQUIRE(middle_traces(pt) == std::vector<Rat>{1, 1, 1});

    // odd-degree ambient piece enters with a minus sign
    VarietyDescriptor curve;
    curve.p = 5;
    curve.k = 1;
    curve.d = 2;
    curve.middle_degree = 2;
    curve.point_counts = {30};
    curve.ambient = {{0, 1, false}, {1, 2, true}};
    // 30 - 1 + 2*5 = 39 -> 39/5
    REQUIRE(middle_traces(curve)[0] == Rat(39, 5));
}

TEST_CASE("K3 reconstruction yields exactly the two reference candidates") {
    CandidateSet cs = solve_candidates(22, middle_traces(k3_descriptor()), 1);
    REQUIRE(cs.free_coefficient_count == 0);
    REQUIRE(cs.candidates.size() == 2);
    REQUIRE(cs.candidates[0].sign == 1);
    REQUIRE(cs.candidates[0].phi == k3_phi0());
    REQUIRE(cs.candidates[1].sign == -1);
    REQUIRE(cs.candidates[1].phi == k3_phi1());
}

TEST_CASE("cubic fourfold reconstruction recovers the reference polynomial") {
    CandidateSet cs = solve_candidates(23, middle_traces(cubic_descriptor()), 1);
    REQUIRE(cs.candidates.size() == 1);
    REQUIRE(cs.candidates[0].sign == -1);
    REQUIRE(cs.candidates[0].phi == cubic_phi());
}

TEST_CASE("degree one reconstruction") {
    CandidateSet cs = solve_candidates(1, {Rat(1)}, 1);
    REQUIRE(cs.candidates.size() == 1);
    REQUIRE(cs.candidates[0].phi == RatPoly::from_ints({-1, 1}));
    REQUIRE(cs.candidates[0].sign == -1);
}

TEST_CASE("underdetermined systems report free coefficients") {
    std::vector<Rat> traces = middle_traces(k3_descriptor());
    traces.resize(5);
    CandidateSet cs = solve_candidates(22, traces, 1);
    REQUIRE(cs.candidates.empty());
    // 22 unknowns against 5 Newton rows, 12 reversal rows and the forced root
    REQUIRE(cs.free_coefficient_count == 5);
}

TEST_CASE("inconsistent traces yield an empty candidate set") {
    // p_1 = 5 contradicts a_N = +-1 at degree 1
    CandidateSet cs = solve_candidates(1, {Rat(5)}, 1);
    REQUIRE(cs.candidates.empty());
    REQUIRE(cs.free_coefficient_count == 0);
}

TEST_CASE("multiple survivors is a valid report state") {
    // one trace p_1 = 0 at N = 4 over F_5: both branches solve uniquely
    // (T^4 - 1 and (T^2 - 1)^2), both vanish at -1 and survive vacuously
    VarietyDescriptor vd;
    vd.name = "ambiguous";
    vd.p = 5;
    vd.k = 1;
    vd.d = 2;
    vd.middle_degree = 4;
    vd.point_counts = {26};  // 1 + q^2 + q * 0
    vd.ambient = {{0, 1, false}, {2, 1, false}};
    DisambiguationReport rep = disambiguate(vd);
    REQUIRE(rep.candidates.size() == 2);
    REQUIRE(rep.candidates[0].phi == RatPoly::from_ints({1, 0, -2, 0, 1}));
    REQUIRE(rep.candidates[1].phi == RatPoly::from_ints({-1, 0, 0, 0, 1}));
    REQUIRE(rep.survivor_count == 2);
    REQUIRE(!rep.unique_survivor.has_value());
    for (const auto& c : rep.candidates) {
        REQUIRE(c.survives);
        REQUIRE(c.main.kind == VerdictKind::kVacuous);
    }
}

TEST_CASE("extra traces act as consistency checks") {
    // feed 14 correct traces of the true K3 polynomial: still exactly two candidates
    std::vector<Rat> traces = power_sums(k3_phi1(), 14);
    CandidateSet cs = solve_candidates(22, traces, 1);
    bool found = false;
    for (const auto& c : cs.candidates) found = found || c.phi == k3_phi1();
    REQUIRE(found);

    // corrupt the last trace: the minus branch dies, no candidate equals phi1
    traces[13] += 1;
    CandidateSet bad = solve_candidates(22, traces, 1);
    for (const auto& c : bad.candidates) REQUIRE(c.phi != k3_phi1());
}

TEST_CASE("candidates reproduce the input traces exactly") {
    std::vector<Rat> traces = middle_traces(k3_descriptor());
    CandidateSet cs = solve_candidates(22, traces, 1);
    for (const auto& c : cs.candidates) REQUIRE(power_sums(c.phi, 10) == traces);
}

TEST_CASE("candidate point-count prediction round trip") {
    VarietyDescriptor vd = k3_descriptor();
    CandidateSet cs = solve_candidates(22, middle_traces(vd), 1);
    for (const auto& c : cs.candidates)
        REQUIRE(predict_point_counts(vd, c.phi, 10) == vd.point_counts);

    VarietyDescriptor cd = cubic_descriptor();
    CandidateSet cc = solve_candidates(23, middle_traces(cd), 1);
    REQUIRE(predict_point_counts(cd, cc.candidates[0].phi, 11) == cd.point_counts);
}

TEST_CASE("round trip: reciprocal polynomials with a forced root are recovered") {
    Rng rng(1234);
    int done = 0;
    while (done < 60) {
        long extra = rng.int_in(0, 2);
        int sign = rng.int_in(0, 1) ? 1 : -1;
        long half = rng.int_in(1, 6);
        RatPoly f = random_reciprocal(rng, 2 * half, sign);
        for (long i = 0; i < extra + (sign == 1 ? 1 : 0); ++i) f = f * RatPoly::from_ints({-1, 1});
        long n = f.degree();
        if (n > 16 || f[0] == 0) continue;
        long rho = root_multiplicity(f, 1);
        // ceil(N/2) - ceil(rho/2) traces determine the polynomial; the
        // functional equation makes every second derivative condition at 1
        // redundant, so rho conditions only carry ceil(rho/2) of rank
        long m = (n + 1) / 2 - (rho + 1) / 2;
        if (m < 1) continue;
        std::vector<Rat> traces = power_sums(f, m);
        CandidateSet cs = solve_candidates(n, traces, rho);
        bool found = false;
        for (const auto& c : cs.candidates) found = found || c.phi == f;
        INFO("degree " << n << " rho " << rho << " sign " << sign);
        REQUIRE(found);
        ++done;
    }
}

TEST_CASE("disambiguation pipeline on the K3 dataset") {
    DisambiguationReport rep = disambiguate(k3_descriptor());
    REQUIRE(rep.candidates.size() == 2);
    REQUIRE(rep.survivor_count == 1);
    REQUIRE(rep.unique_survivor.has_value());
    const CandidateReport& winner = rep.candidates[*rep.unique_survivor];
    REQUIRE(winner.sign == -1);
    REQUIRE(winner.phi == k3_phi1());
    REQUIRE(winner.main.kind == VerdictKind::kVacuous);

    const CandidateReport& loser = rep.candidates[0];
    REQUIRE(loser.sign == 1);
    REQUIRE(!loser.survives);
    REQUIRE(loser.main.kind == VerdictKind::kFail);
    REQUIRE(loser.main.tested_value.representative() == 15);
    REQUIRE(loser.main.phi_at_test_point == Rat(60, 7));
    // the refined test fails as well, with the same obstruction
    REQUIRE(loser.main2.has_value());
    REQUIRE(loser.main2->kind == VerdictKind::kFail);
}

TEST_CASE("disambiguation pipeline on the cubic fourfold dataset") {
    DisambiguationReport rep = disambiguate(cubic_descriptor());
    REQUIRE(rep.survivor_count == 1);
    const CandidateReport& winner = rep.candidates[*rep.unique_survivor];
    REQUIRE(winner.phi == cubic_phi());
    REQUIRE(winner.main.kind == VerdictKind::kPass);
    REQUIRE(winner.main2.has_value());
    REQUIRE(winner.main2->kind == VerdictKind::kPass);
    REQUIRE(winner.main2->char_two_warning);
    REQUIRE(winner.main2->tested_quantity == Rat(ipow(2, 24)));
    // every surviving candidate passes the trivial-root check
    REQUIRE(winner.trivial_root.pass);
}

TEST_CASE("descriptor validation") {
    VarietyDescriptor vd = k3_descriptor();
    vd.middle_degree = 21;
    REQUIRE_THROWS_AS(vd.resolve_degree(), std::invalid_argument);

    VarietyDescriptor none;
    none.p = 3;
    none.k = 1;
    none.d = 2;
    none.point_counts = {1};
    REQUIRE_THROWS_AS(none.resolve_degree(), std::invalid_argument);

    // odd-dimensional odd-k normalization is irrational
    VarietyDescriptor odd;
    odd.p = 3;
    odd.k = 1;
    odd.d = 1;
    odd.middle_degree = 2;
    odd.point_counts = {4};
    REQUIRE_THROWS_AS(middle_traces(odd), std::domain_error);
}
