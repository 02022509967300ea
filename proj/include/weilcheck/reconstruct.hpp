#pragma once

// From point counts to candidate polynomials: Lefschetz trace extraction,
// Newton's identities plus the functional-equation symmetry and the forced
// unit root assembled into one exact linear system per sign, and the
// disambiguation pipeline that runs every applicable check on the survivors.

#include "weilcheck/linalg.hpp"
#include "weilcheck/parity.hpp"
#include "weilcheck/poly.hpp"
#include "weilcheck/weil.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilcheck {

struct AmbientEigenvalue {
    long weight_exponent = 0;  // contributes q^{a n} to #X(F_{q^n})
    long multiplicity = 1;
    bool odd_degree = false;   // cohomological degree parity: odd enters the Lefschetz sum negatively
};

struct VarietyDescriptor {
    std::string name;
    BigInt p;
    long k = 1;
    long d = 0;
    std::optional<long> middle_degree;       // N; optional when hodge is given
    std::optional<HodgeVector> hodge;
    std::vector<BigInt> point_counts;        // #X(F_{q^n}), n = 1..M
    std::vector<AmbientEigenvalue> ambient;  // all non-middle Frobenius eigenvalues
    long forced_unit_root_multiplicity = 1;  // rho

    long resolve_degree() const {
        if (hodge) {
            long n = hodge->sum();
            if (middle_degree && *middle_degree != n)
                throw std::invalid_argument("VarietyDescriptor: N does not match the Hodge numbers");
            return n;
        }
        if (!middle_degree) throw std::invalid_argument("VarietyDescriptor: need N or Hodge numbers");
        return *middle_degree;
    }
};

// normalized middle power sums p_n = (-1)^d [#X - ambient part] / q^{n d/2}
inline std::vector<Rat> middle_traces(const VarietyDescriptor& vd) {
    if (vd.point_counts.empty()) throw std::invalid_argument("middle_traces: no point counts");
    std::vector<Rat> traces;
    Rat q{ipow(vd.p, static_cast<unsigned long>(vd.k))};
    for (std::size_t n1 = 0; n1 < vd.point_counts.size(); ++n1) {
        long n = static_cast<long>(n1) + 1;
        if ((vd.k * n * vd.d) % 2 != 0)
            throw std::domain_error("middle_traces: non-rational normalization q^{n d/2}");
        Rat acc{vd.point_counts[n1]};
        for (const auto& amb : vd.ambient) {
            Rat term = Rat(amb.multiplicity) * rpow(q, amb.weight_exponent * n);
            acc -= amb.odd_degree ? -term : term;
        }
        if (vd.d % 2 != 0) acc = -acc;
        traces.push_back(acc / rpow(q, n * vd.d / 2));
    }
    return traces;
}

struct Candidate {
    int sign;  // functional equation sign
    RatPoly phi;
};

struct CandidateSet {
    std::vector<Candidate> candidates;  // ordered by sign (+1 first), deterministic
    long free_coefficient_count = 0;    // max over signs; > 0 means underdetermined
};

namespace detail {

// rows over unknowns a_1..a_N (a_r = coefficient of T^{N-r}; a_0 = 1)
inline void newton_rows(long N, const std::vector<Rat>& p, RatMat& rows, std::vector<Rat>& rhs) {
    long M = static_cast<long>(p.size());
    for (long n = 1; n <= M; ++n) {
        std::vector<Rat> row(static_cast<std::size_t>(N), Rat(0));
        if (n <= N) {
            for (long i = 1; i < n; ++i) row[static_cast<std::size_t>(i - 1)] += p[static_cast<std::size_t>(n - i - 1)];
            row[static_cast<std::size_t>(n - 1)] += Rat(n);
        } else {
            for (long j = 1; j <= N; ++j) row[static_cast<std::size_t>(j - 1)] += p[static_cast<std::size_t>(n - j - 1)];
        }
        rows.push_back(std::move(row));
        rhs.push_back(-p[static_cast<std::size_t>(n - 1)]);
    }
}

}  // namespace detail

inline CandidateSet solve_candidates(long N, const std::vector<Rat>& traces, long rho) {
    if (N < 1) throw std::invalid_argument("solve_candidates: N must be positive");
    if (rho < 0) throw std::invalid_argument("solve_candidates: rho must be non-negative");
    const long M = static_cast<long>(traces.size());
    CandidateSet out;

    for (int sign : {+1, -1}) {
        RatMat rows;
        std::vector<Rat> rhs;
        detail::newton_rows(N, traces, rows, rhs);

        // coefficient reversal a_{N-r} = sign * a_r (r = 0 pins a_N = sign)
        for (long r = 0; 2 * r <= N; ++r) {
            std::vector<Rat> row(static_cast<std::size_t>(N), Rat(0));
            Rat b = 0;
            row[static_cast<std::size_t>(N - r - 1)] += 1;
            if (r == 0) {
                b = Rat(sign);
            } else {
                row[static_cast<std::size_t>(r - 1)] -= Rat(sign);
            }
            bool nontrivial = b != 0;
            for (const Rat& v : row)
                if (v != 0) nontrivial = true;
            if (nontrivial) {
                rows.push_back(std::move(row));
                rhs.push_back(b);
            }
        }

        // (T-1)^rho divides phi: s-th derivative vanishes at 1, s < rho
        for (long s = 0; s < rho; ++s) {
            std::vector<Rat> row(static_cast<std::size_t>(N), Rat(0));
            Rat b = 0;
            for (long r = 0; r <= N; ++r) {
                Rat ff = 1;  // falling factorial (N-r)(N-r-1)...(N-r-s+1)
                for (long u = 0; u < s; ++u) ff *= Rat(N - r - u);
                if (r == 0)
                    b -= ff;
                else
                    row[static_cast<std::size_t>(r - 1)] += ff;
            }
            rows.push_back(std::move(row));
            rhs.push_back(b);
        }

        LinearSolution sol = solve_linear(std::move(rows), std::move(rhs), static_cast<std::size_t>(N));
        if (sol.kind == LinearSolution::Kind::kInconsistent) continue;
        if (sol.kind == LinearSolution::Kind::kUnderdetermined) {
            out.free_coefficient_count = std::max(out.free_coefficient_count, sol.free_count);
            continue;
        }
        std::vector<Rat> coeffs(static_cast<std::size_t>(N) + 1);
        coeffs[static_cast<std::size_t>(N)] = 1;
        for (long r = 1; r <= N; ++r) coeffs[static_cast<std::size_t>(N - r)] = sol.values[static_cast<std::size_t>(r - 1)];
        RatPoly phi{std::move(coeffs)};

        // belt and braces: the solved candidate must reproduce every input
        // trace, carry the requested sign and the forced root
        if (power_sums(phi, M) != traces) continue;
        FeSign fes = functional_equation_sign(phi);
        if ((sign == 1 && fes != FeSign::kPlus) || (sign == -1 && fes != FeSign::kMinus)) continue;
        if (root_multiplicity(phi, 1) < rho) continue;
        out.candidates.push_back({sign, std::move(phi)});
    }
    return out;
}

struct CandidateReport {
    int sign = 0;
    RatPoly phi;
    WeilBoundsReport bounds;
    LUnitsReport l_units;
    TrivialRootReport trivial_root;
    RealRootReport real_roots;
    std::optional<KatzReport> katz;
    ParityVerdict main;
    std::optional<long> e_value;
    std::string e_source;
    std::optional<ParityVerdict> main2;
    bool survives = false;
    std::vector<std::string> failures;
};

struct DisambiguationReport {
    std::vector<Rat> traces;
    long middle_degree = 0;
    long free_coefficient_count = 0;
    std::vector<CandidateReport> candidates;
    std::optional<std::size_t> unique_survivor;  // index into candidates
    long survivor_count = 0;
};

inline CandidateReport run_candidate_checks(const FrobPolynomial& fp, int sign,
                                            const std::optional<HodgeVector>& hodge, double tol = 1e-6) {
    CandidateReport rep;
    rep.sign = sign;
    rep.phi = fp.phi;
    rep.bounds = check_weil_bounds(fp, tol);
    if (!rep.bounds.exact_pass) rep.failures.push_back("weil_bounds");
    rep.l_units = check_l_units(fp);
    if (!rep.l_units.pass) rep.failures.push_back("l_units");
    rep.real_roots = check_real_root_multiplicity(fp);
    if (rep.real_roots.theorem_applies && !rep.real_roots.both_even) rep.failures.push_back("real_root_multiplicity");
    if (fp.ctx.d % 2 == 0) {
        rep.trivial_root = check_trivial_root(fp);
        if (!rep.trivial_root.pass) rep.failures.push_back("trivial_root");
        rep.main = test_main(fp);
        if (rep.main.failed()) rep.failures.push_back("parity_main");
        if (hodge) {
            rep.katz = check_katz(fp, *hodge);
            if (!rep.katz->pass) rep.failures.push_back("katz");
            rep.e_value = e_from_hodge(*hodge, fp.ctx.d);
            rep.e_source = "hodge";
        } else {
            try {
                rep.e_value = e_from_slopes(fp);
                rep.e_source = "slopes";
            } catch (const std::exception&) {
                rep.e_source = "unavailable";
            }
        }
        if (rep.e_value) {
            rep.main2 = test_main2(fp, *rep.e_value);
            if (rep.main2->failed()) rep.failures.push_back("parity_main2");
        }
    }
    rep.survives = rep.failures.empty();
    return rep;
}

inline DisambiguationReport disambiguate(const VarietyDescriptor& vd, double tol = 1e-6) {
    DisambiguationReport rep;
    rep.middle_degree = vd.resolve_degree();
    rep.traces = middle_traces(vd);
    CandidateSet cs = solve_candidates(rep.middle_degree, rep.traces, vd.forced_unit_root_multiplicity);
    rep.free_coefficient_count = cs.free_coefficient_count;

    for (const Candidate& cand : cs.candidates) {
        WeilContext ctx{vd.p, vd.k, vd.d, rep.middle_degree};
        FrobPolynomial fp{ctx, cand.phi};
        rep.candidates.push_back(run_candidate_checks(fp, cand.sign, vd.hodge, tol));
    }
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
        if (rep.candidates[i].survives) {
            ++rep.survivor_count;
            rep.unique_survivor = i;
        }
    }
    if (rep.survivor_count != 1) rep.unique_survivor.reset();
    return rep;
}

// the candidate's own point-count prediction, for round-trip checks
inline std::vector<BigInt> predict_point_counts(const VarietyDescriptor& vd, const RatPoly& phi, long m) {
    std::vector<Rat> p = power_sums(phi, m);
    Rat q{ipow(vd.p, static_cast<unsigned long>(vd.k))};
    std::vector<BigInt> counts;
    for (long n = 1; n <= m; ++n) {
        Rat acc = rpow(q, n * vd.d / 2) * p[static_cast<std::size_t>(n - 1)];
        if (vd.d % 2 != 0) acc = -acc;
        for (const auto& amb : vd.ambient) {
            Rat term = Rat(amb.multiplicity) * rpow(q, amb.weight_exponent * n);
            acc += amb.odd_degree ? -term : term;
        }
        if (den(acc) != 1) throw std::domain_error("predict_point_counts: non-integral count");
        counts.push_back(num(acc));
    }
    return counts;
}

}  // namespace weilcheck
