#pragma once

// Randomized exact verifier for the lattice-pairing parity lemmas: an
// orthogonal map sigma built by a Cayley transform from a pairing-skew
// matrix, exact local lengths through elementary divisors, and the two
// parity identities. Also the real-quadratic-field demonstrator
// N(1 - eps) = 2 - tr(eps) for norm-one units.

#include "weilcheck/factor.hpp"
#include "weilcheck/linalg.hpp"
#include "weilcheck/numeric.hpp"
#include "weilcheck/rng.hpp"
#include "weilcheck/smith.hpp"
#include "weilcheck/squareclass.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace weilcheck {

struct LatticeInstance {
    long n = 0;
    BigInt p;
    RatMat gram;    // symmetric, det a p-unit
    RatMat sigma;   // sigma^T G sigma = G, exactly
    std::uint64_t seed = 0;
};

inline bool is_pairing_orthogonal(const LatticeInstance& inst) {
    return mat_mul(mat_mul(mat_transpose(inst.sigma), inst.gram), inst.sigma) == inst.gram;
}

// sigma = (I + X)(I - X)^{-1} with X = G^{-1} A, A skew. Such sigma never
// has eigenvalue -1; eigenvalue 1 is excluded by requiring det X != 0.
inline LatticeInstance random_orthogonal(long n, const BigInt& p, std::uint64_t seed, int max_retries = 100) {
    if (n < 1) throw std::invalid_argument("random_orthogonal: rank must be positive");
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("random_orthogonal: p must be an odd prime");
    Rng rng(seed);
    long amp = (p * p).convert_to<long>();

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        RatMat g(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j <= i; ++j) {
                Rat v{rng.int_in(-9, 9)};
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
            }
        Rat dg = mat_det(g);
        if (dg == 0 || num(dg) % p == 0) continue;

        RatMat a(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < i; ++j) {
                Rat v{rng.int_in(-amp, amp)};
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
            }
        RatMat x = mat_mul(*mat_inverse(g), a);
        if (mat_det(x) == 0) continue;  // would put 1 in the spectrum of sigma
        RatMat imx = mat_sub(identity_mat(static_cast<std::size_t>(n)), x);
        if (mat_det(imx) == 0) continue;
        RatMat ipx = mat_add(identity_mat(static_cast<std::size_t>(n)), x);
        LatticeInstance inst{n, p, std::move(g), mat_mul(ipx, *mat_inverse(imx)), seed};
        if (!is_pairing_orthogonal(inst)) throw std::logic_error("random_orthogonal: Cayley output not orthogonal");
        return inst;
    }
    throw std::runtime_error("random_orthogonal: generation failed after retries");
}

struct ParityWitness {
    long ell_sigma = 0;                     // length of (sigma(H) + H)/H
    std::optional<long> nu_det_1_minus;     // nu_p(det(1 - sigma)); needs 1 outside the spectrum
    std::optional<long> nu_det_1_plus;      // nu_p(det(1 + sigma)); needs -1 outside the spectrum
    std::optional<long> ell_tors;           // length of [H / H cap (1 - sigma)H]_tors
};

// each spectral side is computed when its precondition holds; asking for a
// side whose operator is singular is the caller's error
inline ParityWitness parity_witness(const LatticeInstance& inst) {
    std::size_t n = static_cast<std::size_t>(inst.n);
    RatMat one_minus = mat_sub(identity_mat(n), inst.sigma);
    RatMat one_plus = mat_add(identity_mat(n), inst.sigma);
    ParityWitness w;
    w.ell_sigma = lattice_index_over(inst.sigma, inst.p);
    if (mat_det(one_minus) != 0) {
        long nu = 0, tors = 0;
        for (long s : local_smith_lengths(one_minus, inst.p)) {
            nu += s;
            if (s > 0) tors += s;
        }
        w.nu_det_1_minus = nu;
        w.ell_tors = tors;
    }
    if (mat_det(one_plus) != 0) {
        long nu = 0;
        for (long s : local_smith_lengths(one_plus, inst.p)) nu += s;
        w.nu_det_1_plus = nu;
    }
    return w;
}

// ell(sigma(H) + H / H) + nu(det(1 - sigma)) is even
inline bool assert_cor_det(const LatticeInstance& inst) {
    ParityWitness w = parity_witness(inst);
    if (!w.nu_det_1_minus) throw std::invalid_argument("assert_cor_det: 1 is an eigenvalue of sigma");
    return (w.ell_sigma + *w.nu_det_1_minus) % 2 == 0;
}

enum class HilfResult { kHolds, kViolated, kNotApplicable };

// nu(det(1 + sigma)) = N nu(2) mod 2, under the four evenness hypotheses
// on sigma and sigma^2
inline HilfResult assert_hilf(const LatticeInstance& inst) {
    std::size_t n = static_cast<std::size_t>(inst.n);
    RatMat sigma2 = mat_mul(inst.sigma, inst.sigma);
    RatMat one_minus = mat_sub(identity_mat(n), inst.sigma);
    RatMat one_minus2 = mat_sub(identity_mat(n), sigma2);
    RatMat one_plus = mat_add(identity_mat(n), inst.sigma);
    if (mat_det(one_plus) == 0) return HilfResult::kNotApplicable;
    if (mat_det(one_minus) == 0 || mat_det(one_minus2) == 0) return HilfResult::kNotApplicable;

    long h1 = lattice_index_over(inst.sigma, inst.p);
    long h2 = lattice_index_over(sigma2, inst.p);
    long h3 = lattice_index_under(one_minus, inst.p);
    long h4 = lattice_index_under(one_minus2, inst.p);
    if (h1 % 2 || h2 % 2 || h3 % 2 || h4 % 2) return HilfResult::kNotApplicable;

    long nu1p = 0;
    for (long s : local_smith_lengths(one_plus, inst.p)) nu1p += s;
    long rhs = inst.n * valuation(Rat(2), inst.p).value;
    return (nu1p - rhs) % 2 == 0 ? HilfResult::kHolds : HilfResult::kViolated;
}

struct SweepSummary {
    long instances = 0;
    long cor_det_holds = 0;
    long cor_det_violations = 0;
    long hilf_holds = 0;
    long hilf_violations = 0;
    long hilf_not_applicable = 0;
    long generation_failures = 0;
    std::vector<std::uint64_t> failing_seeds;  // expected empty
};

inline SweepSummary pairing_sweep(const std::vector<BigInt>& primes, const std::vector<long>& ranks,
                                  long trials, std::uint64_t master_seed) {
    for (const BigInt& p : primes)
        if (p == 2 || !is_prime(p))
            throw std::invalid_argument("pairing_sweep: primes must be odd (characteristic 2 is excluded)");
    SweepSummary s;
    std::uint64_t task = 0;
    for (const BigInt& p : primes)
        for (long n : ranks)
            for (long t = 0; t < trials; ++t) {
                std::uint64_t seed = Rng::mix(master_seed, ++task);
                LatticeInstance inst;
                try {
                    inst = random_orthogonal(n, p, seed);
                } catch (const std::runtime_error&) {
                    ++s.generation_failures;
                    continue;
                }
                ++s.instances;
                if (assert_cor_det(inst)) {
                    ++s.cor_det_holds;
                } else {
                    ++s.cor_det_violations;
                    s.failing_seeds.push_back(seed);
                }
                switch (assert_hilf(inst)) {
                    case HilfResult::kHolds: ++s.hilf_holds; break;
                    case HilfResult::kViolated:
                        ++s.hilf_violations;
                        s.failing_seeds.push_back(seed);
                        break;
                    case HilfResult::kNotApplicable: ++s.hilf_not_applicable; break;
                }
            }
    return s;
}

// Parallel sweep: one task per (prime, rank) cell with a seed derived from
// the cell index, so the summary does not depend on the thread count.
inline SweepSummary pairing_sweep_parallel(const std::vector<BigInt>& primes, const std::vector<long>& ranks,
                                           long trials, std::uint64_t master_seed, long nthreads) {
    for (const BigInt& p : primes)
        if (p == 2 || !is_prime(p))
            throw std::invalid_argument("pairing_sweep: primes must be odd (characteristic 2 is excluded)");
    struct Cell {
        BigInt p;
        long n;
    };
    std::vector<Cell> cells;
    for (const BigInt& p : primes)
        for (long n : ranks) cells.push_back({p, n});
    std::vector<SweepSummary> partial(cells.size());
    std::atomic<std::size_t> next{0};
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<long>(nthreads, static_cast<long>(cells.size()));
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            std::uint64_t cell_seed = Rng::mix(master_seed, static_cast<std::uint64_t>(i) + 1);
            partial[i] = pairing_sweep({cells[i].p}, {cells[i].n}, trials, cell_seed);
        }
    };
    std::vector<std::thread> pool;
    for (long t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SweepSummary total;
    for (const auto& s : partial) {
        total.instances += s.instances;
        total.cor_det_holds += s.cor_det_holds;
        total.cor_det_violations += s.cor_det_violations;
        total.hilf_holds += s.hilf_holds;
        total.hilf_violations += s.hilf_violations;
        total.hilf_not_applicable += s.hilf_not_applicable;
        total.generation_failures += s.generation_failures;
        total.failing_seeds.insert(total.failing_seeds.end(), s.failing_seeds.begin(), s.failing_seeds.end());
    }
    std::sort(total.failing_seeds.begin(), total.failing_seeds.end());
    return total;
}

// ---- real quadratic fields ----

struct QuadraticUnitReport {
    long d = 0;              // the radicand
    BigInt disc;
    BigInt unit_a, unit_b;   // fundamental unit (a + b sqrt(d)) / denom
    int unit_denom = 1;
    int unit_norm = 1;
    Rat eps_trace;           // trace of the norm-(+1) unit eps
    BigInt value;            // 2 - tr(eps) = N(1 - eps)
    SquareClass value_class;
    bool conforms = false;   // squarefree part = sign * 2^{0,1} * primes dividing disc
};

namespace detail {

// fundamental solution of x^2 - D y^2 = +-1 by the continued fraction of sqrt(D)
inline void pell_fundamental(const BigInt& d_rad, BigInt& x, BigInt& y, int& norm) {
    BigInt a0 = isqrt_floor(d_rad);
    BigInt m = 0, den_cf = 1, a = a0;
    BigInt h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (true) {
        BigInt v = h * h - d_rad * k * k;
        if (v == 1 || v == -1) {
            x = h;
            y = k;
            norm = v == 1 ? 1 : -1;
            return;
        }
        m = den_cf * a - m;
        den_cf = (d_rad - m * m) / den_cf;
        a = (a0 + m) / den_cf;
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

inline BigInt icbrt(const BigInt& n) {
    if (n <= 0) return 0;
    BigInt lo = 0, hi = 1;
    while (hi * hi * hi <= n) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (mid * mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace detail

// fundamental unit of Q(sqrt(d)): the Pell unit of Z[sqrt(d)], refined to a
// half-integer cube root in the maximal order when d = 1 mod 4
inline void fundamental_unit(long d, BigInt& a, BigInt& b, int& denom, int& norm) {
    BigInt x, y;
    detail::pell_fundamental(d, x, y, norm);
    a = x;
    b = y;
    denom = 1;
    if (d % 4 != 1) return;
    // the Pell unit may be the cube of a unit (t + s sqrt(d))/2: its trace t
    // satisfies t^3 - 3 n t = 2x
    for (int n : {1, -1}) {
        BigInt guess = detail::icbrt(2 * x);
        for (BigInt t = guess > 2 ? guess - 2 : BigInt(1); t <= guess + 2; ++t) {
            if (t * t * t - 3 * n * t != 2 * x) continue;
            BigInt bb = t * t - 4 * n;
            if (bb % d != 0) continue;
            BigInt s2 = bb / d;
            if (!is_perfect_square(s2)) continue;
            a = t;
            b = isqrt_floor(s2);
            denom = 2;
            norm = n;
            return;
        }
    }
}

inline QuadraticUnitReport quadratic_unit_demo(long d) {
    if (d <= 1) throw std::invalid_argument("quadratic_unit_demo: d must exceed 1");
    for (const auto& [prime, e] : factor_integer(BigInt(d)))
        if (e > 1) throw std::invalid_argument("quadratic_unit_demo: d must be squarefree");

    QuadraticUnitReport rep;
    rep.d = d;
    rep.disc = (d % 4 == 1) ? BigInt(d) : BigInt(4) * d;
    fundamental_unit(d, rep.unit_a, rep.unit_b, rep.unit_denom, rep.unit_norm);

    Rat t0 = Rat(2 * rep.unit_a, rep.unit_denom);  // trace of the fundamental unit
    rep.eps_trace = rep.unit_norm == -1 ? t0 * t0 + 2 : t0;  // square when the norm is -1
    Rat val = Rat(2) - rep.eps_trace;
    if (den(val) != 1) throw std::logic_error("quadratic_unit_demo: non-integral trace");
    rep.value = num(val);
    rep.value_class = square_class(Rat(rep.value));

    rep.conforms = true;
    if (rep.value == 0) return rep;
    for (const auto& [prime, e] : factor_integer(rep.value_class.representative())) {
        if (prime == 2) continue;  // an extra factor 2 (and the sign) is allowed
        if (rep.disc % prime != 0) rep.conforms = false;
    }
    return rep;
}

}  // namespace weilcheck
