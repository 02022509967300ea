#pragma once

// Deterministic Miller-Rabin. The fixed witness set decides primality
// correctly for all n < 3.317e24; inputs beyond that additionally get a
// batch of witnesses derived from n itself (still deterministic).

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>

namespace weilcheck::detail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::powm;

inline bool mr_witness(const cpp_int& a, const cpp_int& d, unsigned r, const cpp_int& n) {
    cpp_int x = powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

inline bool miller_rabin_is_prime(const cpp_int& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    cpp_int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned p : small)
        if (mr_witness(p, d, r, n)) return false;
    static const cpp_int deterministic_bound = cpp_int("3317044064679887385961981");
    if (n < deterministic_bound) return true;
    // deterministic extra rounds seeded from n
    cpp_int a = 40 + n % 1009;
    for (int i = 0; i < 24; ++i) {
        if (mr_witness(a, d, r, n)) return false;
        a = a * a + 1 + i;
        if (a >= n - 2) a = a % (n - 3) + 2;
    }
    return true;
}

}  // namespace weilcheck::detail
