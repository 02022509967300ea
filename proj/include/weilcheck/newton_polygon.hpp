#pragma once

// Newton polygons with respect to nu_q, q = p^k: the lower convex hull of
// the points (r, nu_q(c_r)). Segment slopes are the negatives of the root
// valuations; coefficients with negative valuation (p in a denominator)
// are supported, since normalized Weil polynomials have them.

#include "weilcheck/numeric.hpp"
#include "weilcheck/poly.hpp"

#include <stdexcept>
#include <vector>

namespace weilcheck {

struct PolygonSegment {
    Rat slope;
    long length;  // horizontal length
};

struct NewtonPolygon {
    std::vector<PolygonSegment> segments;  // slopes strictly increasing

    long total_length() const {
        long n = 0;
        for (const auto& s : segments) n += s.length;
        return n;
    }
    // sum of slope * length == nu_q(leading) - nu_q(constant)
    Rat slope_mass() const {
        Rat m = 0;
        for (const auto& s : segments) m += s.slope * Rat(s.length);
        return m;
    }
    bool constant_slope(const Rat& s) const {
        return segments.size() == 1 ? segments[0].slope == s : segments.empty();
    }
};

inline NewtonPolygon newton_polygon(const RatPoly& f, const BigInt& p, long k) {
    if (f.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    if (f[0] == 0)
        throw std::invalid_argument("newton_polygon: zero constant term (factor out T first)");
    if (!is_prime(p)) throw std::invalid_argument("newton_polygon: p must be prime");
    if (k < 1) throw std::invalid_argument("newton_polygon: k must be positive");

    struct Pt {
        long r;
        Rat y;
    };
    std::vector<Pt> hull;
    for (long r = 0; r <= f.degree(); ++r) {
        if (f[r] == 0) continue;
        Pt pt{r, *valuation_q(f[r], p, k)};
        // keep the hull lower-convex: pop while the previous point lies on or
        // above the segment from hull[-2] to pt
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            if ((b.y - a.y) * Rat(pt.r - a.r) >= (pt.y - a.y) * Rat(b.r - a.r))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        long len = hull[i + 1].r - hull[i].r;
        np.segments.push_back({(hull[i + 1].y - hull[i].y) / Rat(len), len});
    }
    return np;
}

}  // namespace weilcheck
