#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gls {

// Closed interval [lo, hi] on the real line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }

    static Interval centered(double center, double radius) {
        return Interval(center - radius, center + radius);
    }

    double center() const { return 0.5 * (lo + hi); }
    double length() const { return hi - lo; }

    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
    bool contains(const Interval& o, double tol = 0.0) const {
        return o.lo >= lo - tol && o.hi <= hi + tol;
    }
    bool strictly_contains(const Interval& o) const { return o.lo > lo && o.hi < hi; }

    // slack by which `o` sits inside this interval (negative => not contained)
    double containment_slack(const Interval& o) const {
        return std::min(o.lo - lo, hi - o.hi);
    }

    bool intersects(const Interval& o) const { return o.lo <= hi && o.hi >= lo; }

    Interval intersect(const Interval& o) const {
        double a = std::max(lo, o.lo), b = std::min(hi, o.hi);
        if (a > b) throw std::runtime_error("Interval::intersect: empty intersection");
        return Interval(a, b);
    }

    Interval clip(double a, double b) const {
        double lo2 = std::max(lo, a), hi2 = std::min(hi, b);
        if (lo2 > hi2) throw std::runtime_error("Interval::clip: empty result");
        return Interval(lo2, hi2);
    }

    // image under x -> -x
    Interval mirrored() const { return Interval(-hi, -lo); }
};

// (gamma, eta)-right-hand-side shifting: l_shifted is obtained from l by moving
// both endpoints right by amounts within [gamma, eta].
inline bool verify_rhs_shift(const Interval& l, const Interval& l_shifted, double gamma,
                             double eta, double tol = 0.0) {
    const double dlo = l_shifted.lo - l.lo;
    const double dhi = l_shifted.hi - l.hi;
    return dlo >= gamma - tol && dlo <= eta + tol && dhi >= gamma - tol && dhi <= eta + tol;
}

} // namespace gls
