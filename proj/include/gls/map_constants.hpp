#pragma once

/*
 * map_constants.hpp — the constant pipeline attached to a certified map.
 *
 * η0 is the largest trapping radius such that for every interval J = [-η, 0]
 * or [0, η] with η ≤ η0 and every μ ∈ {0, μ0/2, μ0}, the first three iterated
 * images of J \ {0} under α_μ lie in [0.8, 1] modulo the symmetry
 * α(-x) = -α(x) (the mirrored interval's images lie in [-1, -0.8]).
 *
 * From η0 and a target accuracy ε the shadowing constants are
 *
 *     ε1 = min{3 μ0, η0/8, ε/64},   δ = ε1/100,   μ̂ = ε1/3.
 */

#include <cmath>
#include <stdexcept>

#include "gls/interval.hpp"
#include "gls/map_spec.hpp"

namespace gls {

struct MapConstants {
    double epsilon = 0.0;  // target shadowing accuracy
    double eta0 = 0.0;     // interval-trapping radius
    double epsilon1 = 0.0; // min{3 mu0, eta0/8, epsilon/64}
    double delta = 0.0;    // epsilon1/100
    double mu_hat = 0.0;   // epsilon1/3, the shift used by the solver
};

namespace detail {

// J = [-eta, 0]: the three iterated images under α_μ stay in [0.8, 1].
// α_μ is increasing on each branch, so images are endpoint intervals; the
// first image is [α_μ(-eta), 1] (closure of the one-sided limit at 0-).
inline bool eta_property_holds(const LorenzMapSpec& spec, double eta, double mu) {
    double lo = alpha_branch(spec.alpha, -1, -eta, mu);
    double hi = 1.0;
    for (int i = 0; i < 3; ++i) {
        if (!(lo >= 0.8 && hi <= 1.0)) return false;
        if (i < 2) {
            lo = alpha_branch(spec.alpha, +1, lo, mu);
            hi = alpha_branch(spec.alpha, +1, hi, mu);
        }
    }
    return true;
}

inline bool eta_property_all_mu(const LorenzMapSpec& spec, double eta) {
    // J = [0, eta] mirrors to [-eta, 0] exactly, so one orientation decides;
    // both are still exercised by the test-suite oracle.
    const double mus[3] = {0.0, 0.5 * spec.mu0, spec.mu0};
    for (double mu : mus)
        if (!eta_property_holds(spec, eta, mu)) return false;
    return true;
}

} // namespace detail

// Largest η0 ∈ (0, 1) with the trapping property, located by bisection.
inline double derive_eta0(const LorenzMapSpec& spec) {
    constexpr double kFloor = 1e-6;
    if (!detail::eta_property_all_mu(spec, kFloor))
        throw std::runtime_error(
            "derive_eta0: no eta down to 1e-6 traps the first three images; "
            "condition (3) margin too thin");
    if (detail::eta_property_all_mu(spec, 1.0)) return 1.0;
    double lo = kFloor, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (detail::eta_property_all_mu(spec, mid) ? lo : hi) = mid;
    }
    return lo;
}

inline MapConstants make_map_constants(double mu0, double eta0, double epsilon) {
    MapConstants k;
    k.epsilon = epsilon;
    k.eta0 = eta0;
    k.epsilon1 = std::min(3.0 * mu0, std::min(eta0 / 8.0, epsilon / 64.0));
    k.delta = k.epsilon1 / 100.0;
    k.mu_hat = k.epsilon1 / 3.0;
    return k;
}

inline MapConstants derive_map_constants(const LorenzMapSpec& spec, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("derive_map_constants: epsilon must be in (0,1)");
    return make_map_constants(spec.mu0, derive_eta0(spec), epsilon);
}

} // namespace gls
