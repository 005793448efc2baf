#pragma once

/*
 * pseudo_orbit.hpp — δ-pseudo-orbits of the shifted map α̂ = α_{ε1/3} (first
 * coordinate) and of the planar map L_μ̂, plus seeded generators.
 *
 * Validity: |α̂(x_n) − x_{n+1}| ≤ δ for x_n ≠ 0; a point on the singular line
 * must be followed by a point within δ of the relevant cusp-vertex coordinate
 * (±1 in 1D, v_± in the plane).
 *
 * Generator modes:
 *   noise           per-step uniform perturbation of the true image
 *   gamma-crossing  steers the orbit to straddle 0 at least once
 *                   (occasionally hitting the singular line exactly)
 *   gamma-terminal  ends exactly on the singular line
 *
 * Steering works backward: a target orbit of α̂ is built by branch inversion
 * from the straddle value, and the emitted points track it with a noise
 * amplitude small enough that the δ budget absorbs the local expansion.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gls/map_constants.hpp"
#include "gls/map_spec.hpp"
#include "gls/rng.hpp"

namespace gls {

enum class OrbitMode { Noise, GammaCrossing, GammaTerminal };

inline const char* to_string(OrbitMode m) {
    switch (m) {
        case OrbitMode::Noise: return "noise";
        case OrbitMode::GammaCrossing: return "gamma-crossing";
        case OrbitMode::GammaTerminal: return "gamma-terminal";
    }
    return "?";
}

struct PseudoOrbit1D {
    std::vector<double> points;
    double delta = 0.0;
    double mu = 0.0; // shift of the generating map
    bool terminal_gamma = false;
};

struct PseudoOrbit2D {
    std::vector<PlanarPoint> points;
    double delta = 0.0;
    double mu = 0.0;
    bool terminal_gamma = false;
};

struct OrbitValidation {
    bool valid = true;
    std::size_t first_bad = 0;
    double worst_defect = 0.0;
    std::string message;
};

inline OrbitValidation validate_pseudo_orbit_1d(const LorenzMapSpec& spec,
                                                const PseudoOrbit1D& o) {
    OrbitValidation v;
    for (std::size_t n = 0; n + 1 < o.points.size(); ++n) {
        const double xn = o.points[n], xn1 = o.points[n + 1];
        double defect;
        if (xn == 0.0) {
            defect = std::min(std::abs(xn1 - 1.0), std::abs(xn1 + 1.0));
        } else {
            defect = std::abs(alpha_branch(spec.alpha, sign_of(xn), xn, o.mu) - xn1);
        }
        v.worst_defect = std::max(v.worst_defect, defect);
        if (defect > o.delta && v.valid) {
            v.valid = false;
            v.first_bad = n;
            v.message = "step defect exceeds delta at n=" + std::to_string(n);
        }
        if (std::abs(xn) > 1.0) {
            v.valid = false;
            v.first_bad = n;
            v.message = "point outside [-1,1] at n=" + std::to_string(n);
        }
    }
    if (o.terminal_gamma && !o.points.empty() && o.points.back() != 0.0) {
        v.valid = false;
        v.message = "terminal_gamma set but last point is not 0";
    }
    return v;
}

inline OrbitValidation validate_pseudo_orbit_2d(const LorenzMapSpec& spec,
                                                const PseudoOrbit2D& o) {
    OrbitValidation v;
    for (std::size_t n = 0; n + 1 < o.points.size(); ++n) {
        const PlanarPoint& p = o.points[n];
        const PlanarPoint& q = o.points[n + 1];
        double defect;
        if (p.on_gamma()) {
            defect = std::min(dist(q, spec.vertex_plus()), dist(q, spec.vertex_minus()));
        } else {
            defect = dist(eval_map_mu_branch(spec, o.mu, sign_of(p.x), p), q);
        }
        v.worst_defect = std::max(v.worst_defect, defect);
        if (defect > o.delta && v.valid) {
            v.valid = false;
            v.first_bad = n;
            v.message = "step defect exceeds delta at n=" + std::to_string(n);
        }
    }
    if (o.terminal_gamma && !o.points.empty() && !o.points.back().on_gamma()) {
        v.valid = false;
        v.message = "terminal_gamma set but last point off the singular line";
    }
    return v;
}

namespace detail {

// Backward target orbit of α̂ ending at `final_value` after `len` steps.
// Branch choices are seeded; a target outside one branch image forces the
// other branch.
inline std::vector<double> backward_targets(const LorenzMapSpec& spec, double mu, double final_value,
                                            std::size_t len, Rng& rng) {
    std::vector<double> t(len + 1);
    t[len] = final_value;
    const double top = spec.alpha.c - 1.0 - mu; // α̂(1)
    for (std::size_t j = len; j > 0; --j) {
        int branch;
        if (t[j] > top) branch = -1;
        else if (t[j] < -top) branch = +1;
        else branch = rng.coin() ? +1 : -1;
        t[j - 1] = invert_alpha_branch(spec, t[j], branch, mu);
    }
    return t;
}

inline double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

} // namespace detail

inline PseudoOrbit1D generate_pseudo_orbit_1d(const LorenzMapSpec& spec, const MapConstants& k,
                                              std::size_t n_steps, std::uint64_t seed,
                                              OrbitMode mode) {
    if (n_steps < 1) throw std::invalid_argument("generate_pseudo_orbit_1d: n_steps >= 1");
    Rng rng(seed);
    PseudoOrbit1D o;
    o.delta = k.delta;
    o.mu = k.mu_hat;
    o.points.resize(n_steps + 1);
    const double budget = 0.9 * k.delta;

    auto noisy_step = [&](double x) {
        double next =
            alpha_branch(spec.alpha, sign_of(x), x, o.mu) + rng.uniform(-budget, budget);
        next = detail::clamp_unit(next);
        if (next == 0.0) next = 0.5 * k.delta;
        return next;
    };

    if (mode == OrbitMode::Noise) {
        double x = rng.uniform(-0.9, 0.9);
        if (std::abs(x) < 0.05) x = x < 0 ? x - 0.05 : x + 0.05;
        o.points[0] = x;
        for (std::size_t n = 0; n < n_steps; ++n) o.points[n + 1] = noisy_step(o.points[n]);
        return o;
    }

    if (mode == OrbitMode::GammaTerminal) {
        o.terminal_gamma = true;
        o.points = detail::backward_targets(spec, o.mu, 0.0, n_steps, rng);
        return o;
    }

    // gamma-crossing: track a target orbit into a straddle of 0, then free noise
    const std::size_t m = n_steps / 3 + rng.below(std::max<std::uint64_t>(1, n_steps / 3));
    const bool exact_gamma = rng.below(4) == 0;
    const double zeta =
        exact_gamma ? 0.0
                    : (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.05, 0.45) * k.epsilon1;
    auto targets = detail::backward_targets(spec, o.mu, zeta, m, rng);
    // tracking noise sized so local expansion cannot push the defect past delta
    double max_slope = 1.0;
    for (std::size_t j = 0; j + 1 <= m; ++j)
        if (targets[j] != 0.0)
            max_slope = std::max(max_slope, alpha_mu_deriv(spec.alpha, targets[j], o.mu));
    const double track_noise = budget / (2.0 * (max_slope + 1.0));
    for (std::size_t j = 0; j <= m; ++j) {
        const bool frozen = (j == m); // keep the straddle value exact
        o.points[j] = frozen ? targets[j]
                             : detail::clamp_unit(targets[j] + rng.uniform(-track_noise, track_noise));
    }
    std::size_t n = m;
    if (exact_gamma && m < n_steps) {
        // successor of a singular-line point sits near a cusp vertex (x = ±1)
        const double vx = rng.coin() ? -1.0 : 1.0;
        o.points[m + 1] = vx - sign_of(vx) * rng.uniform(0.0, budget);
        n = m + 1;
    }
    for (; n < n_steps; ++n) o.points[n + 1] = noisy_step(o.points[n]);
    return o;
}

inline PseudoOrbit2D generate_pseudo_orbit_2d(const LorenzMapSpec& spec, const MapConstants& k,
                                              std::size_t n_steps, std::uint64_t seed,
                                              OrbitMode mode) {
    // per-axis budget so the Euclidean defect stays within delta
    const double axis_frac = 1.0 / kSqrt2;
    MapConstants kx = k;
    kx.delta = k.delta * axis_frac;
    PseudoOrbit1D ox = generate_pseudo_orbit_1d(spec, kx, n_steps, seed, mode);

    Rng rng(splitmix64(seed += 0x9e3779b97f4a7c15ull));
    PseudoOrbit2D o;
    o.delta = k.delta;
    o.mu = k.mu_hat;
    o.terminal_gamma = ox.terminal_gamma;
    o.points.resize(ox.points.size());
    const double ybudget = 0.9 * k.delta * axis_frac;
    o.points[0] = {ox.points[0], rng.uniform(-0.9, 0.9)};
    for (std::size_t n = 0; n + 1 < o.points.size(); ++n) {
        const PlanarPoint& p = o.points[n];
        double ynext;
        if (p.on_gamma()) {
            // follow whichever vertex the steered x-coordinate approaches
            const int side = ox.points[n + 1] < 0 ? +1 : -1; // x near -1 comes from Σ_+
            ynext = (side > 0 ? spec.beta.e_plus : spec.beta.e_minus) +
                    rng.uniform(-ybudget, ybudget);
        } else {
            ynext = eval_beta_branch(spec.beta, sign_of(p.x), p.x, p.y) +
                    rng.uniform(-ybudget, ybudget);
        }
        o.points[n + 1] = {ox.points[n + 1], detail::clamp_unit(ynext)};
    }
    return o;
}

// first coordinates of a planar pseudo-orbit form a 1D pseudo-orbit of α̂
inline PseudoOrbit1D project_x(const PseudoOrbit2D& o) {
    PseudoOrbit1D p;
    p.delta = o.delta;
    p.mu = o.mu;
    p.terminal_gamma = o.terminal_gamma;
    p.points.reserve(o.points.size());
    for (const auto& q : o.points) p.points.push_back(q.x);
    return p;
}

} // namespace gls
