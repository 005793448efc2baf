#pragma once

/*
 * map_spec.hpp — concrete Lorenz map family on the square section
 *
 * The section is Σ = [-1,1]^2 with singular line Γ = {x = 0}. A Lorenz map
 *
 *     L(x, y) = (α(x), β(x, y)),   L_μ(x, y) = L(x, y) - (μ x, 0)
 *
 * is built from the two-parameter families
 *
 *     α(x) = sign(x) · (c · |x|^ρ − 1)          on [-1,1] \ {0},  0 < ρ < 1
 *     β(x, y) = e_± + d · |x| · y               on Σ_± = {±x > 0}
 *
 * α is odd, expanding (α'(x) = cρ|x|^(ρ-1) > √2 requires cρ > √2), blows up
 * at the singular line (α'(0±) = ∞, α(0±) = ∓1), and α(1) = c − 1 < 1.
 * β contracts fibers with |∂β/∂x|, |∂β/∂y| ≤ d. The images L(Σ_±) are two
 * disjoint cusps whose vertices are v_± = (∓1, e_±).
 *
 * Everything here is an immutable value type; all operations are pure.
 */

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gls/interval.hpp"

namespace gls {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;

    bool on_gamma() const { return x == 0.0; }
};

inline double dist(const PlanarPoint& a, const PlanarPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct AlphaSpec {
    double c = 1.95;
    double rho = 0.75;
};

struct BetaSpec {
    double d = 0.3;
    double e_plus = 0.65;
    double e_minus = -0.65;
};

struct LorenzMapSpec {
    AlphaSpec alpha;
    BetaSpec beta;
    double mu0 = 0.02;

    // cusp vertices v_+ = (-1, e_+), v_- = (1, e_-)
    PlanarPoint vertex_plus() const { return {-1.0, beta.e_plus}; }
    PlanarPoint vertex_minus() const { return {1.0, beta.e_minus}; }
    PlanarPoint vertex(int side) const { return side > 0 ? vertex_plus() : vertex_minus(); }
};

// ---------------------------------------------------------------------------
// α evaluation.  `branch` selects the one-sided limit at x == 0:
// branch = +1 gives α(0+) = -1, branch = -1 gives α(0-) = +1, so both closed
// half-branches [0,1] and [-1,0] evaluate continuously.
// ---------------------------------------------------------------------------

inline double alpha_branch(const AlphaSpec& a, int branch, double x, double mu = 0.0) {
    const double core = a.c * std::pow(std::abs(x), a.rho) - 1.0;
    return (branch > 0 ? core : -core) - mu * x;
}

// derivative of α_μ, identical on both branches
inline double alpha_mu_deriv(const AlphaSpec& a, double x, double mu = 0.0) {
    return a.c * a.rho * std::pow(std::abs(x), a.rho - 1.0) - mu;
}

inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// α_μ(x) = α(x) − μ x for x ≠ 0
inline double eval_alpha_mu(const LorenzMapSpec& spec, double mu, double x) {
    if (x == 0.0) throw std::domain_error("eval_alpha_mu: x on the singular line");
    if (mu < 0.0 || mu > spec.mu0)
        throw std::invalid_argument("eval_alpha_mu: mu outside [0, mu0]");
    return alpha_branch(spec.alpha, sign_of(x), x, mu);
}

// β(x, y) = e_± + d |x| y on Σ_±; the branch argument resolves x == 0.
inline double eval_beta_branch(const BetaSpec& b, int branch, double x, double y) {
    const double e = branch > 0 ? b.e_plus : b.e_minus;
    return e + b.d * std::abs(x) * y;
}

inline double eval_beta(const BetaSpec& b, double x, double y) {
    if (x == 0.0) throw std::domain_error("eval_beta: x on the singular line");
    return eval_beta_branch(b, sign_of(x), x, y);
}

// L_μ(p) = (α_μ(p.x), β(p)) for p off Γ
inline PlanarPoint eval_map_mu(const LorenzMapSpec& spec, double mu, const PlanarPoint& p) {
    if (p.on_gamma()) throw std::domain_error("eval_map_mu: point on the singular line");
    if (mu < 0.0 || mu > spec.mu0)
        throw std::invalid_argument("eval_map_mu: mu outside [0, mu0]");
    const int s = sign_of(p.x);
    return {alpha_branch(spec.alpha, s, p.x, mu), eval_beta_branch(spec.beta, s, p.x, p.y)};
}

// branch-continuous map value, defined for all x including 0 (cusp vertex limit)
inline PlanarPoint eval_map_mu_branch(const LorenzMapSpec& spec, double mu, int branch,
                                      const PlanarPoint& p) {
    return {alpha_branch(spec.alpha, branch, p.x, mu),
            eval_beta_branch(spec.beta, branch, p.x, p.y)};
}

// ---------------------------------------------------------------------------
// Branch inversion.  α_μ restricted to one branch is strictly increasing, so
// the preimage of a value is unique.  Safeguarded Newton with a bisection
// bracket; the bracket is tightened to a few ulps, which pins the preimage to
// well below the 1e-12 contract and makes the residual as small as doubles
// allow even where α' is large.
// ---------------------------------------------------------------------------

inline double invert_alpha_pos(const AlphaSpec& a, double target, double mu) {
    const double top = a.c - 1.0 - mu; // α_μ(1) on the positive branch
    const double tol_img = 1e-12;
    if (target < -1.0 - tol_img || target > top + tol_img)
        throw std::domain_error("invert_alpha_branch: target outside branch image");
    target = std::min(std::max(target, -1.0), top);
    if (target == -1.0) return 0.0;
    if (target == top) return 1.0;

    double lo = 0.0, hi = 1.0;
    // closed-form seed for μ = 0
    double x = std::pow((1.0 + target) / a.c, 1.0 / a.rho);
    x = std::min(std::max(x, lo), hi);
    int stale_newton = 0;
    for (int it = 0; it < 200; ++it) {
        const double f = alpha_branch(a, +1, x, mu) - target;
        if (f == 0.0) { lo = hi = x; break; }
        if (f > 0.0) hi = x; else lo = x;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
        double xn = x;
        bool newton_ok = false;
        if (stale_newton < 3) {
            const double fp = alpha_mu_deriv(a, x, mu);
            if (fp > 0.0) {
                xn = x - f / fp;
                newton_ok = xn > lo && xn < hi;
            }
            if (!newton_ok) ++stale_newton;
        }
        x = newton_ok ? xn : 0.5 * (lo + hi);
    }
    return 0.5 * (lo + hi);
}

// Unique x on the given branch with α_μ(x) = target.  branch = +1 inverts on
// [0,1], branch = -1 on [-1,0] (via the symmetry α_μ(-x) = -α_μ(x)).
inline double invert_alpha_branch(const LorenzMapSpec& spec, double target, int branch,
                                  double mu = 0.0) {
    if (branch > 0) return invert_alpha_pos(spec.alpha, target, mu);
    return -invert_alpha_pos(spec.alpha, -target, mu);
}

// image of an interval lying in one closed half-branch (α_μ is increasing there)
inline Interval alpha_branch_image(const LorenzMapSpec& spec, int branch, const Interval& l,
                                   double mu = 0.0) {
    return Interval(alpha_branch(spec.alpha, branch, l.lo, mu),
                    alpha_branch(spec.alpha, branch, l.hi, mu));
}

// ---------------------------------------------------------------------------
// JSON (schema: {alpha:{c,rho}, beta:{d,e_plus,e_minus}, mu0})
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const LorenzMapSpec& spec) {
    return {{"alpha", {{"c", spec.alpha.c}, {"rho", spec.alpha.rho}}},
            {"beta",
             {{"d", spec.beta.d}, {"e_plus", spec.beta.e_plus}, {"e_minus", spec.beta.e_minus}}},
            {"mu0", spec.mu0}};
}

inline LorenzMapSpec map_spec_from_json(const nlohmann::json& j) {
    LorenzMapSpec s;
    s.alpha.c = j.at("alpha").at("c").get<double>();
    s.alpha.rho = j.at("alpha").at("rho").get<double>();
    s.beta.d = j.at("beta").at("d").get<double>();
    s.beta.e_plus = j.at("beta").at("e_plus").get<double>();
    s.beta.e_minus = j.at("beta").at("e_minus").get<double>();
    s.mu0 = j.at("mu0").get<double>();
    return s;
}

} // namespace gls
