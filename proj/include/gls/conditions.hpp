#pragma once

/*
 * conditions.hpp — certification of the admissibility conditions on a Lorenz
 * map family, with numerical margins:
 *
 *   (1)  α(0+) = -1,  α(1) < 1,  α'(0+) = ∞,  α'(x) > √2 on (0,1]
 *   (2)  |∂β/∂x|, |∂β/∂y| < 3/(4√2) on Σ \ Γ
 *   (3)  0.8 < α²(1) < α(1) < 1
 *   (4)  α'(x) < 2 for 0.8 < x ≤ 1
 *
 * plus the cusp geometry (disjoint images, vertices on {∓1} × [-1,1]).
 * Every margin is computed from the analytic extremum where one exists
 * (α_μ' is monotone for ρ < 1) and confirmed on a grid; each condition is
 * checked for μ ∈ {0, μ0/2, μ0}.
 */

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "gls/map_spec.hpp"

namespace gls {

struct ConditionEntry {
    std::string name;
    bool pass = false;
    double margin = 0.0; // positive iff the strict inequality holds
};

struct ConditionReport {
    std::vector<ConditionEntry> entries;
    bool pass = false; // all margins strictly positive

    const ConditionEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

namespace detail {

inline void push_margin(ConditionReport& rep, std::string name, double margin) {
    rep.entries.push_back({std::move(name), margin > 0.0, margin});
}

} // namespace detail

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kBetaBound = 0.53033008588991064; // 3/(4*sqrt(2))

inline ConditionReport check_conditions(const LorenzMapSpec& spec, int grid_n = 100000) {
    if (grid_n < 1000) throw std::invalid_argument("check_conditions: grid_n must be >= 1000");
    ConditionReport rep;
    const AlphaSpec& a = spec.alpha;
    const BetaSpec& b = spec.beta;

    const double mus[3] = {0.0, 0.5 * spec.mu0, spec.mu0};
    for (double mu : mus) {
        const std::string tag = " [mu=" + std::to_string(mu) + "]";
        const double a1 = alpha_branch(a, +1, 1.0, mu);
        const double a2 = alpha_branch(a, +1, a1, mu); // α_μ²(1); a1 ∈ (0,1) when sane

        // (1) α_μ(1) < 1
        detail::push_margin(rep, "condition (1): alpha(1) < 1" + tag, 1.0 - a1);

        // (1) α_μ' > √2 on (0,1]; analytic minimum at x = 1, grid-confirmed
        double min_deriv = alpha_mu_deriv(a, 1.0, mu);
        for (int i = 1; i <= grid_n; ++i) {
            const double x = static_cast<double>(i) / grid_n;
            min_deriv = std::min(min_deriv, alpha_mu_deriv(a, x, mu));
        }
        detail::push_margin(rep, "condition (1): alpha' > sqrt(2)" + tag, min_deriv - kSqrt2);

        // (3) 0.8 < α_μ²(1) < α_μ(1) < 1
        detail::push_margin(rep, "condition (3): alpha^2(1) > 0.8" + tag, a2 - 0.8);
        detail::push_margin(rep, "condition (3): alpha^2(1) < alpha(1)" + tag, a1 - a2);

        // (4) α_μ' < 2 on (0.8, 1]; analytic maximum at x = 0.8, grid-confirmed
        double max_deriv = alpha_mu_deriv(a, 0.8, mu);
        for (int i = 0; i <= grid_n; ++i) {
            const double x = 0.8 + 0.2 * static_cast<double>(i) / grid_n;
            max_deriv = std::max(max_deriv, alpha_mu_deriv(a, x, mu));
        }
        detail::push_margin(rep, "condition (4): alpha' < 2 on (0.8,1]" + tag, 2.0 - max_deriv);
    }

    // (2) |∂β/∂x| = d|y|, |∂β/∂y| = d|x|; supremum is d, grid-confirmed
    double sup_partial = 0.0;
    const int g2 = static_cast<int>(std::sqrt(static_cast<double>(grid_n)));
    for (int i = 0; i <= g2; ++i) {
        const double t = -1.0 + 2.0 * i / g2;
        sup_partial = std::max(sup_partial, b.d * std::abs(t));
    }
    detail::push_margin(rep, "condition (2): |dbeta| < 3/(4 sqrt 2)", kBetaBound - sup_partial);

    // cusp geometry: disjoint images, images inside [-1,1]
    detail::push_margin(rep, "cusps: e_plus - e_minus > 2d", (b.e_plus - b.e_minus) - 2.0 * b.d);
    const double reach = std::max(std::abs(b.e_plus), std::abs(b.e_minus)) + b.d;
    detail::push_margin(rep, "cusps: |e| + d <= 1", 1.0 - reach);

    rep.pass = true;
    for (const auto& e : rep.entries) rep.pass = rep.pass && e.pass;
    return rep;
}

inline nlohmann::json to_json(const ConditionReport& rep) {
    nlohmann::json conditions = nlohmann::json::array();
    for (const auto& e : rep.entries)
        conditions.push_back({{"name", e.name}, {"pass", e.pass}, {"margin", e.margin}});
    return {{"pass", rep.pass}, {"conditions", conditions}};
}

} // namespace gls
