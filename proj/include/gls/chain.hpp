#pragma once

/*
 * chain.hpp — the nested interval chain attached to a δ-pseudo-orbit of
 * α̂ = α_{ε1/3}, and its pullbacks.  This is the constructive core of the
 * 1D shadowing argument.
 *
 * Chain rules (all containments verified numerically at build time):
 *
 *  centered   l_{n+1} = [x_{n+1} − ε1, x_{n+1} + ε1] ⊂ Int α(l_n); works
 *             because α̂(x_n) splits α̂(l_n) into parts of length ≥ √2 ε1 and
 *             |α − α̂| ≤ ε1/3, |x_{n+1} − α̂(x_n)| ≤ ε1/100.
 *  straddle   when 0 ∈ Int l_n the half of l_n on the side of x_n is mapped
 *             near ±1; the next interval is the one-sided seed
 *             [x_{n+1} − (√2 − 1/100) ε1, x_{n+1}] (mirrored when the image
 *             is near −1), followed by two exact α-images, after which the
 *             total expansion ≥ 2√2(√2 − 1/100) ε1 > 3.9 ε1 lets a centered
 *             interval resume strictly inside α³(seed).
 *  boundary   an initial point within ε1 of ±1 cannot carry a centered
 *             interval (the image tops out at α(1)); it gets the same
 *             one-sided seed treatment.
 *  terminal   a final pseudo-orbit point exactly on the singular line keeps
 *             the centered interval [−ε1, ε1].
 *
 * Pullbacks l_m^(n) = α^{-1}(l_m^(n+1)) ∩ l_n are computed by branch
 * inversion of endpoints along the recorded branch signs.
 */

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gls/interval.hpp"
#include "gls/map_constants.hpp"
#include "gls/map_spec.hpp"
#include "gls/pseudo_orbit.hpp"

namespace gls {

enum class StepKind { Centered, StraddleSeed, BoundarySeed, Expansion, Terminal };

struct ChainStep {
    Interval l;      // the interval l_n
    StepKind kind = StepKind::Centered;
    int branch = 0;  // branch of α mapping `mapped` onto a superset of l_{n+1}
    Interval mapped; // sub-interval of l_n used for the forward step
};

struct StraddleRecord {
    std::size_t straddle_index = 0; // n with 0 ∈ Int l_n (or the boundary-seed start)
    std::size_t seed_index = 0;
    int seed_sign = 0;              // sign of the seed interval
    double gap = 0.0;               // |α̂(x_n) − α̂(far half-endpoint)|, ≥ √2 ε1
    Interval alpha3_seed;           // α³(seed)
    Interval alphahat3_seed;        // α̂³(seed)
    bool boundary = false;
};

struct IntervalChain {
    std::vector<ChainStep> steps;
    std::vector<StraddleRecord> straddles;
    double eps1 = 0.0;
    double delta = 0.0;
    double mu_hat = 0.0;
};

class ChainError : public std::runtime_error {
public:
    ChainError(std::size_t step, const std::string& what)
        : std::runtime_error("interval chain, step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

inline IntervalChain build_interval_chain(const LorenzMapSpec& spec, const PseudoOrbit1D& orbit,
                                          const MapConstants& k) {
    constexpr double kTol = 1e-10;
    const double e1 = k.epsilon1;
    const double seed_len = (kSqrt2 - 0.01) * e1;
    const auto& x = orbit.points;
    if (x.empty()) throw std::invalid_argument("build_interval_chain: empty orbit");

    IntervalChain chain;
    chain.eps1 = e1;
    chain.delta = k.delta;
    chain.mu_hat = k.mu_hat;
    chain.steps.reserve(x.size());

    const std::size_t N = x.size() - 1;
    int pipeline = 0; // expansion steps still owed after a seed

    // l_0
    {
        ChainStep s0;
        if (x[0] + e1 > 1.0 || x[0] - e1 < -1.0) {
            // boundary seed: one-sided interval pointing inward
            const int sgn = x[0] > 0 ? 1 : -1;
            s0.l = sgn > 0 ? Interval(x[0] - seed_len, x[0]) : Interval(x[0], x[0] + seed_len);
            s0.kind = StepKind::BoundarySeed;
            pipeline = 2;
            chain.straddles.push_back({0, 0, sgn, 0.0, {}, {}, true});
        } else if (orbit.terminal_gamma && N == 0) {
            s0.l = Interval::centered(x[0], e1);
            s0.kind = StepKind::Terminal;
        } else {
            s0.l = Interval::centered(x[0], e1);
            s0.kind = StepKind::Centered;
        }
        chain.steps.push_back(s0);
    }

    for (std::size_t n = 0; n < N; ++n) {
        ChainStep& cur = chain.steps.back();
        ChainStep next;
        const bool last = (n + 1 == N);

        if (pipeline > 0) {
            // exact α-image of the previous interval
            const int sgn = cur.l.center() > 0 ? 1 : -1;
            if (!(cur.l.lo >= 0.8 - kTol || cur.l.hi <= -0.8 + kTol))
                throw ChainError(n, "expansion interval left the [0.8,1] zone");
            cur.branch = sgn;
            cur.mapped = cur.l;
            next.l = alpha_branch_image(spec, sgn, cur.l);
            next.kind = StepKind::Expansion;
            --pipeline;
            if (pipeline == 0) {
                // close out the straddle diagnostics: α³ vs α̂³ of the seed
                StraddleRecord& rec = chain.straddles.back();
                const std::size_t si = rec.seed_index;
                Interval a = chain.steps[si].l, ah = chain.steps[si].l;
                const int ssgn = rec.seed_sign;
                for (int i = 0; i < 3; ++i) {
                    // the third image needs the not-yet-built α(l_{n+1}); all
                    // three stay on one branch inside the zone
                    a = alpha_branch_image(spec, ssgn, a, 0.0);
                    ah = alpha_branch_image(spec, ssgn, ah, k.mu_hat);
                }
                rec.alpha3_seed = a;
                rec.alphahat3_seed = ah;
            }
            chain.steps.push_back(next);
            continue;
        }

        const bool straddles = cur.l.lo < 0.0 && cur.l.hi > 0.0;
        if (straddles) {
            // choose the half carrying the orbit; a point exactly on the
            // singular line follows the sign of its successor's vertex
            int half_branch; // branch sign of the half interval
            if (x[n] < 0.0) half_branch = -1;
            else if (x[n] > 0.0) half_branch = +1;
            else half_branch = (x[n + 1] > 0.0) ? -1 : +1;

            const Interval half = half_branch < 0 ? Interval(cur.l.lo, 0.0)
                                                  : Interval(0.0, cur.l.hi);
            cur.branch = half_branch;
            cur.mapped = half;
            const Interval img = alpha_branch_image(spec, half_branch, half);
            const int seed_sign = -half_branch; // image side: left half maps near +1
            next.l = seed_sign > 0 ? Interval(x[n + 1] - seed_len, x[n + 1])
                                   : Interval(x[n + 1], x[n + 1] + seed_len);
            next.kind = StepKind::StraddleSeed;
            if (img.containment_slack(next.l) < -kTol)
                throw ChainError(n, "straddle seed not contained in the half image");
            const double zone = seed_sign > 0 ? next.l.lo - 0.8 : -0.8 - next.l.hi;
            if (zone < -kTol) throw ChainError(n, "straddle seed outside the [0.8,1] zone");
            const double far_end = half_branch < 0 ? half.lo : half.hi;
            const double gap = std::abs(alpha_branch(spec.alpha, half_branch, x[n], k.mu_hat) -
                                        alpha_branch(spec.alpha, half_branch, far_end, k.mu_hat));
            chain.straddles.push_back({n, n + 1, seed_sign, gap, {}, {}, false});
            pipeline = 2;
            chain.steps.push_back(next);
            continue;
        }

        // normal centered step
        const int sgn = cur.l.center() > 0 ? 1 : -1;
        cur.branch = sgn;
        cur.mapped = cur.l;
        const Interval img = alpha_branch_image(spec, sgn, cur.l);
        if (last && orbit.terminal_gamma) {
            next.l = Interval::centered(0.0, e1);
            next.kind = StepKind::Terminal;
        } else {
            next.l = Interval::centered(x[n + 1], e1);
            next.kind = StepKind::Centered;
        }
        if (img.containment_slack(next.l) < -kTol)
            throw ChainError(n, "centered interval not inside the image (delta too large "
                                "or conditions violated)");
        chain.steps.push_back(next);
    }
    return chain;
}

// l_m^(n): the interval mapped bijectively onto l_m by α^(m-n).
inline Interval pullback_interval(const LorenzMapSpec& spec, const IntervalChain& chain,
                                  std::size_t m, std::size_t n) {
    if (!(m > n) || m >= chain.steps.size())
        throw std::invalid_argument("pullback_interval: need n < m < chain length");
    Interval cur = chain.steps[m].l;
    for (std::size_t kstep = m; kstep-- > n + 0;) {
        const ChainStep& st = chain.steps[kstep];
        const double a = invert_alpha_branch(spec, cur.lo, st.branch);
        const double b = invert_alpha_branch(spec, cur.hi, st.branch);
        Interval pre = a <= b ? Interval(a, b) : Interval(b, a);
        if (!pre.intersects(st.l))
            throw std::runtime_error("pullback_interval: empty intersection at step " +
                                     std::to_string(kstep) + " (chain inconsistency)");
        cur = pre.intersect(st.l);
    }
    return cur;
}

// smallest m > n with l_m^(n) ⊂ Int l_n (empirical witness for the nesting
// clause; no universal bound is asserted)
inline std::size_t observed_nesting_depth(const LorenzMapSpec& spec, const IntervalChain& chain,
                                          std::size_t n, std::size_t max_ahead = 80) {
    const std::size_t top = std::min(chain.steps.size() - 1, n + max_ahead);
    for (std::size_t m = n + 1; m <= top; ++m) {
        if (chain.steps[n].l.strictly_contains(pullback_interval(spec, chain, m, n))) return m;
    }
    return 0; // not observed within max_ahead
}

// ---------------------------------------------------------------------------
// Lemma-style chain validation (per-step, O(1) each)
// ---------------------------------------------------------------------------

struct ChainCheckReport {
    std::size_t violations_i = 0;   // ε1 ≤ |l_n| ≤ 6 ε1
    std::size_t violations_ii = 0;  // endpoints within 8 ε1 of x_n
    std::size_t violations_iii = 0; // centered where required
    std::size_t violations_iv = 0;  // α(l_n) ⊇ l_{n+1}, straddle halves miss 0
    double min_containment_slack = std::numeric_limits<double>::infinity();
    bool pass() const {
        return violations_i + violations_ii + violations_iii + violations_iv == 0;
    }
};

inline ChainCheckReport check_chain_lemma(const LorenzMapSpec& spec, const PseudoOrbit1D& orbit,
                                          const IntervalChain& chain, double tol = 1e-10) {
    ChainCheckReport rep;
    const double e1 = chain.eps1;
    const auto& x = orbit.points;
    for (std::size_t n = 0; n < chain.steps.size(); ++n) {
        const ChainStep& st = chain.steps[n];
        const double len = st.l.length();
        if (len < e1 - tol || len > 6.0 * e1 + tol) ++rep.violations_i;
        const double far = std::max(std::abs(st.l.lo - x[n]), std::abs(st.l.hi - x[n]));
        if (far > 8.0 * e1 + tol) ++rep.violations_ii;
        const bool in_zone = (st.l.lo >= 0.8 - tol && st.l.hi <= 1.0 + tol) ||
                             (st.l.hi <= -0.8 + tol && st.l.lo >= -1.0 - tol);
        if (!in_zone) {
            if (std::abs(len - 2.0 * e1) > 1e-12 || std::abs(st.l.center() - x[n]) > 1e-12)
                ++rep.violations_iii;
        }
        if (n + 1 < chain.steps.size()) {
            const Interval img = alpha_branch_image(spec, st.branch, st.mapped);
            const double slack = img.containment_slack(chain.steps[n + 1].l);
            rep.min_containment_slack = std::min(rep.min_containment_slack, slack);
            if (slack < -tol) ++rep.violations_iv;
            const bool half_misses_zero = st.mapped.lo >= 0.0 || st.mapped.hi <= 0.0;
            if (st.l.contains(0.0) && st.l.lo < 0.0 && st.l.hi > 0.0 && !half_misses_zero)
                ++rep.violations_iv;
        }
    }
    return rep;
}

} // namespace gls
