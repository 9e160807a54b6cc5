#pragma once

// The explicit-constant cascade: from parameters (k, theta, A0, t0) through
// the intermediate constants Y0, A1..A8, B1..B4, C1..C5 to the final
// bound coefficients D1..D5 with
//
//   |zeta(1/2+it)| <= D1 t^{1/6} log t + D2 t^{1/6} + D3 t^{1/12}
//                   + D4 log t + D5          (t >= t0),
//
// plus the feasibility conditions, the certified supremum of the ratio
// bound/(t^{1/6} log t) over t >= t0, the per-block numeric spot checks of
// |S_j|^2 against the B-form, and a grid/refinement parameter search whose
// objective is the certified supremum itself.

#include "zetabound/cinterval.hpp"
#include "zetabound/expsum.hpp"
#include "zetabound/interval.hpp"
#include "zetabound/zeta_em.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zetabound {

template <std::floating_point F>
struct BoundParams {
    RInterval<F> k;      // dyadic growth ratio, > 1
    RInterval<F> theta;  // Weyl modulus scale, > 0
    RInterval<F> a0;     // block start scale, > 0
    RInterval<F> t0;     // height from which the bound is claimed
};

template <std::floating_point F>
struct ConstantsChain {
    RInterval<F> y0;
    RInterval<F> a1, a2, a3, a4, a5, a6, a7, a8;
    RInterval<F> b1, b2, b3, b4;
    RInterval<F> c1, c2, c3, c4, c5;
    RInterval<F> d1, d2, d3, d4, d5;
};

struct FeasibilityReport {
    bool k_gt_1 = false;
    bool theta_positive = false;
    bool a0_positive = false;
    bool con1 = false;        // t0 > A0^6 (2pi)^3
    bool m_at_least_2 = false;  // k*theta >= 1, so M = [k^j theta]+1 >= 2 for j >= 1
    double con1_lhs = 0;      // upper bound of A0^6 (2pi)^3

    bool all() const {
        return k_gt_1 && theta_positive && a0_positive && con1 && m_at_least_2;
    }
    std::string describe() const {
        std::string s;
        auto line = [&s](const char* name, bool ok) {
            s += std::string("  ") + (ok ? "pass" : "FAIL") + "  " + name + "\n";
        };
        line("k > 1", k_gt_1);
        line("theta > 0", theta_positive);
        line("A0 > 0", a0_positive);
        line("t0 > A0^6 (2pi)^3", con1);
        line("k*theta >= 1  (M >= 2)", m_at_least_2);
        return s;
    }
};

template <std::floating_point F>
inline FeasibilityReport feasibility(const BoundParams<F>& p) {
    FeasibilityReport r;
    r.k_gt_1 = p.k.lo > F(1);
    r.theta_positive = p.theta.lo > F(0);
    r.a0_positive = p.a0.lo > F(0);
    const RInterval<F> lhs = powi(p.a0, 6) * powi(two_pi_iv<F>(), 3);
    r.con1_lhs = static_cast<double>(lhs.hi);
    r.con1 = r.a0_positive && p.t0.lo > lhs.hi;
    r.m_at_least_2 = (p.k * p.theta).lo >= F(1);
    return r;
}

// The chain formulas only need k > 1 and positive theta, A0, t0; the block
// conditions (con1, M >= 2) are enforced where a certificate is produced,
// so limit behaviour like theta -> 0 stays evaluable.
template <std::floating_point F>
inline ConstantsChain<F> compute_chain(const BoundParams<F>& p) {
    if (!(p.k.lo > F(1)) || !(p.theta.lo > F(0)) || !(p.a0.lo > F(0)) || !(p.t0.lo > F(0)))
        throw std::domain_error("compute_chain: need k > 1 and positive theta, A0, t0");
    ConstantsChain<F> c;
    const RInterval<F> one(F(1));
    const RInterval<F> k = p.k, th = p.theta, a0 = p.a0;
    const RInterval<F> km1 = k - one;
    const RInterval<F> t0_13 = cbrt(p.t0);
    const RInterval<F> a0t = a0 * t0_13;        // A0 t0^{1/3}
    const RInterval<F> sqrt2 = sqrt(RInterval<F>(F(2)));
    const RInterval<F> k2 = k * k;

    c.y0 = one + th / a0t;
    c.a1 = F(2) * sqrt2 * km1 * k2 * c.y0 / (pi_iv<F>() * sqrt(a0));
    c.a2 = F(2) * km1 * k2 / (pi_iv<F>() * (a0 * a0));
    c.a3 = F(2) * sqrt2 * a0 * sqrt(a0) * c.y0;
    c.a4 = (km1 * km1 * a0 * a0 / (k2 * th)) * (one + one / (km1 * a0t)) *
           (one + th * k / (km1 * a0t));
    c.a5 = (F(2) * km1 * a0 / k) * (one + one / (km1 * a0t) + th * k / (km1 * a0t));
    c.a6 = RInterval<F>(F(4)) / F(15) * c.a1 * sqrt(th) * sqrt(one + one / (k * th));
    c.a7 = c.a2 * th / F(6) * (one + one / (k * th));
    c.a8 = F(4) * c.a3 / (F(3) * sqrt(th));
    c.b1 = c.a4 + c.a5 * c.a6;
    c.b2 = c.a5 * c.a7;
    c.b3 = RInterval<F>(F(3)) / F(2) * c.a5;
    c.b4 = c.a5 * c.a8;

    const RInterval<F> lk = log(k);
    const RInterval<F> sqrtk = sqrt(k);
    const RInterval<F> log_a0_r2pi = log(a0 * sqrt(two_pi_iv<F>()));
    const RInterval<F> one_minus = one - log_a0_r2pi / lk;
    const RInterval<F> kinv_half = one / sqrtk;                 // k^{-1/2}
    const RInterval<F> geo = kinv_half / (one - kinv_half);     // k^{-1/2}/(1-k^{-1/2})
    const RInterval<F> tp4 = root4(two_pi_iv<F>());

    c.c1 = sqrt(c.b1) / (F(6) * lk);
    c.c2 = sqrt(c.b1) * one_minus + sqrt(c.b2) * geo;
    c.c3 = sqrt(c.b4) * k / (sqrt(a0) * tp4 * (sqrtk - one)) -
           sqrt(c.b2) * sqrt(a0) * tp4 / (k * (one - kinv_half));
    c.c4 = sqrt(c.b3) / (F(6) * lk);
    c.c5 = sqrt(c.b3) * one_minus - sqrt(c.b4) * sqrtk / (sqrtk - one);

    const RInterval<F> rka = sqrt(k / a0);
    c.d1 = F(2) * c.c1 * rka;
    c.d2 = F(2) * (F(2) * sqrt(a0) + c.c2 * rka);
    c.d3 = F(2) * c.c3 * rka;
    c.d4 = F(2) * c.c4 * rka;
    const RInterval<F> lem3a(detail::next_down(F(0.77)), detail::next_up(F(0.77)));
    const RInterval<F> lem3b(detail::next_down(F(1.62)), detail::next_up(F(1.62)));
    const RInterval<F> t0_q = root4(p.t0);
    c.d5 = F(2) * (c.c5 * rka - one + lem3a / t0_q + lem3b / powi(t0_q, 3));
    return c;
}

// D1 t^{1/6} log t + D2 t^{1/6} + D3 t^{1/12} + D4 log t + D5
template <std::floating_point F>
inline RInterval<F> theorem_bound_at(const ConstantsChain<F>& c, const RInterval<F>& t) {
    if (!(t.lo >= F(2))) throw std::domain_error("theorem_bound_at: requires t >= 2");
    const RInterval<F> lt = log(t);
    const RInterval<F> t6 = root6(t);
    const RInterval<F> t12 = root12(t);
    return c.d1 * t6 * lt + c.d2 * t6 + c.d3 * t12 + c.d4 * lt + c.d5;
}

template <std::floating_point F>
struct SupRatioReport {
    ConstantsChain<F> chain;
    RInterval<F> term[5];   // certified per-term contributions at t0
    RInterval<F> sup_bound; // certified bound on sup_{t>=t0} ratio
    bool pass = false;
};

namespace detail {

template <std::floating_point F>
inline RInterval<F> clamp_nonneg(const RInterval<F>& x) {
    return RInterval<F>::raw(std::fmax(x.lo, F(0)), std::fmax(x.hi, F(0)));
}

} // namespace detail

// Certifies sup_{t >= t0} bound(t)/(t^{1/6} log t) <= target by writing the
// ratio as D1 + D2/log t + D3/(t^{1/12} log t) + D4/t^{1/6} + D5/(t^{1/6} log t).
// Each weight is positive and decreasing for t >= e, so a nonnegative
// coefficient contributes at most its value at t0 and a negative coefficient
// contributes at most zero.
template <std::floating_point F>
inline SupRatioReport<F> verify_large_t(const BoundParams<F>& p, F target) {
    if (!feasibility(p).all())
        throw std::domain_error("verify_large_t: parameters fail feasibility");
    SupRatioReport<F> rep;
    rep.chain = compute_chain(p);
    if (!(p.t0.lo > F(3)))
        throw std::domain_error("verify_large_t: needs t0 > e for the monotone ratio bound");
    const ConstantsChain<F>& c = rep.chain;
    const RInterval<F> lt = log(p.t0);
    const RInterval<F> t6 = root6(p.t0);
    const RInterval<F> t12 = root12(p.t0);
    rep.term[0] = c.d1;
    rep.term[1] = detail::clamp_nonneg(c.d2) / lt;
    rep.term[2] = detail::clamp_nonneg(c.d3) / (t12 * lt);
    rep.term[3] = detail::clamp_nonneg(c.d4) / t6;
    rep.term[4] = detail::clamp_nonneg(c.d5) / (t6 * lt);
    RInterval<F> s = rep.term[0];
    for (int i = 1; i < 5; ++i) s = s + rep.term[i];
    rep.sup_bound = s;
    rep.pass = s.hi <= target;
    return rep;
}

// ------------------------------------------------------------------
// dyadic blocks and the end-to-end block check

template <std::floating_point F>
struct DyadicBlock {
    int j = 0;
    long n_start = 0;  // N_{j-1}
    long n_end = 0;    // min(N_j, floor(sqrt(t/2pi)))
    long modulus = 0;  // M = [k^j theta] + 1
    bool boundary_ambiguous = false;
};

// blocks with N_{j-1} < N_j and X_{j-1} < sqrt(t/2pi); empty when
// A0 t^{1/3} already exceeds the main-sum limit (t below A0^6 (2pi)^3)
template <std::floating_point F>
inline std::vector<DyadicBlock<F>> dyadic_blocks(const BoundParams<F>& p, F t) {
    std::vector<DyadicBlock<F>> out;
    const RInterval<F> ti(t);
    const RInterval<F> t13 = cbrt(ti);
    const RInterval<F> limit = sqrt(ti / two_pi_iv<F>());
    const long n_limit = static_cast<long>(std::floor(limit.lo));
    RInterval<F> xprev = p.a0 * t13;  // X_0
    RInterval<F> kj = p.k;
    for (int j = 1; j <= 400; ++j) {
        if (!(xprev.hi < limit.lo)) break;  // X_{j-1} must stay below the limit
        const RInterval<F> xj = p.a0 * kj * t13;
        DyadicBlock<F> b;
        b.j = j;
        b.n_start = static_cast<long>(std::floor(xprev.lo));
        b.n_end = std::min(static_cast<long>(std::floor(xj.lo)), n_limit);
        b.boundary_ambiguous = std::floor(xprev.lo) != std::floor(xprev.hi) ||
                               std::floor(xj.lo) != std::floor(xj.hi) ||
                               std::floor(limit.lo) != std::floor(limit.hi);
        const RInterval<F> mval = kj * p.theta;
        b.modulus = static_cast<long>(std::floor(mval.lo)) + 1;
        if (b.n_end > b.n_start) out.push_back(b);
        xprev = xj;
        kj = kj * p.k;
    }
    return out;
}

template <std::floating_point F>
struct BlockCheck {
    DyadicBlock<F> block;
    RInterval<F> direct_sq;  // max_L |S_j|^2, direct enclosure
    RInterval<F> b_form;     // B1 k^j t^{2/3} + B2 t^{2/3} + B3 k^j t^{1/3} + B4 k^{2j} t^{1/3}
    bool pass = false;
};

// direct max_{L <= n_end-n_start} |sum_{n=n_start+1}^{n_start+L} e^{-it log n}|^2
// against the B-form for block j
template <std::floating_point F>
inline BlockCheck<F> check_block_bound(const BoundParams<F>& p, F t, const DyadicBlock<F>& blk) {
    BlockCheck<F> out;
    out.block = blk;
    const RInterval<F> ti(t);
    auto& cache = detail::int_log_cache<F>();
    CInterval<F> acc{RInterval<F>(F(0)), RInterval<F>(F(0))};
    RInterval<F> best(F(0));
    for (long n = blk.n_start + 1; n <= blk.n_end; ++n) {
        acc = acc + unit_phase(-(ti * cache.log_of(n)));
        best = hull(best, abs2(acc));
    }
    out.direct_sq = best;
    const ConstantsChain<F> c = compute_chain(p);
    const RInterval<F> t13 = cbrt(ti);
    const RInterval<F> t23 = t13 * t13;
    const RInterval<F> kj = powi(p.k, blk.j);
    out.b_form = c.b1 * kj * t23 + c.b2 * t23 + c.b3 * kj * t13 +
                 c.b4 * kj * kj * t13;
    out.pass = out.direct_sq.hi <= out.b_form.lo;
    return out;
}

template <std::floating_point F>
inline std::vector<BlockCheck<F>> check_all_blocks(const BoundParams<F>& p, F t) {
    std::vector<BlockCheck<F>> out;
    for (const auto& b : dyadic_blocks(p, t)) out.push_back(check_block_bound(p, t, b));
    return out;
}

// ------------------------------------------------------------------
// parameter search over a (k, theta, A0) box with the certified supremum
// as objective; grid plus shrinking refinement, deterministic tie-break

template <std::floating_point F>
struct ParamBox {
    F k_lo, k_hi;
    F theta_lo, theta_hi;
    F a0_lo, a0_hi;
};

template <std::floating_point F>
struct OptimizeResult {
    BoundParams<F> params;
    F certified = std::numeric_limits<F>::infinity();  // verified sup-ratio bound
    bool feasible = false;
};

template <std::floating_point F>
inline OptimizeResult<F> optimize_params(const ParamBox<F>& box, F t0, F target,
                                         int grid = 7, int rounds = 4) {
    if (!(box.k_lo <= box.k_hi) || !(box.theta_lo <= box.theta_hi) ||
        !(box.a0_lo <= box.a0_hi))
        throw std::invalid_argument("optimize_params: degenerate box ordering");
    ParamBox<F> cur = box;
    OptimizeResult<F> best;
    const RInterval<F> t0_iv(t0);
    for (int round = 0; round < rounds; ++round) {
        F bk = 0, bth = 0, ba0 = 0;
        for (int i = 0; i < grid; ++i)
            for (int jj = 0; jj < grid; ++jj)
                for (int l = 0; l < grid; ++l) {
                    auto coord = [&](F lo, F hi, int idx) {
                        return grid == 1 ? lo : lo + (hi - lo) * F(idx) / F(grid - 1);
                    };
                    const F k = coord(cur.k_lo, cur.k_hi, i);
                    const F th = coord(cur.theta_lo, cur.theta_hi, jj);
                    const F a0 = coord(cur.a0_lo, cur.a0_hi, l);
                    BoundParams<F> p{RInterval<F>(k), RInterval<F>(th), RInterval<F>(a0), t0_iv};
                    if (!feasibility(p).all()) continue;
                    const auto rep = verify_large_t(p, target);
                    const F val = rep.sup_bound.hi;
                    const bool better =
                        !best.feasible || val < best.certified ||
                        (val == best.certified &&
                         std::tie(k, th, a0) < std::tie(bk, bth, ba0));
                    if (better) {
                        best.params = p;
                        best.certified = val;
                        best.feasible = true;
                        bk = k; bth = th; ba0 = a0;
                    }
                }
        if (!best.feasible) break;
        auto shrink = [&](F lo, F hi, F center) {
            const F half = (hi - lo) / F(4);
            return std::pair<F, F>{std::max(lo, center - half), std::min(hi, center + half)};
        };
        std::tie(cur.k_lo, cur.k_hi) = shrink(box.k_lo, box.k_hi, bk);
        std::tie(cur.theta_lo, cur.theta_hi) = shrink(box.theta_lo, box.theta_hi, bth);
        std::tie(cur.a0_lo, cur.a0_hi) = shrink(box.a0_lo, box.a0_hi, ba0);
    }
    if (!best.feasible)
        throw std::domain_error("optimize_params: no feasible parameters in the box");
    return best;
}

} // namespace zetabound
