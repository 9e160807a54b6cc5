#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetabound/bounds_chain.hpp"
#include "zetabound/sweep.hpp"

#include <random>

using namespace zetabound;

namespace {

Iv dec(double v) {  // outward interval for an inexact decimal parameter
    return Iv(zetabound::detail::next_down(v), zetabound::detail::next_up(v));
}

BoundParams<double> paper_params() {
    return {dec(1.16), dec(7.5), dec(3.37), Iv(5.867e9)};
}

bool near(const Iv& x, double v, double tol) {
    return x.intersects(Iv(v - tol, v + tol)) && x.width() < tol;
}

} // namespace

TEST_CASE("feasibility of the published parameters") {
    const auto fr = feasibility(paper_params());
    CHECK(fr.all());
    CHECK(fr.con1_lhs > 363344.0);
    CHECK(fr.con1_lhs < 363346.0);
}

TEST_CASE("feasibility failures") {
    BoundParams<double> low_t0{dec(1.16), dec(7.5), dec(3.37), Iv(1e5)};
    CHECK_FALSE(feasibility(low_t0).con1);
    CHECK_FALSE(feasibility(low_t0).all());

    BoundParams<double> k_one{Iv(1.0), dec(7.5), dec(3.37), Iv(5.867e9)};
    CHECK_FALSE(feasibility(k_one).k_gt_1);

    BoundParams<double> tiny_theta{dec(1.16), Iv(1e-9), dec(3.37), Iv(5.867e9)};
    CHECK_FALSE(feasibility(tiny_theta).m_at_least_2);
}

TEST_CASE("chain constants at the published parameters") {
    const auto c = compute_chain(paper_params());
    CHECK(near(c.y0, 1.00123393608956, 1e-11));
    CHECK(near(c.a5, 0.938927847547517, 1e-10));
    CHECK(near(c.b1, 0.105639947641607, 1e-10));
    CHECK(near(c.c3, 10.2600737379959, 1e-9));
    CHECK(near(c.c5, -55.4425761928644, 1e-9));
    CHECK(near(c.d1, 0.428266827065357, 1e-10));
    CHECK(near(c.d2, 4.15548261728032, 1e-9));
    CHECK(near(c.d3, 12.0391138610667, 1e-9));
    CHECK(near(c.d4, 1.56373114710537, 1e-9));
    CHECK(near(c.d5, -67.0504481813491, 1e-8));
    CHECK(c.d1.hi <= 0.732);
    CHECK(c.d1.lo > 0.0);
}

TEST_CASE("chain algebra holds as interval identities for random parameters") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        BoundParams<double> p{Iv(1.02 + 0.8 * U(rng)), Iv(1.0 + 15.0 * U(rng)),
                              Iv(1.0 + 5.0 * U(rng)), Iv(1e9 * (1 + 9 * U(rng)))};
        if (!feasibility(p).all()) continue;
        const auto c = compute_chain(p);
        CHECK(c.b1.intersects(c.a4 + c.a5 * c.a6));
        CHECK(c.b2.intersects(c.a5 * c.a7));
        CHECK(c.b3.intersects(Iv(1.5) * c.a5));
        CHECK(c.b4.intersects(c.a5 * c.a8));
        CHECK(c.d1.lo > 0.0);
    }
}

TEST_CASE("tiny theta leaves the formulas finite (large, no crash)") {
    BoundParams<double> p{dec(1.16), Iv(1e-9), dec(3.37), Iv(5.867e9)};
    const auto c = compute_chain(p);  // structurally valid even though M >= 2 fails
    CHECK(std::isfinite(c.d1.hi));
    CHECK(c.a8.lo > 1e4);  // A8 = 4 A3/(3 sqrt(theta)) blows up as theta -> 0
    CHECK_THROWS_AS((void)verify_large_t(p, 0.732), std::domain_error);
}

TEST_CASE("theorem bound evaluation") {
    ConstantsChain<double> unit{};
    unit.d1 = Iv(1.0);
    unit.d2 = unit.d3 = unit.d4 = unit.d5 = Iv(0.0);
    const Iv t = exp(Iv(6.0));
    CHECK(theorem_bound_at(unit, t).contains(6 * 2.718281828459045));
    CHECK_THROWS_AS((void)theorem_bound_at(unit, Iv(1.5)), std::domain_error);

    // monotone in each coefficient for fixed t
    const auto c = compute_chain(paper_params());
    auto bumped = c;
    bumped.d1 = c.d1 + Iv(0.01);
    CHECK(theorem_bound_at(bumped, Iv(100.0)).lo > theorem_bound_at(c, Iv(100.0)).lo);
}

TEST_CASE("certified supremum at the published parameters") {
    const auto rep = verify_large_t(paper_params(), 0.732);
    CHECK(rep.pass);
    CHECK(rep.sup_bound.hi <= 0.732);
    CHECK(rep.sup_bound.lo > 0.7319);
    CHECK(rep.term[4].hi <= 1e-300);  // D5 < 0 contributes nothing

    // the claim is sharp: the supremum exceeds D1 alone
    const auto fail_rep = verify_large_t(paper_params(), rep.chain.d1.lo - 1e-6);
    CHECK_FALSE(fail_rep.pass);
    CHECK_FALSE(verify_large_t(paper_params(), 0.5).pass);
}

TEST_CASE("bound at t0 stays below the target shape there") {
    const auto c = compute_chain(paper_params());
    const Iv t0(5.867e9);
    const Iv lhs = theorem_bound_at(c, t0);
    const Iv rhs = power_log_bound(dec(0.732), t0);
    CHECK(lhs.hi <= rhs.lo);
}

TEST_CASE("D1 decreases as t0 grows") {
    double prev = 1e9;
    for (double t0 : {1e7, 1e8, 1e9, 1e10, 1e12}) {
        BoundParams<double> p{dec(1.16), dec(7.5), dec(3.37), Iv(t0)};
        const auto c = compute_chain(p);
        CHECK(c.d1.lo < prev);
        prev = c.d1.hi;
    }
}

TEST_CASE("dyadic blocks and the end-to-end block check at 1e6") {
    const auto p = paper_params();
    CHECK(dyadic_blocks(p, 1e4).empty());   // below A0^6 (2pi)^3
    CHECK(dyadic_blocks(p, 1e5).empty());
    const auto checks = check_all_blocks(p, 1e6);
    CHECK(checks.size() == 2);
    for (const auto& bc : checks) {
        CHECK(bc.pass);
        CHECK(bc.direct_sq.hi < bc.b_form.lo);
    }
}

TEST_CASE("partial-summation display at 1e6") {
    const auto p = paper_params();
    const double t = 1e6;
    auto& cache = zetabound::detail::int_log_cache<double>();
    const auto blocks = dyadic_blocks(p, t);
    REQUIRE(!blocks.empty());
    // left side: | sum over A0 t^{1/3} < n <= sqrt(t/2pi) of n^{-1/2-it} |
    Cv lhs_sum{Iv(0.0), Iv(0.0)};
    const long n_lo = blocks.front().n_start;
    const long n_hi = blocks.back().n_end;
    for (long n = n_lo + 1; n <= n_hi; ++n) {
        const auto sc = sincos(-(Iv(t) * cache.log_of(n)));
        const Iv w = cache.rsqrt_of(n);
        lhs_sum = lhs_sum + Cv{w * sc.c, w * sc.s};
    }
    const Iv lhs = cabs(lhs_sum);
    // right side: sum_j X_{j-1}^{-1/2} max_L |S_j|
    Iv rhs(0.0);
    const Iv t13 = cbrt(Iv(t));
    for (const auto& b : blocks) {
        Cv acc{Iv(0.0), Iv(0.0)};
        Iv best(0.0);
        for (long n = b.n_start + 1; n <= b.n_end; ++n) {
            acc = acc + unit_phase(-(Iv(t) * cache.log_of(n)));
            best = hull(best, cabs(acc));
        }
        const Iv xjm1 = p.a0 * powi(p.k, b.j - 1) * t13;
        rhs = rhs + Iv(best.hi) / sqrt(xjm1);
    }
    CHECK(lhs.lo <= rhs.hi);
    CHECK(lhs.hi < rhs.lo);  // comfortably dominated in practice
}

TEST_CASE("parameter search") {
    // degenerate box returns the point itself
    ParamBox<double> point{1.16, 1.16, 7.5, 7.5, 3.37, 3.37};
    const auto res = optimize_params(point, 5.867e9, 0.732, 1, 1);
    CHECK(res.feasible);
    CHECK(res.certified <= 0.732);

    // a box around the published point reaches the published constant
    ParamBox<double> box{1.10, 1.25, 5.0, 10.0, 3.0, 4.0};
    const auto best = optimize_params(box, 5.867e9, 0.732, 5, 3);
    CHECK(best.certified <= 0.732);

    // infeasible box: A0 so large that con1 fails at this t0
    ParamBox<double> bad{1.16, 1.16, 7.5, 7.5, 100.0, 120.0};
    CHECK_THROWS_AS((void)optimize_params(bad, 5.867e9, 0.732, 3, 1), std::domain_error);
}
