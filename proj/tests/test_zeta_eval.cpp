#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetabound/zeta.hpp"
#include "support/mpfr_real.hpp"

#include <random>

using namespace zetabound;
using oracle::Real;

namespace {

// reference values, themselves cross-checked against the in-test oracle
constexpr double kZetaHalf = -1.4603545088095868;      // zeta(1/2)
constexpr double kZetaTwo = 1.6449340668482264;        // pi^2/6
constexpr double kAbsZeta2i = 0.53963312564614487;     // |zeta(1/2+2i)|
constexpr double kFirstZero = 14.1347251417;           // truncated first zero ordinate
constexpr double kAbsZeta300 = 0.77298701299230423;

double oracle_abs_zeta(double t) {
    return oracle::abs_zeta_half_reference(Real(t)).to_double();
}

} // namespace

TEST_CASE("Euler-Maclaurin point examples") {
    const Cv z_half = em_zeta(Cv(Iv(0.5), Iv(0.0)), EMParams{64, 10});
    CHECK(z_half.re.contains(kZetaHalf));
    CHECK(z_half.im.contains(0.0));
    CHECK(z_half.re.width() < 1e-10);

    const Cv z_two = em_zeta(Cv(Iv(2.0), Iv(0.0)), EMParams{32, 8});
    CHECK(z_two.re.contains(kZetaTwo));

    const Iv near_zero = em_abs_zeta_half(Iv(kFirstZero));
    CHECK(near_zero.lo < 1e-6);
    CHECK(near_zero.hi < 1e-9);  // truly tiny there, not just wide
}

TEST_CASE("Euler-Maclaurin rejects the pole and bad parameters") {
    CHECK_THROWS_AS((void)em_zeta(Cv(Iv(0.9, 1.1), Iv(-0.1, 0.1)), EMParams{16, 4}),
                    std::domain_error);
    CHECK_THROWS_AS((void)em_zeta(Cv(Iv(2.5), Iv(0.0)), EMParams{16, 4}), std::domain_error);
    CHECK_THROWS_AS((void)em_zeta(Cv(Iv(0.5), Iv(1.0)), EMParams{1, 4}),
                    std::invalid_argument);
}

TEST_CASE("oracle containment at sampled heights") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double t = 0.5 + 400.0 * U(rng) * U(rng);
        const Iv enc = abs_zeta_half(Iv(std::max(t, 0.1))).value;
        const Real ref = oracle::abs_zeta_half_reference(Real(std::max(t, 0.1)));
        CHECK(ref.fits_between(enc.lo, enc.hi));
    }
}

TEST_CASE("Riemann-Siegel agrees with Euler-Maclaurin and the oracle") {
    for (int terms = 0; terms <= 4; ++terms) {
        const Iv r = rs_abs_zeta(Iv(300.0), RSParams{terms});
        CHECK(r.contains(kAbsZeta300));
        const Iv e = em_abs_zeta_half(Iv(300.0));
        CHECK(r.intersects(e));
    }
    // enclosures tighten as correction terms are added
    CHECK(rs_abs_zeta(Iv(300.0), RSParams{2}).width() <
          rs_abs_zeta(Iv(300.0), RSParams{0}).width());
}

TEST_CASE("cross-method agreement at random points of [200, 1e4]") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double t = 200.0 + (1e4 - 200.0) * U(rng);
        const Iv rs = rs_abs_zeta(Iv(t), RSParams{2});
        const Iv em = em_abs_zeta_half(Iv(t));
        CHECK(rs.intersects(em));
    }
}

TEST_CASE("interval widening is real, not suppressed") {
    const Iv point = rs_abs_zeta(Iv(1000.0), RSParams{2});
    const Iv wide = rs_abs_zeta(Iv(1000.0, 1000.0005), RSParams{2});
    CHECK(wide.width() > point.width());
    CHECK(wide.contains(0.99779463752158661));
}

TEST_CASE("floor-change intervals are rejected and rerouted") {
    // sqrt(t/2pi) passes the integer 16 at t = 2 pi 16^2 ~ 1608.495
    CHECK_THROWS_AS((void)rs_abs_zeta(Iv(1608.4, 1608.6), RSParams{2}), FloorChangeError);
    const auto enc = abs_zeta_half(Iv(1608.4, 1608.6));
    CHECK(enc.method == ZetaMethod::EM);
    const auto pt = abs_zeta_half(Iv(1608.5));
    CHECK(pt.value.intersects(enc.value));
}

TEST_CASE("dispatcher examples") {
    CHECK(abs_zeta_half(Iv(150.0, 150.001)).method == ZetaMethod::EM);
    CHECK(abs_zeta_half(Iv(1e4, 1e4 + 1e-3)).method == ZetaMethod::RS);
    const auto two = abs_zeta_half(Iv(2.0));
    CHECK(two.value.contains(kAbsZeta2i));
    CHECK_THROWS_AS((void)abs_zeta_half(Iv(0.05)), std::domain_error);
}

TEST_CASE("refinement: bisection unions stay inside the parent enclosure") {
    const EMParams fixed{256, 10};
    for (double t : {50.0, 120.0, 190.0}) {
        const Iv parent = cabs(em_zeta(Cv(Iv(0.5), Iv(t, t + 0.002)), fixed));
        const Iv left = cabs(em_zeta(Cv(Iv(0.5), Iv(t, t + 0.001)), fixed));
        const Iv right = cabs(em_zeta(Cv(Iv(0.5), Iv(t + 0.001, t + 0.002)), fixed));
        const Iv u = hull(left, right);
        const double slack = 4 * (std::nextafter(parent.hi, HUGE_VAL) - parent.hi);
        CHECK(u.lo >= parent.lo - slack);
        CHECK(u.hi <= parent.hi + slack);
    }
    const RSParams rs{2};
    const Iv parent = rs_abs_zeta(Iv(900.0, 900.001), rs);
    const Iv u = hull(rs_abs_zeta(Iv(900.0, 900.0005), rs),
                      rs_abs_zeta(Iv(900.0005, 900.001), rs));
    CHECK(parent.contains(u));
}

TEST_CASE("conjugate symmetry spot-check") {
    for (double t : {5.0, 37.5, 141.25}) {
        const Iv plus = cabs(em_zeta(Cv(Iv(0.5), Iv(t)), EMParams{256, 10}));
        const Iv minus = cabs(em_zeta(Cv(Iv(0.5), Iv(-t)), EMParams{256, 10}));
        CHECK(plus.intersects(minus));
    }
}

TEST_CASE("theta function encloses reference values") {
    struct { double t, want; } cases[] = {
        {200, 245.65143509898897},
        {280, 391.17513046950512},
        {1000, 2034.5464280380316},
        {10000, 31861.923830835821},
    };
    for (const auto& c : cases) {
        const Iv th = rs_theta(Iv(c.t));
        CHECK(th.contains(c.want));
        CHECK(th.width() < 1e-9);
    }
    CHECK_THROWS_AS((void)rs_theta(Iv(150.0)), std::domain_error);
}

TEST_CASE("auto parameter selection tightens the remainder") {
    const Cv s{Iv(0.5), Iv(40.0)};
    const EMParams p = em_auto_params(s, 1e-12);
    CHECK(p.n_terms >= 60);
    CHECK(em_remainder_bound(s, p.n_terms, p.k_terms) <= 5e-13);
}

TEST_CASE("reference oracle is self-consistent") {
    // the in-test reference matches an independently computed digit string
    CHECK(std::fabs(oracle_abs_zeta(2.0) - kAbsZeta2i) < 1e-13);
    CHECK(std::fabs(oracle::zeta_em_reference({Real(0.5), Real(0.0)}).re.to_double() -
                    kZetaHalf) < 1e-13);
}
