#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetabound/cinterval.hpp"
#include "zetabound/interval.hpp"
#include "support/mpfr_real.hpp"

#include <cmath>
#include <random>

using namespace zetabound;
using oracle::Real;

namespace {

bool oracle_inside(const Real& v, const Iv& enc) { return v.fits_between(enc.lo, enc.hi); }

double rnd(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Iv rnd_iv(std::mt19937_64& rng, double lo, double hi) {
    double a = rnd(rng, lo, hi), b = rnd(rng, lo, hi);
    if (a > b) std::swap(a, b);
    return Iv(a, b);
}

} // namespace

TEST_CASE("endpoint arithmetic matches the hand examples") {
    const Iv s = Iv(1, 2) + Iv(3, 4);
    CHECK(s.contains(4.0));
    CHECK(s.contains(6.0));
    CHECK(s.lo > 4.0 - 1e-14);
    CHECK(s.hi < 6.0 + 1e-14);

    const Iv m = Iv(-1, 2) * Iv(3, 4);
    CHECK(m.contains(-4.0));
    CHECK(m.contains(8.0));
    CHECK(m.lo > -4.0000000001);
    CHECK(m.hi < 8.0000000001);

    const Iv d = Iv(1.0) / Iv(3.0);
    CHECK(d.lo < 1.0 / 3.0 + 1e-18);
    CHECK(d.hi > 0.3333333333333333);
    CHECK(d.lo < d.hi);  // outward rounding is forced, 1/3 not representable
}

TEST_CASE("division by a zero-straddling interval is an explicit unbounded result") {
    const Iv q = Iv(1.0) / Iv(-1, 1);
    CHECK(q.is_entire());
    CHECK(std::isinf(q.lo));
    CHECK(std::isinf(q.hi));
}

TEST_CASE("width control: point-input arithmetic stays within 4 ulp") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const double x = rnd(rng, -1e8, 1e8), y = rnd(rng, -1e8, 1e8);
        const Iv xs(x), ys(y);
        for (const Iv r : {xs + ys, xs - ys, xs * ys}) {
            const double ulp = std::nextafter(std::fabs(r.hi) + std::fabs(r.lo), HUGE_VAL) -
                               (std::fabs(r.hi) + std::fabs(r.lo));
            CHECK(r.width() <= 4 * ulp + 4e-307);
        }
        if (y != 0.0) {
            const Iv r = xs / ys;
            const double mag = std::fabs(r.lo);
            CHECK(r.width() <= 4 * (std::nextafter(mag, HUGE_VAL) - mag) + 4e-307);
        }
    }
}

TEST_CASE("elementary function examples") {
    const Iv e0 = exp(Iv(0.0));
    CHECK(e0.contains(1.0));
    CHECK(e0.width() <= 2 * (std::nextafter(1.0, 2.0) - 1.0));

    const Iv le = log(exp(Iv(1.0)));
    CHECK(le.contains(1.0));

    const Iv sp = sin(Iv(0.0, 3.141592653589793));
    CHECK(sp.hi >= 1.0);
    CHECK(sp.contains(0.5));
    CHECK(sp.contains(1.0));

    CHECK_THROWS_AS((void)log(Iv(-1.0, 2.0)), std::domain_error);
    CHECK_THROWS_AS((void)sqrt(Iv(-0.5, 2.0)), std::domain_error);
}

TEST_CASE("cabs examples") {
    const Iv h = cabs(Cv(Iv(3.0), Iv(4.0)));
    CHECK(h.contains(5.0));
    CHECK(h.width() < 1e-14);

    const Iv z = cabs(Cv(Iv(-1, 1), Iv(-1, 1)));
    CHECK(z.lo == 0.0);
    CHECK(z.hi >= std::sqrt(2.0));
    CHECK(z.hi < 1.4142135623731);

    const Iv r = cabs(Cv(Iv(1, 2), Iv(0.0)));
    CHECK(r.contains(1.0));
    CHECK(r.contains(2.0));
}

TEST_CASE("containment fuzz against the MPFR oracle") {
    std::mt19937_64 rng(20240814);
    const int trials = 200000;  // the acceptance suite runs the full 1e6 per op
    int bad = 0;
    for (int i = 0; i < trials; ++i) {
        const double x = rnd(rng, -60, 60), y = rnd(rng, -60, 60);
        const Iv xi(x), yi(y);
        const Real xr(x), yr(y);
        if (!oracle_inside(xr + yr, xi + yi)) ++bad;
        if (!oracle_inside(xr - yr, xi - yi)) ++bad;
        if (!oracle_inside(xr * yr, xi * yi)) ++bad;
        if (y != 0 && !oracle_inside(xr / yr, xi / yi)) ++bad;
        if (!oracle_inside(oracle::r_sin(xr), sin(xi))) ++bad;
        if (!oracle_inside(oracle::r_cos(xr), cos(xi))) ++bad;
        const double e = x / 10;
        if (!oracle_inside(oracle::r_exp(Real(e)), exp(Iv(e)))) ++bad;
        const double p = std::fabs(x) + 1e-9;
        if (!oracle_inside(oracle::r_log(Real(p)), log(Iv(p)))) ++bad;
        if (!oracle_inside(oracle::r_sqrt(Real(p)), sqrt(Iv(p)))) ++bad;
        const double w = std::fabs(y) / 10;
        if (!oracle_inside(oracle::r_pow(Real(p), Real(w)), pow(Iv(p), w))) ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("containment fuzz for the extended lane") {
    std::mt19937_64 rng(99);
    using LIv = RInterval<long double>;
    int bad = 0;
    for (int i = 0; i < 20000; ++i) {
        const long double x = static_cast<long double>(rnd(rng, -50, 50)) +
                              static_cast<long double>(rnd(rng, -1e-18, 1e-18));
        const Real xr(static_cast<double>(x));
        // exercise the long double kernels on their own inputs
        const LIv si = sin(LIv(x));
        Real xv(0.0);
        mpfr_set_ld(xv.get(), x, MPFR_RNDN);
        Real sv(0.0);
        mpfr_sin(sv.get(), xv.get(), MPFR_RNDN);
        if (!sv.fits_between_ld(si.lo, si.hi)) ++bad;
        const LIv ei = exp(LIv(x / 16));
        Real ev(0.0), xq(0.0);
        mpfr_set_ld(xq.get(), x / 16, MPFR_RNDN);
        mpfr_exp(ev.get(), xq.get(), MPFR_RNDN);
        if (!ev.fits_between_ld(ei.lo, ei.hi)) ++bad;
        (void)xr;
    }
    CHECK(bad == 0);
}

TEST_CASE("inclusion monotonicity") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 20000; ++i) {
        const Iv a = rnd_iv(rng, -20, 20);
        const Iv b = rnd_iv(rng, -20, 20);
        const Iv A = hull(a, rnd_iv(rng, -20, 20));
        const Iv B = hull(b, rnd_iv(rng, -20, 20));
        CHECK((A + B).contains(a + b));
        CHECK((A - B).contains(a - b));
        CHECK((A * B).contains(a * b));
        if (!B.contains_zero()) CHECK((A / B).contains(a / b));
        CHECK(sin(A).contains(sin(a)));
        CHECK(cos(A).contains(cos(a)));
        if (a.lo > 0 && A.lo > 0) {
            CHECK(log(A).contains(log(a)));
            CHECK(sqrt(A).contains(sqrt(a)));
        }
    }
}

TEST_CASE("interval trig catches interior extrema across big reductions") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 2000; ++i) {
        const double base = rnd(rng, -1e7, 1e7);
        const Iv x(base, base + rnd(rng, 0, 9));
        const Iv s = sin(x), c = cos(x);
        for (int k = 0; k <= 16; ++k) {
            const double p = x.lo + (x.hi - x.lo) * k / 16.0;
            CHECK(s.contains(std::sin(p)) );
            CHECK(c.contains(std::cos(p)) );
        }
    }
}

TEST_CASE("sharp roots bracket the oracle") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20000; ++i) {
        const double x = std::exp(rnd(rng, -10, 25));
        const Real xr(x);
        CHECK(oracle_inside(oracle::r_rootn(xr, 3), cbrt(Iv(x))));
        CHECK(oracle_inside(oracle::r_rootn(xr, 4), root4(Iv(x))));
        CHECK(oracle_inside(oracle::r_rootn(xr, 6), root6(Iv(x))));
        CHECK(oracle_inside(oracle::r_rootn(xr, 12), root12(Iv(x))));
    }
}

TEST_CASE("powi handles signs and zero straddles") {
    CHECK(powi(Iv(-2, 1), 2).contains(4.0));
    CHECK(powi(Iv(-2, 1), 2).lo == 0.0);
    CHECK(powi(Iv(-2, 1), 3).contains(-8.0));
    CHECK(powi(Iv(3.0), -2).contains(1.0 / 9));
    CHECK(powi(Iv(5.0), 0).contains(1.0));
}
