#pragma once

// Interval Riemann-Siegel evaluation of |Z(t)| = |zeta(1/2+it)| for t >= 200:
//
//   Z(t) = 2 sum_{n<=m} n^{-1/2} cos(theta(t) - t log n)
//        + (-1)^{m+1} a^{-1/2} sum_{j=0}^{K} C_j(z) a^{-j} + R_K(t),
//
// a = sqrt(t/2pi), m = floor(a), p = a - m, z = 1 - 2p, and
// F(z) = cos(pi z^2/2 + 3pi/8) / cos(pi z).  The correction coefficients
// are Gabcke's (Doctoral thesis, Goettingen 1979):
//
//   C0 = F
//   C1 = F^(3) / (12 pi^2)
//   C2 = F^(2) / (16 pi^2) + F^(6) / (288 pi^4)
//   C3 = F^(1) / (32 pi^2) + F^(5) / (120 pi^4) + F^(9) / (10368 pi^6)
//   C4 = F^(0) / (128 pi^2) + 19 F^(4) / (1536 pi^4)
//      + 11 F^(8) / (23040 pi^6) + F^(12) / (497664 pi^8)
//
// with remainder |R_K| <= gabcke_c[K] * t^{-(2K+3)/4} for t >= 200, where
// gabcke_c = {0.127, 0.053, 0.011, 0.031, 0.017} (same source).
//
// F derivatives are evaluated with interval Taylor-jet arithmetic.  F is
// entire: its apparent poles at half-integers are removable (the numerator
// vanishes there too, since (2k+1)^2 + 3 == 4 mod 8).  Near z0 = +-1/2 the
// quotient is formed from the deflated series N(z)/(z-z0) and D(z)/(z-z0);
// the k-th Taylor coefficient of a deflated function at any z in H =
// hull(Z, z0) is contained in the (k+1)-st coefficient enclosure of the
// parent jet over H (integral mean value form of the slope), so shifting
// the jet down by one is a rigorous deflation.

#include "zetabound/interval.hpp"
#include "zetabound/cinterval.hpp"
#include "zetabound/zeta_em.hpp"

#include <array>
#include <stdexcept>

namespace zetabound {

struct RSParams {
    int terms = 2;  // Gabcke correction terms used, 0..4
};

struct FloorChangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr int kJetMax = 14;

template <std::floating_point F>
struct Jet {
    std::array<RInterval<F>, kJetMax> c{};
    int len = 0;
};

// jet of cos(g) for quadratic g(z0+h) = g0 + g1 h + g2 h^2, via the
// standard coupled recurrence with sin(g)
template <std::floating_point F>
inline Jet<F> jet_cos_quadratic(const RInterval<F>& g0, const RInterval<F>& g1,
                                const RInterval<F>& g2, int len) {
    Jet<F> u, v;
    u.len = v.len = len;
    const auto sc = sincos(g0);
    u.c[0] = sc.c;
    v.c[0] = sc.s;
    for (int k = 1; k < len; ++k) {
        RInterval<F> du = g1 * v.c[k - 1];
        RInterval<F> dv = g1 * u.c[k - 1];
        if (k >= 2) {
            du = du + F(2) * (g2 * v.c[k - 2]);
            dv = dv + F(2) * (g2 * u.c[k - 2]);
        }
        u.c[k] = -du / static_cast<F>(k);
        v.c[k] = dv / static_cast<F>(k);
    }
    return u;
}

template <std::floating_point F>
inline Jet<F> jet_div(const Jet<F>& n, const Jet<F>& d) {
    Jet<F> q;
    q.len = n.len;
    for (int k = 0; k < q.len; ++k) {
        RInterval<F> acc = n.c[k];
        for (int i = 0; i < k; ++i) acc = acc - q.c[i] * d.c[k - i];
        q.c[k] = acc / d.c[0];
    }
    return q;
}

template <std::floating_point F>
inline Jet<F> jet_shift_down(const Jet<F>& j) {
    Jet<F> out;
    out.len = j.len - 1;
    for (int k = 0; k < out.len; ++k) out.c[k] = j.c[k + 1];
    return out;
}

// numerator N(z) = cos(pi z^2/2 + 3 pi/8): g0 = pi/2 Z^2 + 3pi/8,
// g1 = pi Z, g2 = pi/2
template <std::floating_point F>
inline Jet<F> jet_numer(const RInterval<F>& Z, int len) {
    const RInterval<F> pi = pi_iv<F>();
    const RInterval<F> g0 = pi * (Z * Z) / F(2) + pi * F(3) / F(8);
    return jet_cos_quadratic(g0, pi * Z, pi / F(2), len);
}

// denominator D(z) = cos(pi z): g0 = pi Z, g1 = pi, g2 = 0
template <std::floating_point F>
inline Jet<F> jet_denom(const RInterval<F>& Z, int len) {
    const RInterval<F> pi = pi_iv<F>();
    return jet_cos_quadratic(pi * Z, pi, RInterval<F>(F(0)), len);
}

// Taylor jet of F at Z (coefficient k encloses F^(k)(z)/k! for every z in Z)
template <std::floating_point F>
inline Jet<F> jet_F(const RInterval<F>& Z, int len) {
    Jet<F> d = jet_denom(Z, len);
    F dist = std::numeric_limits<F>::infinity();
    F z0 = F(0.5);
    for (F cand : {F(-0.5), F(0.5)}) {
        const F lo = Z.lo - cand, hi = Z.hi - cand;
        const F dd = (lo > F(0)) ? lo : ((hi < F(0)) ? -hi : F(0));
        if (dd < dist) { dist = dd; z0 = cand; }
    }
    if (!d.c[0].contains_zero() && dist > F(32) * Z.width() + F(1e-12)) {
        return jet_div(jet_numer(Z, len), d);
    }
    const RInterval<F> H = hull(Z, RInterval<F>(z0));
    Jet<F> nh = jet_numer(H, len + 1);
    Jet<F> dh = jet_denom(H, len + 1);
    return jet_div(jet_shift_down(nh), jet_shift_down(dh));
}

template <std::floating_point F>
inline const RInterval<F>* pi_even_powers() {
    // pi^2, pi^4, pi^6, pi^8
    static const RInterval<F> tab[4] = {powi(pi_iv<F>(), 2), powi(pi_iv<F>(), 4),
                                        powi(pi_iv<F>(), 6), powi(pi_iv<F>(), 8)};
    return tab;
}

// C_0..C_terms at z; the dyadic multipliers fold the k! factors of
// F^(k) = k! f_k into the coefficient denominators above
template <std::floating_point F>
inline std::array<RInterval<F>, 5> rs_coefficients(const RInterval<F>& Z, int terms) {
    const Jet<F> f = jet_F(Z, 3 * terms + 1);
    const RInterval<F>* pw = pi_even_powers<F>();
    std::array<RInterval<F>, 5> C{};
    C[0] = f.c[0];
    if (terms >= 1) C[1] = f.c[3] * F(0.5) / pw[0];
    if (terms >= 2) C[2] = f.c[2] * F(0.125) / pw[0] + f.c[6] * F(2.5) / pw[1];
    if (terms >= 3)
        C[3] = f.c[1] * F(0.03125) / pw[0] + f.c[5] / pw[1] + f.c[9] * F(35) / pw[2];
    if (terms >= 4)
        C[4] = f.c[0] * F(0.0078125) / pw[0] + f.c[4] * F(0.296875) / pw[1] +
               f.c[8] * F(19.25) / pw[2] + f.c[12] * F(962.5) / pw[3];
    return C;
}

template <std::floating_point F>
inline F gabcke_constant(int terms) {
    // Gabcke (1979); upper-rounded so the stored double dominates the constant
    static const F tab[5] = {detail::next_up(F(0.127)), detail::next_up(F(0.053)),
                             detail::next_up(F(0.011)), detail::next_up(F(0.031)),
                             detail::next_up(F(0.017))};
    return tab[terms];
}

// truncated alternating series with the first omitted term as the bracket:
// atan u for 0 < u <= 0.0025, log(1+v) for 0 < v <= 7e-6
template <std::floating_point F>
inline RInterval<F> atan_small(const RInterval<F>& u) {
    const RInterval<F> u2 = u * u;
    const RInterval<F> part = u - u * u2 / F(3) + u * u2 * u2 / F(5);
    F rem = u.mag();
    F m2 = detail::next_up(u.mag() * u.mag());
    rem = detail::next_up(rem * m2);
    rem = detail::next_up(rem * m2);
    rem = detail::next_up(rem * m2);
    rem = detail::next_up(rem / F(7));
    return part + RInterval<F>(-rem, F(0));
}

template <std::floating_point F>
inline RInterval<F> log1p_small(const RInterval<F>& v) {
    const RInterval<F> part = v - v * v / F(2) + v * v * v / F(3);
    F m = v.mag(), rem = m;
    for (int i = 0; i < 3; ++i) rem = detail::next_up(rem * m);
    rem = detail::next_up(rem / F(4));
    return part + RInterval<F>(-rem, F(0));
}

} // namespace detail

// Riemann-Siegel theta function for t >= 200, from Stirling's series for
// Im log Gamma(1/4 + it/2) with the sector remainder bound
//   |R_m(w)| <= |B_{2m+2}| sec^{2m+2}(arg(w)/2) / ((2m+1)(2m+2)|w|^{2m+1})
// (classical; Olver, Asymptotics and Special Functions, ch. 8).  Here
// arg(w) < pi/2 so sec(arg/2) <= sqrt 2, and with m = 3 terms the bound is
// 16/(1680 |w|^7) <= 1.22/t^7.  The arctangent and log(1+x) pieces of the
// imaginary part are expanded with explicit alternating-series brackets.
template <std::floating_point F>
inline RInterval<F> rs_theta(const RInterval<F>& t) {
    if (!(t.lo >= F(200))) throw std::domain_error("rs_theta: requires t >= 200");
    const RInterval<F> half_t = t / F(2);
    const CInterval<F> w{RInterval<F>(F(0.25)), half_t};
    const CInterval<F> one{RInterval<F>(F(1)), RInterval<F>(F(0))};
    const CInterval<F> winv = one / w;
    const CInterval<F> winv2 = winv * winv;
    const CInterval<F> w3 = winv * winv2;
    const CInterval<F> w5 = w3 * winv2;
    // Im[(w - 1/2) log w - w] with log w = log|w| + i arg w,
    // arg w = pi/2 - atan(1/(2t)), log|w| = log(t/2) + log1p(1/(4t^2))/2
    const RInterval<F> inv2t = RInterval<F>(F(1)) / (F(2) * t);
    const RInterval<F> argw = half_pi_iv<F>() - detail::atan_small(inv2t);
    const RInterval<F> log_abs =
        log(half_t) + detail::log1p_small(RInterval<F>(F(1)) / (F(4) * (t * t))) / F(2);
    RInterval<F> theta = RInterval<F>(F(-0.25)) * argw + half_t * log_abs - half_t;
    // Stirling's correction terms B_2/(1*2) w^-1, B_4/(3*4) w^-3, B_6/(5*6) w^-5
    theta = theta + winv.im / F(12) - w3.im / F(360) + w5.im / F(1260);
    const RInterval<F> eps =
        RInterval<F>(F(16)) / (F(1680) * powi(half_t, 7));
    theta = theta + RInterval<F>(-eps.hi, eps.hi);
    // subtract (t/2) log pi
    return theta - half_t * log(pi_iv<F>());
}

// Riemann-Siegel enclosure of |zeta(1/2+it)|.  Preconditions: t.lo >= 200
// and floor(sqrt(t/2pi)) constant across the interval (otherwise
// FloorChangeError; the caller falls back to Euler-Maclaurin).
template <std::floating_point F>
inline RInterval<F> rs_abs_zeta(const RInterval<F>& t, const RSParams& p = {}) {
    if (p.terms < 0 || p.terms > 4)
        throw std::invalid_argument("rs_abs_zeta: terms must be in [0,4]");
    if (!(t.lo >= F(200))) throw std::domain_error("rs_abs_zeta: requires t >= 200");
    const RInterval<F> a = sqrt(t / two_pi_iv<F>());
    const F m_lo = std::floor(a.lo), m_hi = std::floor(a.hi);
    if (m_lo != m_hi)
        throw FloorChangeError("rs_abs_zeta: main-sum length changes inside the interval");
    const long m = static_cast<long>(m_lo);

    const RInterval<F> theta = rs_theta(t);
    auto& cache = detail::int_log_cache<F>();
    RInterval<F> main(F(0));
    for (long n = 1; n <= m; ++n) {
        const RInterval<F> phase = theta - t * cache.log_of(n);
        main = main + cache.rsqrt_of(n) * cos(phase);
    }

    const RInterval<F> z = F(1) - F(2) * (a - RInterval<F>(static_cast<F>(m)));
    const auto C = detail::rs_coefficients(z, p.terms);
    const RInterval<F> ainv = RInterval<F>(F(1)) / a;
    RInterval<F> corr(F(0));
    RInterval<F> apow(F(1));
    for (int j = 0; j <= p.terms; ++j) {
        corr = corr + C[static_cast<size_t>(j)] * apow;
        apow = apow * ainv;
    }
    corr = corr / sqrt(a);
    const F sign = (m % 2 == 0) ? F(-1) : F(1);  // (-1)^{m+1}
    RInterval<F> Z = F(2) * main + RInterval<F>(sign) * corr;

    const RInterval<F> rem =
        RInterval<F>(detail::gabcke_constant<F>(p.terms)) *
        pow(t, -(F(2 * p.terms) + F(3)) / F(4));
    Z = Z + RInterval<F>(-rem.hi, rem.hi);
    return abs_iv(Z);
}

} // namespace zetabound
