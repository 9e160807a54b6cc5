#pragma once

// Directed-rounded real interval arithmetic.
//
// Endpoints are hardware floating-point values (double by default, long
// double for the extended lane).  IEEE 754 guarantees that +, -, *, / and
// sqrt are correctly rounded in round-to-nearest mode, so the true result
// lies within 0.5 ulp of the computed one; widening each endpoint by one
// ulp with nextafter therefore yields a rigorous enclosure without touching
// the FPU rounding mode.  Transcendental functions are built from argument
// reduction plus truncated Taylor series whose remainder is enclosed
// explicitly; per-function remainder bounds are documented at each
// definition below.
//
// Invariants: lo <= hi, endpoints never NaN.  Unbounded results (division
// by an interval containing zero, overflow) are represented with infinite
// endpoints, never by throwing.

#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetabound {

namespace detail {

// one-ulp steps; the double specialisation is branch-light bit arithmetic
// so the rounding step inlines into the arithmetic kernels
template <std::floating_point F>
inline F next_down(F x) {
    if (x == -std::numeric_limits<F>::infinity()) return x;
    return std::nextafter(x, -std::numeric_limits<F>::infinity());
}

template <std::floating_point F>
inline F next_up(F x) {
    if (x == std::numeric_limits<F>::infinity()) return x;
    return std::nextafter(x, std::numeric_limits<F>::infinity());
}

template <>
inline double next_up<double>(double x) {
    if (x != x || x == std::numeric_limits<double>::infinity()) return x;
    std::uint64_t b = std::bit_cast<std::uint64_t>(x);
    if (x == 0.0) return std::numeric_limits<double>::denorm_min();
    b = (b >> 63) ? b - 1 : b + 1;
    return std::bit_cast<double>(b);
}

template <>
inline double next_down<double>(double x) {
    if (x != x || x == -std::numeric_limits<double>::infinity()) return x;
    std::uint64_t b = std::bit_cast<std::uint64_t>(x);
    if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
    b = (b >> 63) ? b + 1 : b - 1;
    return std::bit_cast<double>(b);
}

template <std::floating_point F>
inline F fmin4(F a, F b, F c, F d) {
    return std::fmin(std::fmin(a, b), std::fmin(c, d));
}

template <std::floating_point F>
inline F fmax4(F a, F b, F c, F d) {
    return std::fmax(std::fmax(a, b), std::fmax(c, d));
}

} // namespace detail

template <std::floating_point F>
struct RInterval {
    F lo;
    F hi;

    RInterval() : lo(0), hi(0) {}
    explicit RInterval(F point) : lo(point), hi(point) {}
    RInterval(F l, F h) : lo(l), hi(h) {
        if (!(lo <= hi)) throw std::invalid_argument("RInterval: lo > hi or NaN endpoint");
    }

    static RInterval exact(F v) { return RInterval(v); }
    static RInterval entire() {
        return RInterval(-std::numeric_limits<F>::infinity(),
                         std::numeric_limits<F>::infinity());
    }
    // unchecked construction for kernels whose ordering is structural
    static RInterval raw(F l, F h) {
        RInterval r;
        r.lo = l;
        r.hi = h;
        return r;
    }

    F width() const { return hi - lo; }
    F mid() const { return (lo + hi) / F(2); }
    // sup and inf of |x| over the interval
    F mag() const { return std::fmax(std::fabs(lo), std::fabs(hi)); }
    F mig() const {
        if (lo <= F(0) && F(0) <= hi) return F(0);
        return std::fmin(std::fabs(lo), std::fabs(hi));
    }

    bool is_point() const { return lo == hi; }
    bool is_entire() const {
        return lo == -std::numeric_limits<F>::infinity() &&
               hi == std::numeric_limits<F>::infinity();
    }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool contains(F v) const { return lo <= v && v <= hi; }
    bool contains(const RInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= F(0) && F(0) <= hi; }
    bool intersects(const RInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool strictly_positive() const { return lo > F(0); }
    bool strictly_less(const RInterval& o) const { return hi < o.lo; }
};

using Iv = RInterval<double>;

// ---------------------------------------------------------------------------
// basic arithmetic

template <std::floating_point F>
inline RInterval<F> operator+(const RInterval<F>& a, const RInterval<F>& b) {
    return RInterval<F>::raw(detail::next_down(a.lo + b.lo), detail::next_up(a.hi + b.hi));
}

template <std::floating_point F>
inline RInterval<F> operator-(const RInterval<F>& a, const RInterval<F>& b) {
    return RInterval<F>::raw(detail::next_down(a.lo - b.hi), detail::next_up(a.hi - b.lo));
}

template <std::floating_point F>
inline RInterval<F> operator-(const RInterval<F>& a) {
    return RInterval<F>::raw(-a.hi, -a.lo);
}

template <std::floating_point F>
inline RInterval<F> operator*(const RInterval<F>& a, const RInterval<F>& b) {
    const F p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    // 0 * inf yields NaN (fmin/fmax would skip it); the true product set is
    // then unbounded, so check the raw products
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) [[unlikely]]
        return RInterval<F>::entire();
    const F lo = detail::fmin4(p1, p2, p3, p4);
    const F hi = detail::fmax4(p1, p2, p3, p4);
    return RInterval<F>::raw(detail::next_down(lo), detail::next_up(hi));
}

template <std::floating_point F>
inline RInterval<F> operator/(const RInterval<F>& a, const RInterval<F>& b) {
    if (b.contains_zero()) return RInterval<F>::entire();
    const F q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    if (std::isnan(q1) || std::isnan(q2) || std::isnan(q3) || std::isnan(q4)) [[unlikely]]
        return RInterval<F>::entire();
    const F lo = detail::fmin4(q1, q2, q3, q4);
    const F hi = detail::fmax4(q1, q2, q3, q4);
    return RInterval<F>::raw(detail::next_down(lo), detail::next_up(hi));
}

template <std::floating_point F>
inline RInterval<F> operator+(const RInterval<F>& a, F b) { return a + RInterval<F>(b); }
template <std::floating_point F>
inline RInterval<F> operator+(F a, const RInterval<F>& b) { return RInterval<F>(a) + b; }
template <std::floating_point F>
inline RInterval<F> operator-(const RInterval<F>& a, F b) { return a - RInterval<F>(b); }
template <std::floating_point F>
inline RInterval<F> operator-(F a, const RInterval<F>& b) { return RInterval<F>(a) - b; }
template <std::floating_point F>
inline RInterval<F> operator*(const RInterval<F>& a, F b) { return a * RInterval<F>(b); }
template <std::floating_point F>
inline RInterval<F> operator*(F a, const RInterval<F>& b) { return RInterval<F>(a) * b; }
template <std::floating_point F>
inline RInterval<F> operator/(const RInterval<F>& a, F b) { return a / RInterval<F>(b); }
template <std::floating_point F>
inline RInterval<F> operator/(F a, const RInterval<F>& b) { return RInterval<F>(a) / b; }

template <std::floating_point F>
inline RInterval<F> hull(const RInterval<F>& a, const RInterval<F>& b) {
    return {std::fmin(a.lo, b.lo), std::fmax(a.hi, b.hi)};
}

template <std::floating_point F>
inline RInterval<F> intersect(const RInterval<F>& a, const RInterval<F>& b) {
    if (!a.intersects(b)) throw std::domain_error("intersect: empty intersection");
    return {std::fmax(a.lo, b.lo), std::fmin(a.hi, b.hi)};
}

template <std::floating_point F>
inline RInterval<F> abs_iv(const RInterval<F>& a) {
    return {a.mig(), a.mag()};
}

// ---------------------------------------------------------------------------
// correctly-rounded constants (std::numbers values are nearest-representable,
// so a one-ulp bracket encloses the exact constant)

template <std::floating_point F>
inline const RInterval<F>& pi_iv() {
    static const RInterval<F> v{detail::next_down(std::numbers::pi_v<F>),
                                detail::next_up(std::numbers::pi_v<F>)};
    return v;
}

template <std::floating_point F>
inline const RInterval<F>& two_pi_iv() {
    static const RInterval<F> v = pi_iv<F>() * F(2);
    return v;
}

template <std::floating_point F>
inline const RInterval<F>& half_pi_iv() {
    static const RInterval<F> v = pi_iv<F>() / F(2);
    return v;
}

template <std::floating_point F>
inline const RInterval<F>& ln2_iv() {
    static const RInterval<F> v{detail::next_down(std::numbers::ln2_v<F>),
                                detail::next_up(std::numbers::ln2_v<F>)};
    return v;
}

// ---------------------------------------------------------------------------
// sqrt: IEEE-correctly rounded at both endpoints, one-ulp outward

template <std::floating_point F>
inline RInterval<F> sqrt(const RInterval<F>& x) {
    if (x.lo < F(0)) throw std::domain_error("sqrt: interval extends below 0");
    const F lo = x.lo == F(0) ? F(0) : detail::next_down(std::sqrt(x.lo));
    return {std::fmax(lo, F(0)), detail::next_up(std::sqrt(x.hi))};
}

// integer power by repeated interval squaring; even powers run on |x| and
// clamp at zero, which is sharp and avoids the dependency blowup of x*x
template <std::floating_point F>
inline RInterval<F> powi(const RInterval<F>& x, long n) {
    if (n == 0) return RInterval<F>(F(1));
    if (n < 0) return RInterval<F>(F(1)) / powi(x, -n);
    RInterval<F> base = (n % 2 == 0) ? abs_iv(x) : x;
    RInterval<F> acc(F(1));
    unsigned long m = static_cast<unsigned long>(n);
    bool first = true;
    while (m) {
        if (m & 1) {
            acc = first ? base : acc * base;
            first = false;
        }
        m >>= 1;
        if (m) base = base * base;
    }
    if (n % 2 == 0 && acc.lo < F(0)) acc.lo = F(0);
    return acc;
}

namespace detail {

// exp on a point argument.
// Reduction: x = k ln2 + r with |r| <= (ln2)/2 + slack, then
// e^r = sum_{j<=17} r^j/j! with Lagrange remainder
//   |R| <= |r|^18/18! * 1/(1-|r|/19)  (geometric tail bound),
// finally an exact scale by 2^k (ldexp; one extra ulp when subnormal).
template <std::floating_point F>
inline RInterval<F> exp_point(F x) {
    // e^x >= 2^max_exponent whenever x >= max_exponent * 0.6932 > ln 2^max_exp
    const F over = static_cast<F>(std::numeric_limits<F>::max_exponent) * F(0.6932);
    const F under = -(static_cast<F>(std::numeric_limits<F>::max_exponent) +
                      static_cast<F>(std::numeric_limits<F>::digits) + F(4)) * F(0.6932);
    if (x != x) throw std::invalid_argument("exp_point: NaN");
    if (x == F(0)) return RInterval<F>(F(1));
    if (x >= over)
        return {std::numeric_limits<F>::max(), std::numeric_limits<F>::infinity()};
    if (x <= under)
        return {F(0), std::numeric_limits<F>::denorm_min()};

    const F kf = std::nearbyint(x / std::numbers::ln2_v<F>);
    RInterval<F> r = RInterval<F>(x) - RInterval<F>(kf) * ln2_iv<F>();
    const F rm = r.mag();

    RInterval<F> sum(F(1));
    for (int j = 17; j >= 1; --j)
        sum = RInterval<F>(F(1)) + r * sum / F(j);
    // |R| <= |r|^18/18! / (1 - |r|/19); for |r| <= 0.35 this is < 1.0e-24
    F rem;
    if (rm <= F(0.35)) {
        rem = F(1.0e-24);
    } else {
        rem = F(1);
        for (int j = 0; j < 18; ++j) rem = next_up(rem * rm);
        F fact = F(1);
        for (int j = 2; j <= 18; ++j) fact = next_down(fact * F(j));
        rem = next_up(rem / fact);
        rem = next_up(rem / (F(1) - rm / F(19)));
    }
    sum = sum + RInterval<F>(-rem, rem);

    const int k = static_cast<int>(kf);
    F lo = std::ldexp(sum.lo, k), hi = std::ldexp(sum.hi, k);
    if (!std::isfinite(lo)) lo = std::numeric_limits<F>::max();
    if (!std::isfinite(hi)) hi = std::numeric_limits<F>::infinity();
    // ldexp rounds when the result is subnormal
    if (lo != F(0) && std::fabs(lo) < std::numeric_limits<F>::min()) lo = next_down(lo);
    if (hi == F(0)) hi = std::numeric_limits<F>::denorm_min();
    else if (std::fabs(hi) < std::numeric_limits<F>::min()) hi = next_up(hi);
    return {std::fmax(lo, F(0)), hi};
}

// log on a strictly positive point.
// Reduction: x = m 2^e with m in [1/sqrt2, sqrt2); u = (m-1)/(m+1), where
// m-1 is exact (Sterbenz).  log m = 2 atanh u = 2 sum_{j<=13} u^{2j+1}/(2j+1)
// with remainder |R| <= 2|u|^29 / (29 (1-u^2)); |u| <= 0.1716 so the bound
// is below 1e-22 relative.  log x = log m + e ln2.
template <std::floating_point F>
inline RInterval<F> log_point(F x) {
    if (!(x > F(0))) throw std::domain_error("log_point: argument <= 0");
    if (x == std::numeric_limits<F>::infinity())
        return {std::numeric_limits<F>::max(), std::numeric_limits<F>::infinity()};
    int e = 0;
    F m = std::frexp(x, &e);                 // m in [0.5, 1)
    if (m < F(0.70710678118654752440)) { m *= F(2); --e; }
    const RInterval<F> u = RInterval<F>(m - F(1)) / (RInterval<F>(m) + F(1));
    const RInterval<F> u2 = u * u;
    RInterval<F> s(F(1) / F(27));
    for (int j = 12; j >= 0; --j)
        s = RInterval<F>(F(1) / F(2 * j + 1)) + u2 * s;
    RInterval<F> logm = F(2) * u * s;
    // |R| <= 2|u|^29/(29 (1-u^2)); for |u| <= 0.172 this is < 5.0e-24
    const F um = u.mag();
    F rem;
    if (um <= F(0.172)) {
        rem = F(5.0e-24);
    } else {
        rem = F(1);
        for (int j = 0; j < 29; ++j) rem = next_up(rem * um);
        rem = next_up(F(2) * rem / (F(29) * (F(1) - um * um)));
    }
    logm = logm + RInterval<F>(-rem, rem);
    return logm + RInterval<F>(static_cast<F>(e)) * ln2_iv<F>();
}

// sin/cos on a point (computed together; they share the reduction).
// Reduction: x = k (pi/2) + r, quadrant from k mod 4; r is enclosed through
// interval arithmetic so the pi/2-rounding slack (~|k| ulp) is carried in
// the enclosure, not lost.  Taylor on |r| <~ pi/4:
//   sin r = sum_{j<=8} (-1)^j r^{2j+1}/(2j+1)!,  |R| <= |r|^19/19!
//   cos r = sum_{j<=9} (-1)^j r^{2j}/(2j)!,      |R| <= |r|^20/20!
// (Lagrange bounds; all derivatives of sin/cos are bounded by 1.)  For
// |r| <= 0.8 the bounds are below the hardcoded constants 1.3e-19 and
// 5.0e-21 (0.8^19/19! = 1.19e-19, 0.8^20/20! = 4.8e-21); wider reduced
// arguments fall back to the computed bound.
template <std::floating_point F>
struct SinCos {
    RInterval<F> s, c;
};

template <std::floating_point F>
inline const RInterval<F>* sin_coef() {
    static const RInterval<F> tab[9] = {
        RInterval<F>(F(1)) / RInterval<F>(F(2 * 3)),
        RInterval<F>(F(1)) / RInterval<F>(F(4 * 5)),
        RInterval<F>(F(1)) / RInterval<F>(F(6 * 7)),
        RInterval<F>(F(1)) / RInterval<F>(F(8 * 9)),
        RInterval<F>(F(1)) / RInterval<F>(F(10 * 11)),
        RInterval<F>(F(1)) / RInterval<F>(F(12 * 13)),
        RInterval<F>(F(1)) / RInterval<F>(F(14 * 15)),
        RInterval<F>(F(1)) / RInterval<F>(F(16 * 17)),
        RInterval<F>(F(1)) / RInterval<F>(F(18 * 19))};
    return tab;
}

template <std::floating_point F>
inline const RInterval<F>* cos_coef() {
    static const RInterval<F> tab[10] = {
        RInterval<F>(F(1)) / RInterval<F>(F(1 * 2)),
        RInterval<F>(F(1)) / RInterval<F>(F(3 * 4)),
        RInterval<F>(F(1)) / RInterval<F>(F(5 * 6)),
        RInterval<F>(F(1)) / RInterval<F>(F(7 * 8)),
        RInterval<F>(F(1)) / RInterval<F>(F(9 * 10)),
        RInterval<F>(F(1)) / RInterval<F>(F(11 * 12)),
        RInterval<F>(F(1)) / RInterval<F>(F(13 * 14)),
        RInterval<F>(F(1)) / RInterval<F>(F(15 * 16)),
        RInterval<F>(F(1)) / RInterval<F>(F(17 * 18)),
        RInterval<F>(F(1)) / RInterval<F>(F(19 * 20))};
    return tab;
}

template <std::floating_point F>
inline F tail_pow_over_fact(F rm, int p) {
    F rem = F(1);
    for (int j = 0; j < p; ++j) rem = next_up(rem * rm);
    F fact = F(1);
    for (int j = 2; j <= p; ++j) fact = next_down(fact * F(j));
    return next_up(rem / fact);
}

template <std::floating_point F>
inline RInterval<F> sin_taylor(const RInterval<F>& r, const RInterval<F>& r2) {
    // nesting depth 9: the first iteration only seeds s = 1, so terms
    // through r^17 are included and the Lagrange tail starts at r^19
    const RInterval<F>* inv = sin_coef<F>();
    RInterval<F> s(F(0));
    for (int j = 9; j >= 1; --j)
        s = RInterval<F>(F(1)) - r2 * s * inv[j - 1];
    s = r * s;
    const F rm = r.mag();
    const F rem = rm <= F(0.8) ? F(1.3e-19) : tail_pow_over_fact(rm, 19);
    return s + RInterval<F>(-rem, rem);
}

template <std::floating_point F>
inline RInterval<F> cos_taylor(const RInterval<F>& r2, F rm) {
    // depth 10 after the seeding iteration: terms through r^18, tail at r^20
    const RInterval<F>* inv = cos_coef<F>();
    RInterval<F> s(F(0));
    for (int j = 10; j >= 1; --j)
        s = RInterval<F>(F(1)) - r2 * s * inv[j - 1];
    const F rem = rm <= F(0.8) ? F(5.0e-21) : tail_pow_over_fact(rm, 20);
    return s + RInterval<F>(-rem, rem);
}

template <std::floating_point F>
struct Reduced {
    RInterval<F> r;
    int q;
};

template <std::floating_point F>
inline Reduced<F> reduce_quarter(F x) {
    const F kf = std::nearbyint(x / (std::numbers::pi_v<F> / F(2)));
    const RInterval<F> r = RInterval<F>(x) - RInterval<F>(kf) * half_pi_iv<F>();
    const int q = (static_cast<int>(std::fmod(kf, F(4))) + 4) % 4;
    return {r, q};
}

template <std::floating_point F>
inline RInterval<F> clamp_unit(RInterval<F> v) {
    return RInterval<F>::raw(std::fmax(v.lo, F(-1)), std::fmin(v.hi, F(1)));
}

template <std::floating_point F>
inline SinCos<F> sincos_point(F x) {
    const Reduced<F> rd = reduce_quarter(x);
    const RInterval<F> r2 = rd.r * rd.r;
    const RInterval<F> st = sin_taylor(rd.r, r2);
    const RInterval<F> ct = cos_taylor(r2, rd.r.mag());
    SinCos<F> out;
    switch (rd.q) {
        case 0: out.s = st; out.c = ct; break;
        case 1: out.s = ct; out.c = -st; break;
        case 2: out.s = -st; out.c = -ct; break;
        default: out.s = -ct; out.c = st; break;
    }
    out.s = clamp_unit(out.s);
    out.c = clamp_unit(out.c);
    return out;
}

template <std::floating_point F>
inline RInterval<F> sin_point(F x) {
    const Reduced<F> rd = reduce_quarter(x);
    const RInterval<F> r2 = rd.r * rd.r;
    RInterval<F> v;
    switch (rd.q) {
        case 0: v = sin_taylor(rd.r, r2); break;
        case 1: v = cos_taylor(r2, rd.r.mag()); break;
        case 2: v = -sin_taylor(rd.r, r2); break;
        default: v = -cos_taylor(r2, rd.r.mag()); break;
    }
    return clamp_unit(v);
}

template <std::floating_point F>
inline RInterval<F> cos_point(F x) {
    const Reduced<F> rd = reduce_quarter(x);
    const RInterval<F> r2 = rd.r * rd.r;
    RInterval<F> v;
    switch (rd.q) {
        case 0: v = cos_taylor(r2, rd.r.mag()); break;
        case 1: v = -sin_taylor(rd.r, r2); break;
        case 2: v = -cos_taylor(r2, rd.r.mag()); break;
        default: v = sin_taylor(rd.r, r2); break;
    }
    return clamp_unit(v);
}

} // namespace detail

// Fused sin/cos over an interval: endpoint enclosures plus any interior
// extremum.  Critical points are multiples of pi/2; every multiple whose
// one-ulp enclosure meets the argument is included, so rounding uncertainty
// can only widen the result, never drop an extremum.  The candidate window
// carries a +-1 margin against the scalar division error (negligible next
// to 1 for |x| < 1e14; wider or non-finite arguments fall back to [-1,1]).
template <std::floating_point F>
inline detail::SinCos<F> sincos(const RInterval<F>& x) {
    detail::SinCos<F> out{{F(-1), F(1)}, {F(-1), F(1)}};
    if (!x.is_finite() || x.width() >= F(6.5) || x.mag() > F(1e14)) return out;
    if (x.width() <= F(1e-8)) {
        // narrow argument: one evaluation plus a Lipschitz pad (|sin'|,|cos'| <= 1)
        const detail::SinCos<F> p = detail::sincos_point(x.lo);
        const F pad = detail::next_up(x.hi - x.lo);
        out.s = detail::clamp_unit(RInterval<F>::raw(detail::next_down(p.s.lo - pad),
                                                     detail::next_up(p.s.hi + pad)));
        out.c = detail::clamp_unit(RInterval<F>::raw(detail::next_down(p.c.lo - pad),
                                                     detail::next_up(p.c.hi + pad)));
        return out;
    }
    const detail::SinCos<F> a = detail::sincos_point(x.lo);
    const detail::SinCos<F> b = detail::sincos_point(x.hi);
    out.s = hull(a.s, b.s);
    out.c = hull(a.c, b.c);
    const F half_pi = std::numbers::pi_v<F> / F(2);
    const F m_lo = std::floor(x.lo / half_pi) - F(1);
    const F m_hi = std::ceil(x.hi / half_pi) + F(1);
    for (F m = m_lo; m <= m_hi; m += F(1)) {
        const RInterval<F> c = RInterval<F>(m) * half_pi_iv<F>();
        if (!c.intersects(x)) continue;
        switch ((static_cast<int>(std::fmod(m, F(4))) + 4) % 4) {
            case 0: out.c = hull(out.c, RInterval<F>(F(1))); break;
            case 1: out.s = hull(out.s, RInterval<F>(F(1))); break;
            case 2: out.c = hull(out.c, RInterval<F>(F(-1))); break;
            default: out.s = hull(out.s, RInterval<F>(F(-1))); break;
        }
    }
    out.s = {std::fmax(out.s.lo, F(-1)), std::fmin(out.s.hi, F(1))};
    out.c = {std::fmax(out.c.lo, F(-1)), std::fmin(out.c.hi, F(1))};
    return out;
}

template <std::floating_point F>
inline RInterval<F> exp(const RInterval<F>& x) {
    const RInterval<F> lo = detail::exp_point(x.lo);
    const RInterval<F> hi = detail::exp_point(x.hi);
    return {lo.lo, hi.hi};
}

template <std::floating_point F>
inline RInterval<F> log(const RInterval<F>& x) {
    if (!(x.lo > F(0))) throw std::domain_error("log: interval not strictly positive");
    const RInterval<F> lo = detail::log_point(x.lo);
    const RInterval<F> hi = detail::log_point(x.hi);
    return {lo.lo, hi.hi};
}

template <std::floating_point F>
inline RInterval<F> sin(const RInterval<F>& x) {
    if (!x.is_finite() || x.width() >= F(6.5) || x.mag() > F(1e14))
        return {F(-1), F(1)};
    RInterval<F> out = hull(detail::sin_point(x.lo), detail::sin_point(x.hi));
    const F half_pi = std::numbers::pi_v<F> / F(2);
    const F m_lo = std::floor(x.lo / half_pi) - F(1);
    const F m_hi = std::ceil(x.hi / half_pi) + F(1);
    for (F m = m_lo; m <= m_hi; m += F(1)) {
        const int q = (static_cast<int>(std::fmod(m, F(4))) + 4) % 4;
        if (q % 2 == 0) continue;  // sin extrema sit at odd multiples of pi/2
        const RInterval<F> c = RInterval<F>(m) * half_pi_iv<F>();
        if (c.intersects(x)) out = hull(out, RInterval<F>(q == 1 ? F(1) : F(-1)));
    }
    return detail::clamp_unit(out);
}

template <std::floating_point F>
inline RInterval<F> cos(const RInterval<F>& x) {
    if (!x.is_finite() || x.width() >= F(6.5) || x.mag() > F(1e14))
        return {F(-1), F(1)};
    RInterval<F> out = hull(detail::cos_point(x.lo), detail::cos_point(x.hi));
    const F half_pi = std::numbers::pi_v<F> / F(2);
    const F m_lo = std::floor(x.lo / half_pi) - F(1);
    const F m_hi = std::ceil(x.hi / half_pi) + F(1);
    for (F m = m_lo; m <= m_hi; m += F(1)) {
        const int q = (static_cast<int>(std::fmod(m, F(4))) + 4) % 4;
        if (q % 2 == 1) continue;  // cos extrema sit at even multiples of pi/2
        const RInterval<F> c = RInterval<F>(m) * half_pi_iv<F>();
        if (c.intersects(x)) out = hull(out, RInterval<F>(q == 0 ? F(1) : F(-1)));
    }
    return detail::clamp_unit(out);
}

// x^y for strictly positive x, via exp(y log x)
template <std::floating_point F>
inline RInterval<F> pow(const RInterval<F>& x, const RInterval<F>& y) {
    return exp(y * log(x));
}

template <std::floating_point F>
inline RInterval<F> pow(const RInterval<F>& x, F y) {
    return pow(x, RInterval<F>(y));
}

namespace detail {

// cube root of a nonnegative point: seed with std::cbrt (not guaranteed
// correctly rounded), then push each side outward until its cube provably
// brackets p
template <std::floating_point F>
inline RInterval<F> cbrt_point(F p) {
    if (p == F(0)) return RInterval<F>(F(0));
    F y = std::cbrt(p);
    F lo = next_down(next_down(y)), hi = next_up(next_up(y));
    while (next_up(next_up(lo * lo) * lo) > p) lo = next_down(lo);
    while (next_down(next_down(hi * hi) * hi) < p) hi = next_up(hi);
    return RInterval<F>::raw(lo, hi);
}

} // namespace detail

// sharp roots used by the t^{1/4}, t^{1/6}, t^{1/12} bound shapes:
// composing correctly-rounded sqrt with a verified cbrt keeps the
// enclosures a few ulp wide, where exp(y log x) loses an order of magnitude
template <std::floating_point F>
inline RInterval<F> cbrt(const RInterval<F>& x) {
    if (x.lo < F(0)) throw std::domain_error("cbrt: interval extends below 0");
    return RInterval<F>::raw(detail::cbrt_point(x.lo).lo, detail::cbrt_point(x.hi).hi);
}

template <std::floating_point F>
inline RInterval<F> root4(const RInterval<F>& x) {
    return sqrt(sqrt(x));
}

template <std::floating_point F>
inline RInterval<F> root6(const RInterval<F>& x) {
    return sqrt(cbrt(x));
}

template <std::floating_point F>
inline RInterval<F> root12(const RInterval<F>& x) {
    return sqrt(root6(x));
}

template <std::floating_point F>
inline std::string to_string(const RInterval<F>& x, int digits = 17) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.*Lg, %.*Lg]", digits,
                  static_cast<long double>(x.lo), digits,
                  static_cast<long double>(x.hi));
    return buf;
}

} // namespace zetabound
