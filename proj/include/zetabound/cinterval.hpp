#pragma once

// Rectangular complex intervals: a pair of real intervals enclosing the
// real and imaginary parts.  Rectangles over-cover the true image (no
// attempt at sharper disc arithmetic); containment is what matters here.

#include "zetabound/interval.hpp"

namespace zetabound {

template <std::floating_point F>
struct CInterval {
    RInterval<F> re;
    RInterval<F> im;

    CInterval() = default;
    CInterval(RInterval<F> r, RInterval<F> i) : re(r), im(i) {}
    explicit CInterval(F r, F i = F(0)) : re(r), im(i) {}

    static CInterval exact(F r, F i = F(0)) { return CInterval(r, i); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

using Cv = CInterval<double>;

template <std::floating_point F>
inline CInterval<F> operator+(const CInterval<F>& a, const CInterval<F>& b) {
    return {a.re + b.re, a.im + b.im};
}

template <std::floating_point F>
inline CInterval<F> operator-(const CInterval<F>& a, const CInterval<F>& b) {
    return {a.re - b.re, a.im - b.im};
}

template <std::floating_point F>
inline CInterval<F> operator-(const CInterval<F>& a) {
    return {-a.re, -a.im};
}

template <std::floating_point F>
inline CInterval<F> operator*(const CInterval<F>& a, const CInterval<F>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <std::floating_point F>
inline CInterval<F> operator*(const RInterval<F>& a, const CInterval<F>& b) {
    return {a * b.re, a * b.im};
}

template <std::floating_point F>
inline CInterval<F> operator*(const CInterval<F>& a, const RInterval<F>& b) {
    return b * a;
}

template <std::floating_point F>
inline CInterval<F> conj(const CInterval<F>& a) {
    return {a.re, -a.im};
}

namespace detail {

// square of a nonnegative interval; keeps an exact zero endpoint exact
template <std::floating_point F>
inline RInterval<F> sqr_nonneg(const RInterval<F>& x) {
    const F lo = x.lo == F(0) ? F(0) : next_down(x.lo * x.lo);
    return RInterval<F>::raw(lo, next_up(x.hi * x.hi));
}

} // namespace detail

// |z|^2 as an interval; the mig/mag split keeps the lower bound at zero
// exactly when the rectangle contains the origin
template <std::floating_point F>
inline RInterval<F> abs2(const CInterval<F>& z) {
    const RInterval<F> s = detail::sqr_nonneg(abs_iv(z.re)) + detail::sqr_nonneg(abs_iv(z.im));
    return RInterval<F>::raw(std::fmax(s.lo, F(0)), s.hi);
}

template <std::floating_point F>
inline RInterval<F> cabs(const CInterval<F>& z) {
    return sqrt(abs2(z));
}

template <std::floating_point F>
inline CInterval<F> operator/(const CInterval<F>& a, const CInterval<F>& b) {
    const RInterval<F> d = abs2(b);
    if (d.contains_zero())
        return {RInterval<F>::entire(), RInterval<F>::entire()};
    const CInterval<F> n = a * conj(b);
    return {n.re / d, n.im / d};
}

// e^{i phase} as a rectangle
template <std::floating_point F>
inline CInterval<F> unit_phase(const RInterval<F>& phase) {
    const auto sc = sincos(phase);
    return {sc.c, sc.s};
}

template <std::floating_point F>
inline CInterval<F> hull(const CInterval<F>& a, const CInterval<F>& b) {
    return {hull(a.re, b.re), hull(a.im, b.im)};
}

} // namespace zetabound
