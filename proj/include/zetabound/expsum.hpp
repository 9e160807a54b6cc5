#pragma once

// Exponential sums and the three explicit estimates they are checked
// against: the second-derivative (van der Corput) bound, Weyl differencing,
// and the approximate-functional-equation majorant for |zeta(1/2+it)|.
// Everything returns enclosures; the domination tests compare a bound's
// upper endpoint against a sum's lower endpoint.

#include "zetabound/cinterval.hpp"
#include "zetabound/interval.hpp"
#include "zetabound/zeta_em.hpp"

#include <functional>
#include <stdexcept>

namespace zetabound {

// real phase f(n) with a certified two-sided bound on |f''|:
// 1/W <= |f''(x)| <= 1/V on the summation range
template <std::floating_point F>
struct PhaseFn {
    std::function<RInterval<F>(long)> eval;
    F V = F(0);
    F W = F(0);
};

// summation geometry for the Weyl-differencing estimate
struct SumRange {
    long offset = 0;    // N
    long length = 1;    // L >= 1
    long prefix = 1;    // K <= L
    long modulus = 1;   // M >= 1
    long shift = 0;     // m in [1, M-1]
};

// sum_{n=N+1}^{N+L} e^{2 pi i f(n)}
template <std::floating_point F>
inline CInterval<F> direct_sum(const PhaseFn<F>& f, long offset, long length) {
    if (length < 1) throw std::invalid_argument("direct_sum: length must be >= 1");
    CInterval<F> acc{RInterval<F>(F(0)), RInterval<F>(F(0))};
    for (long n = offset + 1; n <= offset + length; ++n)
        acc = acc + unit_phase(two_pi_iv<F>() * f.eval(n));
    return acc;
}

// ((L-1)/V + 1) (2 sqrt(2/pi) W^{1/2} + 2) + 1
template <std::floating_point F>
inline RInterval<F> lemma1_bound(long length, F V, F W) {
    if (!(W > F(1)) || !(V < W))
        throw std::domain_error("lemma1_bound: requires V < W and W > 1");
    if (length < 1) throw std::invalid_argument("lemma1_bound: length must be >= 1");
    const RInterval<F> vi(V), wi(W);
    const RInterval<F> first = RInterval<F>(static_cast<F>(length - 1)) / vi + F(1);
    const RInterval<F> root = sqrt(RInterval<F>(F(2)) / pi_iv<F>());
    const RInterval<F> second = F(2) * root * sqrt(wi) + F(2);
    return first * second + F(1);
}

// L(L+M-1)/M + (2(L+M-1)/M) sum_{m=1}^{M-1} (1 - m/M) inner_max(m);
// inner_max(m) must be an upper bound for max_{K<=L} |sum_{m,K}|
template <std::floating_point F>
inline RInterval<F> lemma2_bound(const SumRange& r,
                                 const std::function<RInterval<F>(long)>& inner_max) {
    if (r.modulus < 1) throw std::domain_error("lemma2_bound: M must be >= 1");
    if (r.length < 1) throw std::invalid_argument("lemma2_bound: L must be >= 1");
    const RInterval<F> L(static_cast<F>(r.length));
    const RInterval<F> M(static_cast<F>(r.modulus));
    const RInterval<F> lpm = L + M - RInterval<F>(F(1));
    RInterval<F> out = L * lpm / M;
    if (r.modulus > 1) {
        RInterval<F> inner(F(0));
        for (long m = 1; m < r.modulus; ++m) {
            const RInterval<F> weight =
                RInterval<F>(F(1)) - RInterval<F>(static_cast<F>(m)) / M;
            inner = inner + weight * inner_max(m);
        }
        out = out + (F(2) * lpm / M) * inner;
    }
    return out;
}

// enclosures of (4/15) M^{3/2} and (4/3) M^{1/2}, the closed-form majorants
// of sum_{m<M} (1 - m/M) m^{+-1/2}
template <std::floating_point F>
inline std::pair<RInterval<F>, RInterval<F>> weighted_moment_bounds(long M) {
    if (M < 1) throw std::invalid_argument("weighted_moment_bounds: M must be >= 1");
    const RInterval<F> Mi(static_cast<F>(M));
    const RInterval<F> rM = sqrt(Mi);
    return {RInterval<F>(F(4)) / F(15) * Mi * rM, RInterval<F>(F(4)) / F(3) * rM};
}

// 2 |sum_{n <= sqrt(t/2pi)} n^{-1/2-it}| + 1.53 t^{-1/4} + 3.23 t^{-3/4};
// if the sum length changes across the t interval, both lengths are
// evaluated and the union taken
template <std::floating_point F>
inline RInterval<F> lemma3_rhs(const RInterval<F>& t) {
    if (!(t.lo >= F(100))) throw std::domain_error("lemma3_rhs: requires t >= 100");
    const RInterval<F> a = sqrt(t / two_pi_iv<F>());
    const long m_lo = static_cast<long>(std::floor(a.lo));
    const long m_hi = static_cast<long>(std::floor(a.hi));
    auto& cache = detail::int_log_cache<F>();
    auto main_sum_abs = [&](long m) {
        CInterval<F> acc{RInterval<F>(F(0)), RInterval<F>(F(0))};
        for (long n = 1; n <= m; ++n) {
            const auto sc = sincos(-(t * cache.log_of(n)));
            const RInterval<F> w = cache.rsqrt_of(n);
            acc = acc + CInterval<F>{w * sc.c, w * sc.s};
        }
        return cabs(acc);
    };
    RInterval<F> s = main_sum_abs(m_lo);
    for (long m = m_lo + 1; m <= m_hi; ++m) s = hull(s, main_sum_abs(m));
    const RInterval<F> c1(detail::next_down(F(1.53)), detail::next_up(F(1.53)));
    const RInterval<F> c2(detail::next_down(F(3.23)), detail::next_up(F(3.23)));
    return F(2) * s + c1 * pow(t, F(-0.25)) + c2 * pow(t, F(-0.75));
}

} // namespace zetabound
