#pragma once

// Interval Euler-Maclaurin evaluation of zeta(s):
//
//   zeta(s) = sum_{n=1}^{N-1} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
//           + R_K(s, N)
//
// with the classical remainder bound (valid for Re s > -(2K+1); see e.g.
// Backlund's treatment or Titchmarsh ch. 3)
//
//   |R_K| <= |s+2K+1| / (Re s + 2K + 1) * |first omitted term|.
//
// The Bernoulli coefficients enter only as B_{2k}/(2k)! =
// (-1)^{k+1} 2 zeta(2k) / (2pi)^{2k}, which is computed rigorously at
// startup: zeta(2), zeta(4), zeta(6) from their closed forms, larger even
// arguments from a 64-term partial sum plus the integral tail bound
// sum_{n>M} n^{-2k} in [0, M^{1-2k}/(2k-1)].

#include "zetabound/cinterval.hpp"
#include "zetabound/interval.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetabound {

struct EMParams {
    long n_terms = 10;  // N: main-sum truncation
    int k_terms = 10;   // K: Bernoulli correction terms
};

namespace detail {

inline constexpr int kMaxBernoulli = 32;

template <std::floating_point F>
inline RInterval<F> zeta_even(int two_k) {
    const RInterval<F> pi = pi_iv<F>();
    if (two_k == 2) return powi(pi, 2) / F(6);
    if (two_k == 4) return powi(pi, 4) / F(90);
    if (two_k == 6) return powi(pi, 6) / F(945);
    RInterval<F> s(F(0));
    const long M = 64;
    for (long n = M; n >= 1; --n) s = s + powi(RInterval<F>(F(1)) / RInterval<F>(static_cast<F>(n)), two_k);
    RInterval<F> tail = powi(RInterval<F>(F(1) / F(M)), two_k - 1) / F(two_k - 1);
    return s + RInterval<F>(F(0), tail.hi);
}

// B_{2k}/(2k)! for k = 1..kMaxBernoulli, built once
template <std::floating_point F>
inline const std::vector<RInterval<F>>& bern_over_fact() {
    static const std::vector<RInterval<F>> table = [] {
        std::vector<RInterval<F>> t;
        t.reserve(kMaxBernoulli + 1);
        t.push_back(RInterval<F>(F(0)));  // unused k=0 slot
        RInterval<F> tp2 = powi(two_pi_iv<F>(), 2);
        RInterval<F> pw = tp2;
        for (int k = 1; k <= kMaxBernoulli; ++k) {
            RInterval<F> c = F(2) * zeta_even<F>(2 * k) / pw;
            t.push_back(k % 2 == 1 ? c : -c);
            pw = pw * tp2;
        }
        return t;
    }();
    return table;
}

// log n and n^{-1/2} caches shared across sweep pieces; a deque keeps
// references stable while a publish counter lets readers skip the lock
template <std::floating_point F>
class IntLogCache {
  public:
    RInterval<F> log_of(long n) {
        ensure(n);
        return entries_[static_cast<size_t>(n)];
    }
    RInterval<F> rsqrt_of(long n) {
        ensure(n);
        return rsqrt_[static_cast<size_t>(n)];
    }

  private:
    void ensure(long n) {
        if (static_cast<size_t>(n) < published_.load(std::memory_order_acquire)) return;
        std::lock_guard<std::mutex> g(mu_);
        while (entries_.size() <= static_cast<size_t>(n)) {
            const long m = static_cast<long>(entries_.size());
            if (m == 0) {
                entries_.push_back(RInterval<F>::entire());
                rsqrt_.push_back(RInterval<F>::entire());
            } else {
                entries_.push_back(log(RInterval<F>(static_cast<F>(m))));
                rsqrt_.push_back(RInterval<F>(F(1)) / sqrt(RInterval<F>(static_cast<F>(m))));
            }
        }
        published_.store(entries_.size(), std::memory_order_release);
    }

    std::deque<RInterval<F>> entries_;
    std::deque<RInterval<F>> rsqrt_;
    std::atomic<size_t> published_{0};
    std::mutex mu_;
};

template <std::floating_point F>
inline IntLogCache<F>& int_log_cache() {
    static IntLogCache<F> c;
    return c;
}

// n^{-s} = exp(-Re s * log n) * e^{-i Im s * log n}
template <std::floating_point F>
inline CInterval<F> int_pow_minus_s(long n, const CInterval<F>& s) {
    auto& cache = int_log_cache<F>();
    const RInterval<F> ln = cache.log_of(n);
    RInterval<F> mag;
    if (s.re.is_point() && s.re.lo == F(0.5))
        mag = cache.rsqrt_of(n);
    else
        mag = exp(-(s.re * ln));
    const auto sc = sincos(-(s.im * ln));
    return {mag * sc.c, mag * sc.s};
}

} // namespace detail

// Upper bound on the Euler-Maclaurin remainder magnitude for given (s, N, K);
// cheap relative to the main sum, used by the auto-tuner.
template <std::floating_point F>
inline F em_remainder_bound(const CInterval<F>& s, long N, int K) {
    const auto& bern = detail::bern_over_fact<F>();
    CInterval<F> poly = s;
    for (int k = 1; k <= K; ++k)
        poly = poly * CInterval<F>(s.re + F(2 * k - 1), s.im) * CInterval<F>(s.re + F(2 * k), s.im);
    const RInterval<F> Ni(static_cast<F>(N));
    const RInterval<F> npow = pow(Ni, -(s.re + F(2 * K + 1)));
    const RInterval<F> omitted =
        abs_iv(bern[static_cast<size_t>(K + 1)]) * cabs(poly) * npow;
    const RInterval<F> ratio =
        cabs(CInterval<F>(s.re + F(2 * K + 1), s.im)) / (s.re + F(2 * K + 1));
    return (ratio * omitted).hi;
}

template <std::floating_point F>
inline CInterval<F> em_zeta(const CInterval<F>& s, const EMParams& p) {
    if (p.n_terms < 2 || p.k_terms < 1 || p.k_terms + 1 >= detail::kMaxBernoulli)
        throw std::invalid_argument("em_zeta: need N >= 2, 1 <= K < 31");
    if (!(s.re.lo > F(0)) || s.re.hi > F(2))
        throw std::domain_error("em_zeta: Re(s) must lie in (0, 2]");
    if (s.re.contains(F(1)) && s.im.contains(F(0)))
        throw std::domain_error("em_zeta: interval contains the pole s = 1");

    const long N = p.n_terms;
    const int K = p.k_terms;
    const auto& bern = detail::bern_over_fact<F>();

    CInterval<F> sum{RInterval<F>(F(0)), RInterval<F>(F(0))};
    for (long n = 1; n < N; ++n) sum = sum + detail::int_pow_minus_s(n, s);

    const CInterval<F> Ns = detail::int_pow_minus_s(N, s);
    const RInterval<F> Ni(static_cast<F>(N));
    const CInterval<F> one{RInterval<F>(F(1)), RInterval<F>(F(0))};
    sum = sum + (Ns * Ni) / (s - one);            // N^{1-s}/(s-1)
    sum = sum + CInterval<F>{Ns.re / F(2), Ns.im / F(2)};

    CInterval<F> poly = s;                        // s(s+1)...(s+2k-2)
    CInterval<F> npow = Ns * (RInterval<F>(F(1)) / Ni);   // N^{-s-2k+1}
    const RInterval<F> ninv2 = RInterval<F>(F(1)) / (Ni * Ni);
    for (int k = 1; k <= K; ++k) {
        sum = sum + bern[static_cast<size_t>(k)] * (poly * npow);
        poly = poly * CInterval<F>(s.re + F(2 * k - 1), s.im) * CInterval<F>(s.re + F(2 * k), s.im);
        npow = npow * CInterval<F>{ninv2, RInterval<F>(F(0))};
    }

    // |R_K| bound from the factors already in hand
    const RInterval<F> omitted = abs_iv(bern[static_cast<size_t>(K + 1)]) * cabs(poly) * cabs(npow);
    const RInterval<F> ratio = cabs(CInterval<F>(s.re + F(2 * K + 1), s.im)) / (s.re + F(2 * K + 1));
    const F rem = (ratio * omitted).hi;
    const RInterval<F> rem_iv(-rem, rem);
    return {sum.re + rem_iv, sum.im + rem_iv};
}

// Default parameter rule: N = max(10, ceil(3|t|/2)), K = 10, then double N
// (and grow K) until the remainder halo is below `tol`.
template <std::floating_point F>
inline EMParams em_auto_params(const CInterval<F>& s, F tol) {
    EMParams p;
    p.n_terms = std::max<long>(10, static_cast<long>(std::ceil(F(1.5) * s.im.mag())));
    p.n_terms = std::min<long>(p.n_terms, 4000000L);
    p.k_terms = 10;
    for (int round = 0; round < 24; ++round) {
        const F rem = em_remainder_bound(s, p.n_terms, p.k_terms);
        if (F(2) * rem <= tol) break;
        if (p.n_terms < 4000000L)
            p.n_terms = std::min<long>(4000000L, p.n_terms * 2);
        else if (p.k_terms + 3 < detail::kMaxBernoulli - 1)
            p.k_terms += 2;
        else
            throw std::domain_error("em_auto_params: tolerance unreachable at parameter caps");
    }
    return p;
}

// |zeta(1/2 + i t)| over a t interval, via Euler-Maclaurin
template <std::floating_point F>
inline RInterval<F> em_abs_zeta_half(const RInterval<F>& t, F tol = F(1e-9)) {
    const CInterval<F> s{RInterval<F>(F(0.5)), t};
    return cabs(em_zeta(s, em_auto_params(s, tol)));
}

} // namespace zetabound
