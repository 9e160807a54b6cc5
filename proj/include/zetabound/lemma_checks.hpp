#pragma once

// Randomized and exhaustive domination batteries for the three exponential
// sum estimates and the weighted-moment majorants.  Each battery certifies
// bound.hi >= |sum|.lo with rigorous enclosures on both sides; phase
// functions carry second-derivative ranges that are themselves certified by
// interval evaluation of f''.

#include "zetabound/expsum.hpp"
#include "zetabound/zeta.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zetabound {

struct BatteryReport {
    std::string name;
    long trials = 0;
    long failures = 0;
    std::string first_failure;

    bool pass() const { return trials > 0 && failures == 0; }
};

namespace detail {

// quadratic-plus-ripple phase with a certified positive f'' range:
// f(x) = c x^2 + d x + e sin(w x + phi), f''(x) = 2c - e w^2 sin(w x + phi)
template <std::floating_point F>
struct RipplePhase {
    F c, d, e, w, phi;
    long offset;
    long length;

    RInterval<F> eval(long n) const {
        const RInterval<F> x(static_cast<F>(n));
        return RInterval<F>(c) * x * x + RInterval<F>(d) * x +
               RInterval<F>(e) * sin(RInterval<F>(w) * x + RInterval<F>(phi));
    }
    // interval enclosure of f'' over [offset+1, offset+length]
    RInterval<F> d2_range() const {
        const RInterval<F> x(static_cast<F>(offset + 1), static_cast<F>(offset + length));
        return F(2) * RInterval<F>(c) -
               RInterval<F>(e) * RInterval<F>(w) * RInterval<F>(w) *
                   sin(RInterval<F>(w) * x + RInterval<F>(phi));
    }
};

} // namespace detail

// Second-derivative test battery: random certified phases, checking
// lemma1_bound >= |direct_sum| and that the certified (V, W) really
// bracket 1/|f''|.
template <std::floating_point F>
inline BatteryReport battery_lemma1(long samples, std::uint64_t seed) {
    BatteryReport rep{"lemma1 domination"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (long trial = 0; trial < samples; ++trial) {
        detail::RipplePhase<F> ph;
        ph.c = static_cast<F>(0.05 + 0.40 * U(rng));
        ph.d = static_cast<F>(U(rng));
        ph.w = static_cast<F>(0.1 + 1.9 * U(rng));
        ph.e = static_cast<F>(U(rng) * ph.c / (ph.w * ph.w));  // |e w^2| <= c
        ph.phi = static_cast<F>(6.28 * U(rng));
        ph.offset = static_cast<long>(U(rng) * 50);
        ph.length = 1 + static_cast<long>(U(rng) * 119);

        const RInterval<F> d2 = ph.d2_range();
        const F V = (RInterval<F>(F(1)) / RInterval<F>(d2.hi)).lo;
        const F W = (RInterval<F>(F(1)) / RInterval<F>(d2.lo)).hi;
        ++rep.trials;
        if (!(d2.lo > F(0)) || !(W > F(1)) || !(V < W)) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "hypothesis certification failed";
            continue;
        }
        PhaseFn<F> f{[&ph](long n) { return ph.eval(n); }, V, W};
        const RInterval<F> bound = lemma1_bound<F>(ph.length, V, W);
        const RInterval<F> s = cabs(direct_sum(f, ph.offset, ph.length));
        if (!(bound.hi >= s.lo)) {
            ++rep.failures;
            if (rep.first_failure.empty())
                rep.first_failure = "bound " + std::to_string(bound.hi) + " < sum " +
                                    std::to_string(s.lo);
        }
    }
    return rep;
}

// Weyl differencing battery: exhaustive over L <= l_max, M <= L with random
// integer phases; inner maxima come from direct enclosures of the shifted
// sums, so the comparison |S|^2 <= bound is fully rigorous.
template <std::floating_point F>
inline BatteryReport battery_lemma2(long l_max, std::uint64_t seed) {
    BatteryReport rep{"lemma2 domination"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (long L = 1; L <= l_max; ++L) {
        for (long M = 1; M <= L; ++M) {
            std::vector<F> vals(static_cast<std::size_t>(L + M + 1));
            for (auto& v : vals) v = static_cast<F>(U(rng));
            PhaseFn<F> f{[&vals](long n) { return RInterval<F>(vals[static_cast<std::size_t>(n - 1)]); },
                         F(0), F(0)};
            auto inner_max = [&](long m) {
                RInterval<F> best(F(0));
                CInterval<F> acc{RInterval<F>(F(0)), RInterval<F>(F(0))};
                for (long K = 1; K <= L; ++K) {
                    const RInterval<F> g = f.eval(K + m) - f.eval(K);
                    acc = acc + unit_phase(two_pi_iv<F>() * g);
                    best = hull(best, cabs(acc));
                }
                return RInterval<F>(best.hi);
            };
            SumRange r{0, L, L, M, 0};
            const RInterval<F> bound = lemma2_bound<F>(r, inner_max);
            const RInterval<F> s2 = abs2(direct_sum(f, 0, L));
            ++rep.trials;
            if (!(bound.hi >= s2.lo)) {
                ++rep.failures;
                if (rep.first_failure.empty())
                    rep.first_failure = "L=" + std::to_string(L) + " M=" + std::to_string(M);
            }
        }
    }
    return rep;
}

// Approximate-functional-equation battery: lemma3_rhs dominates the zeta
// enclosure at log-uniform sample points of [100, t_max].
template <std::floating_point F>
inline BatteryReport battery_lemma3(long samples, F t_max, std::uint64_t seed) {
    BatteryReport rep{"lemma3 domination"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const double llo = std::log(100.0), lhi = std::log(static_cast<double>(t_max));
    for (long trial = 0; trial < samples; ++trial) {
        const F t = static_cast<F>(std::exp(llo + (lhi - llo) * U(rng)));
        const RInterval<F> rhs = lemma3_rhs(RInterval<F>(t));
        const RInterval<F> z = abs_zeta_half(RInterval<F>(t)).value;
        ++rep.trials;
        if (!(rhs.hi >= z.lo)) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "t=" + std::to_string(t);
        }
    }
    return rep;
}

// Weighted-moment battery over every M <= m_max, via interval prefix sums
// of m^{1/2} and m^{3/2}: sum (1 - m/M) m^{+-1/2} =
// S_{+-1/2}(M-1) - S_{+-3/2 or +1/2}(M-1)/M.
template <std::floating_point F>
inline BatteryReport battery_moments(long m_max) {
    BatteryReport rep{"weighted moment bounds"};
    RInterval<F> s_half(F(0));    // sum m^{1/2}
    RInterval<F> s_3half(F(0));   // sum m^{3/2}
    RInterval<F> s_mhalf(F(0));   // sum m^{-1/2}
    RInterval<F> s_phalf(F(0));   // sum m^{1/2} (for the -1/2 moment: m * m^{-1/2})
    for (long M = 1; M <= m_max; ++M) {
        if (M > 1) {
            const long m = M - 1;
            const RInterval<F> rm = sqrt(RInterval<F>(static_cast<F>(m)));
            s_half = s_half + rm;
            s_3half = s_3half + RInterval<F>(static_cast<F>(m)) * rm;
            s_mhalf = s_mhalf + RInterval<F>(F(1)) / rm;
            s_phalf = s_phalf + rm;
        }
        const RInterval<F> Mi(static_cast<F>(M));
        const RInterval<F> sum_plus = s_half - s_3half / Mi;
        const RInterval<F> sum_minus = s_mhalf - s_phalf / Mi;
        const auto [b_plus, b_minus] = weighted_moment_bounds<F>(M);
        ++rep.trials;
        if (!(b_plus.hi >= sum_plus.lo) || !(b_minus.hi >= sum_minus.lo)) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "M=" + std::to_string(M);
        }
    }
    return rep;
}

} // namespace zetabound
