#pragma once

// Dispatcher for |zeta(1/2+it)| enclosures: Riemann-Siegel for t >= 200
// when the main-sum length is constant across the interval, Euler-Maclaurin
// otherwise (including every interval that straddles a floor change of
// sqrt(t/2pi)).

#include "zetabound/zeta_em.hpp"
#include "zetabound/zeta_rs.hpp"

namespace zetabound {

enum class ZetaMethod { EM, RS };

template <std::floating_point F>
struct ZetaEnclosure {
    RInterval<F> t_range;
    RInterval<F> value;
    ZetaMethod method;
};

template <std::floating_point F>
struct ZetaOptions {
    int rs_terms = 2;
    F em_tolerance = F(1e-9);
};

template <std::floating_point F>
inline ZetaEnclosure<F> abs_zeta_half(const RInterval<F>& t, const ZetaOptions<F>& opt = {}) {
    if (!(t.lo >= F(0.1)))
        throw std::domain_error("abs_zeta_half: requires t >= 0.1");
    if (t.lo >= F(200)) {
        try {
            return {t, rs_abs_zeta(t, RSParams{opt.rs_terms}), ZetaMethod::RS};
        } catch (const FloorChangeError&) {
            // fall through to Euler-Maclaurin
        }
    }
    return {t, em_abs_zeta_half(t, opt.em_tolerance), ZetaMethod::EM};
}

} // namespace zetabound
