#pragma once

// Range verification, record sweeps, table constants, the Lehman-bound
// crossovers, and the minimal-Q computation.
//
// A sweep covers [lo, hi] by pieces of a fixed width (adjacent pieces share
// their endpoint double, so coverage is exact by construction).  Each piece
// [a, a+w] gets an enclosure [x, y] of |zeta(1/2+it)| and is tested against
// the threshold at the LEFT endpoint, y < A a^{1/6} log a — sound because
// t^{1/6} log t increases on the sweep domain.  Pieces that are neither
// certainly below nor certainly above the threshold are bisected up to a
// depth limit.
//
// A record sweep stores (a, y) whenever a piece's upper bound y beats every
// previously stored y; record-setting pieces are refined by bisection first
// so the stored y values track sup |zeta| closely.  The smallest valid
// 4-decimal constant for a range is then the ceiling of the best record
// ratio: any non-record piece is dominated by the latest record at or
// before it, whose denominator is no larger.

#include "zetabound/interval.hpp"
#include "zetabound/parallel.hpp"
#include "zetabound/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetabound {

struct SweepConfig {
    double piece_width = 1.0 / 1024.0;
    int max_depth = 20;            // adaptive bisection limit for verify
    int record_refine_depth = 10;  // bisection applied to record candidates
    double em_tolerance = 1e-9;    // remainder tolerance handed to zeta_eval
    int rs_terms = 2;
    unsigned threads = 0;          // 0 = hardware concurrency
};

template <std::floating_point F>
struct Record {
    F a;  // piece start
    F y;  // upper bound of |zeta(1/2+it)| over that piece
};

template <std::floating_point F>
struct RecordFile {
    F lo = 0, hi = 0;
    F piece_width = 0;
    std::vector<Record<F>> records;
};

enum class PieceOutcome { Pass, Fail, Inconclusive };

struct PieceFailure {
    double a, b;
    int depth;
    bool counterexample;  // true: threshold certainly exceeded; false: stuck
};

struct VerifyReport {
    double lo = 0, hi = 0;
    std::size_t pieces = 0;        // top-level pieces processed
    std::size_t evaluations = 0;   // enclosures computed including bisection
    int deepest = 0;
    std::vector<PieceFailure> failures;

    bool success() const { return failures.empty(); }
};

namespace detail {

template <std::floating_point F>
inline ZetaOptions<F> zeta_options(const SweepConfig& cfg) {
    ZetaOptions<F> o;
    o.rs_terms = cfg.rs_terms;
    o.em_tolerance = static_cast<F>(cfg.em_tolerance);
    return o;
}

// threshold A a^{1/6} log a at the left endpoint
template <std::floating_point F>
inline RInterval<F> piece_threshold(const RInterval<F>& A, F a) {
    const RInterval<F> ai(a);
    return A * root6(ai) * log(ai);
}

// grid point i of the sweep over [lo, hi]; the last index lands exactly on hi
template <std::floating_point F>
inline F grid_point(F lo, F hi, F w, std::size_t i, std::size_t n) {
    if (i >= n) return hi;
    const F a = lo + static_cast<F>(i) * w;
    return a < hi ? a : hi;
}

} // namespace detail

template <std::floating_point F>
inline PieceOutcome verify_piece(F a, F w, const RInterval<F>& A, const SweepConfig& cfg = {}) {
    if (!(a >= F(2))) throw std::domain_error("verify_piece: requires a >= 2");
    const RInterval<F> val =
        abs_zeta_half(RInterval<F>(a, a + w), detail::zeta_options<F>(cfg)).value;
    const RInterval<F> thr = detail::piece_threshold(A, a);
    if (val.hi < thr.lo) return PieceOutcome::Pass;
    if (val.lo > thr.hi) return PieceOutcome::Fail;
    return PieceOutcome::Inconclusive;
}

namespace detail {

template <std::floating_point F>
inline void verify_subpiece(F a, F b, const RInterval<F>& A, const SweepConfig& cfg,
                            int depth, VerifyReport& rep) {
    ++rep.evaluations;
    rep.deepest = std::max(rep.deepest, depth);
    const RInterval<F> val =
        abs_zeta_half(RInterval<F>(a, b), zeta_options<F>(cfg)).value;
    const RInterval<F> thr = piece_threshold(A, a);
    if (val.hi < thr.lo) return;
    if (val.lo > thr.hi) {
        rep.failures.push_back({static_cast<double>(a), static_cast<double>(b), depth, true});
        return;
    }
    if (depth >= cfg.max_depth) {
        rep.failures.push_back({static_cast<double>(a), static_cast<double>(b), depth, false});
        return;
    }
    const F mid = (a + b) / F(2);
    if (!(a < mid && mid < b)) {  // cannot split representably
        rep.failures.push_back({static_cast<double>(a), static_cast<double>(b), depth, false});
        return;
    }
    verify_subpiece(a, mid, A, cfg, depth + 1, rep);
    verify_subpiece(mid, b, A, cfg, depth + 1, rep);
}

} // namespace detail

template <std::floating_point F>
inline VerifyReport verify_range(F lo, F hi, const RInterval<F>& A, const SweepConfig& cfg = {}) {
    if (!(F(2) <= lo && lo < hi)) throw std::domain_error("verify_range: requires 2 <= lo < hi");
    const F w = static_cast<F>(cfg.piece_width);
    if (!(w > F(0))) throw std::invalid_argument("verify_range: piece width must be positive");
    const std::size_t n = static_cast<std::size_t>(std::ceil(static_cast<double>((hi - lo) / w)));
    const unsigned threads = resolve_threads(cfg.threads);
    const std::size_t n_chunks = std::max<std::size_t>(threads * 8, 1);
    std::vector<VerifyReport> parts(n_chunks);
    parallel_chunks(n, threads, n_chunks, [&](std::size_t c, std::size_t b, std::size_t e) {
        VerifyReport& rep = parts[c];
        for (std::size_t i = b; i < e; ++i) {
            const F a0 = detail::grid_point(lo, hi, w, i, n);
            const F a1 = detail::grid_point(lo, hi, w, i + 1, n);
            detail::verify_subpiece(a0, a1, A, cfg, 0, rep);
        }
    });
    VerifyReport rep;
    rep.lo = static_cast<double>(lo);
    rep.hi = static_cast<double>(hi);
    rep.pieces = n;
    for (const auto& part : parts) {
        rep.evaluations += part.evaluations;
        rep.deepest = std::max(rep.deepest, part.deepest);
        rep.failures.insert(rep.failures.end(), part.failures.begin(), part.failures.end());
    }
    return rep;
}

namespace detail {

// sharp upper bound for sup |zeta(1/2+it)| over one piece: bisect to the
// refinement depth, pruning subpieces whose bound cannot raise the maximum
template <std::floating_point F>
inline void refine_piece_sup(F a, F b, int depth, const SweepConfig& cfg, F& cur_max) {
    const RInterval<F> val =
        abs_zeta_half(RInterval<F>(a, b), zeta_options<F>(cfg)).value;
    if (!(val.hi > cur_max)) return;
    const F mid = (a + b) / F(2);
    if (depth >= cfg.record_refine_depth || !(a < mid && mid < b)) {
        cur_max = val.hi;
        return;
    }
    refine_piece_sup(a, mid, depth + 1, cfg, cur_max);
    refine_piece_sup(mid, b, depth + 1, cfg, cur_max);
}

template <std::floating_point F>
inline F ratio_of(F y, F a) {
    const RInterval<F> ai(a);
    return (RInterval<F>(y) / (root6(ai) * log(ai))).hi;
}

} // namespace detail

// Left-to-right record sweep.  Phase one computes per-piece upper bounds in
// parallel at piece granularity.  Phase two sharpens, by deep bisection,
// exactly the pieces whose coarse threshold ratio could still determine the
// range constant (largest coarse ratio first, stopping once no coarse ratio
// exceeds the best sharpened one).  A sharpened value is still an upper
// bound over its whole piece, so phase three can walk the pieces in order
// and emit the strictly-increasing record sequence.
template <std::floating_point F>
inline RecordFile<F> record_sweep(F lo, F hi, const SweepConfig& cfg = {}) {
    if (!(F(2) <= lo && lo < hi)) throw std::domain_error("record_sweep: requires 2 <= lo < hi");
    const F w = static_cast<F>(cfg.piece_width);
    if (!(w > F(0))) throw std::invalid_argument("record_sweep: piece width must be positive");
    const std::size_t n = static_cast<std::size_t>(std::ceil(static_cast<double>((hi - lo) / w)));
    std::vector<F> ys(n);
    const unsigned threads = resolve_threads(cfg.threads);
    parallel_chunks(n, threads, std::max<std::size_t>(threads * 8, 1),
                    [&](std::size_t, std::size_t b, std::size_t e) {
                        for (std::size_t i = b; i < e; ++i) {
                            const F a0 = detail::grid_point(lo, hi, w, i, n);
                            const F a1 = detail::grid_point(lo, hi, w, i + 1, n);
                            ys[i] =
                                abs_zeta_half(RInterval<F>(a0, a1), detail::zeta_options<F>(cfg))
                                    .value.hi;
                        }
                    });

    if (cfg.record_refine_depth > 0) {
        std::vector<F> ratio(n);
        parallel_chunks(n, threads, std::max<std::size_t>(threads * 8, 1),
                        [&](std::size_t, std::size_t b, std::size_t e) {
                            for (std::size_t i = b; i < e; ++i)
                                ratio[i] = detail::ratio_of(ys[i], detail::grid_point(lo, hi, w, i, n));
                        });
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (ratio[x] != ratio[y]) return ratio[x] > ratio[y];
            return x < y;
        });
        F best_sharp = F(0);
        for (std::size_t idx : order) {
            if (ratio[idx] <= best_sharp) break;
            const F a0 = detail::grid_point(lo, hi, w, idx, n);
            F sharp = F(0);
            detail::refine_piece_sup(a0, detail::grid_point(lo, hi, w, idx + 1, n), 0,
                                     cfg, sharp);
            ys[idx] = sharp;
            best_sharp = std::max(best_sharp, detail::ratio_of(sharp, a0));
        }
    }

    RecordFile<F> rf;
    rf.lo = lo;
    rf.hi = hi;
    rf.piece_width = w;
    F best = F(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i] > best) {
            rf.records.push_back({detail::grid_point(lo, hi, w, i, n), ys[i]});
            best = ys[i];
        }
    }
    return rf;
}

// --------------------------------------------------------------------
// record file I/O: "# zeta-records v1 range=[lo,hi] piece=w" then "a y"
// lines in strictly increasing a (and y), with round-trip precision

template <std::floating_point F>
inline void write_records(const RecordFile<F>& rf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_records: cannot open " + path);
    char buf[160];
    std::snprintf(buf, sizeof buf, "# zeta-records v1 range=[%.17g,%.17g] piece=%.17g\n",
                  static_cast<double>(rf.lo), static_cast<double>(rf.hi),
                  static_cast<double>(rf.piece_width));
    out << buf;
    for (const auto& r : rf.records) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", static_cast<double>(r.a),
                      static_cast<double>(r.y));
        out << buf;
    }
    if (!out) throw std::runtime_error("write_records: write failed for " + path);
}

template <std::floating_point F>
inline RecordFile<F> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_records: cannot open " + path);
    std::string header;
    std::getline(in, header);
    RecordFile<F> rf;
    double lo = 0, hi = 0, w = 0;
    if (std::sscanf(header.c_str(), "# zeta-records v1 range=[%lf,%lf] piece=%lf", &lo,
                    &hi, &w) != 3)
        throw std::runtime_error("read_records: bad header in " + path);
    rf.lo = static_cast<F>(lo);
    rf.hi = static_cast<F>(hi);
    rf.piece_width = static_cast<F>(w);
    double a = 0, y = 0;
    while (in >> a >> y) {
        if (!rf.records.empty() &&
            !(a > rf.records.back().a && y > rf.records.back().y))
            throw std::runtime_error("read_records: records not strictly increasing");
        rf.records.push_back({static_cast<F>(a), static_cast<F>(y)});
    }
    return rf;
}

// --------------------------------------------------------------------

struct TableConstant {
    long scaled = 0;       // A * 10^4, rounded up
    double value = 0;      // scaled / 10^4 as a double
    double max_ratio = 0;  // upper bound of the best record ratio
};

// smallest 4-decimal A with y < A a^{1/6} log a for every record in range
template <std::floating_point F>
inline TableConstant table_constant(const RecordFile<F>& rf, F lo, F hi) {
    if (rf.records.empty()) throw std::domain_error("table_constant: no records");
    if (!(rf.lo <= lo + rf.piece_width && hi <= rf.hi + rf.piece_width))
        throw std::domain_error("table_constant: records do not cover the requested range");
    RInterval<F> best(F(0));
    bool any = false;
    for (const auto& r : rf.records) {
        if (r.a < lo || r.a > hi) continue;
        const RInterval<F> ai(r.a);
        const RInterval<F> ratio =
            RInterval<F>(r.y) / (root6(ai) * log(ai));
        best = any ? hull(best, ratio) : ratio;
        any = true;
    }
    if (!any) throw std::domain_error("table_constant: no records inside [lo, hi]");
    TableConstant tc;
    tc.max_ratio = static_cast<double>(best.hi);
    tc.scaled = static_cast<long>(std::ceil(static_cast<double>(best.hi) * 1e4));
    tc.value = static_cast<double>(tc.scaled) / 1e4;
    return tc;
}

// --------------------------------------------------------------------

// (4/(2pi)^{1/4}) t^{1/4}
template <std::floating_point F>
inline RInterval<F> lehman_bound(const RInterval<F>& t) {
    if (!(t.lo >= F(0.2))) throw std::domain_error("lehman_bound: requires t >= 0.2");
    return RInterval<F>(F(4)) / root4(two_pi_iv<F>()) * root4(t);
}

// A t^{1/6} log t
template <std::floating_point F>
inline RInterval<F> power_log_bound(const RInterval<F>& A, const RInterval<F>& t) {
    return A * root6(t) * log(t);
}

// Rigorous bisection of the sign change of f_hi - f_lo.  Both endpoint
// differences must have definite opposite signs; the returned interval has
// width <= width_target and brackets the verified crossing.
template <std::floating_point F>
inline RInterval<F> crossover(const std::function<RInterval<F>(RInterval<F>)>& f_lo,
                              const std::function<RInterval<F>(RInterval<F>)>& f_hi,
                              const RInterval<F>& bracket, F width_target = F(1e-3)) {
    auto diff = [&](F x) { return f_hi(RInterval<F>(x)) - f_lo(RInterval<F>(x)); };
    auto sign_of = [](const RInterval<F>& d) -> int {
        if (d.hi < F(0)) return -1;
        if (d.lo > F(0)) return 1;
        return 0;
    };
    F a = bracket.lo, b = bracket.hi;
    const int sa0 = sign_of(diff(a));
    int sb = sign_of(diff(b));
    if (sa0 == 0 || sb == 0 || sa0 == sb)
        throw std::domain_error("crossover: no verified sign change across the bracket");
    int sa = sa0;
    while (b - a > width_target) {
        // prefer the midpoint; when the difference enclosure straddles zero
        // there, try nearby split fractions before accepting the bracket
        bool advanced = false;
        for (F frac : {F(0.5), F(0.4375), F(0.5625), F(0.375), F(0.625)}) {
            const F mid = a + (b - a) * frac;
            if (!(a < mid && mid < b)) continue;
            const int sm = sign_of(diff(mid));
            if (sm == 0) continue;
            if (sm == sa) a = mid; else b = mid;
            advanced = true;
            break;
        }
        if (!advanced) break;  // as tight as the enclosures allow
    }
    return RInterval<F>(a, b);
}

// --------------------------------------------------------------------

template <std::floating_point F>
struct MinQResult {
    RInterval<F> enclosure;     // least Q with |zeta(1/2)| < A Q^{1/6} log Q
    RInterval<F> zeta_half;     // |zeta(1/2)| enclosure used
    bool certified_at = false;  // inequality certified at Q = certificate_q
    F certificate_q = F(0);
};

template <std::floating_point F>
inline MinQResult<F> min_Q(F target_constant, F certificate_q = F(4.678)) {
    if (!(target_constant > F(0))) throw std::domain_error("min_Q: target must be positive");
    MinQResult<F> out;
    const CInterval<F> s_half{RInterval<F>(F(0.5)), RInterval<F>(F(0))};
    out.zeta_half = cabs(em_zeta(s_half, EMParams{64, 10}));
    const RInterval<F> A(target_constant);
    auto g = [&](F q) {  // A q^{1/6} log q - |zeta(1/2)|; increasing for q >= 1
        return power_log_bound(A, RInterval<F>(q)) - out.zeta_half;
    };
    F a = F(1);  // g(1) = -|zeta(1/2)| < 0
    F b = F(2);
    int guard = 0;
    while (!(g(b).lo > F(0))) {
        b *= F(2);
        if (++guard > 60) throw std::domain_error("min_Q: threshold never exceeds |zeta(1/2)|");
    }
    while (b - a > F(1e-5) * std::max(F(1), a)) {
        const F mid = (a + b) / F(2);
        if (!(a < mid && mid < b)) break;
        const auto d = g(mid);
        if (d.lo > F(0)) b = mid;
        else if (d.hi < F(0)) a = mid;
        else break;  // undecidable strip; the bracket is already tight
    }
    out.enclosure = RInterval<F>(a, b);
    out.certificate_q = certificate_q;
    const RInterval<F> qc(detail::next_down(certificate_q), detail::next_up(certificate_q));
    out.certified_at = out.zeta_half.hi < power_log_bound(A, qc).lo;
    return out;
}

} // namespace zetabound
