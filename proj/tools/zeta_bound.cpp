// zeta-bound: rigorous enclosures of |zeta(1/2+it)|, verified range sweeps
// and record files, the explicit-constant cascade with its certified
// supremum, bound crossovers, and the minimal-Q computation.
//
// All numeric flags are decimal strings converted outward into intervals,
// so "--t0 5.867e9" always means the rigorous enclosure of that decimal.
// Output layout depends only on the flags (never on thread timing), and
// --digits controls printing alone.  The env var ZETA_BOUND_PRECISION (or
// --precision) selects the endpoint type: "double" (default) or "extended"
// (long double).

#include <CLI11.hpp>

#include "zetabound/bounds_chain.hpp"
#include "zetabound/lemma_checks.hpp"
#include "zetabound/sweep.hpp"
#include "zetabound/textio.hpp"
#include "zetabound/zeta.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

int g_digits = 10;

template <std::floating_point F>
zetabound::RInterval<F> iv_of(const zetabound::DecimalInterval& d) {
    return zetabound::RInterval<F>(static_cast<F>(d.lo), static_cast<F>(d.hi));
}

template <std::floating_point F>
zetabound::RInterval<F> parse_iv(const std::string& text) {
    return iv_of<F>(zetabound::parse_decimal_outward(text));
}

template <std::floating_point F>
std::string fmt(const zetabound::RInterval<F>& x) {
    return zetabound::to_string(x, g_digits);
}

std::string fmt1(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", g_digits, v);
    return buf;
}

struct CommonFlags {
    std::string precision = "double";
    unsigned threads = 0;
};

// ----------------------------------------------------------------- eval

struct EvalFlags {
    std::string t, width = "0";
    int rs_terms = 2;
    std::string em_tol = "1e-9";
};

template <std::floating_point F>
int run_eval(const EvalFlags& fl) {
    using namespace zetabound;
    const RInterval<F> t0 = parse_iv<F>(fl.t);
    const RInterval<F> w = parse_iv<F>(fl.width);
    const RInterval<F> t(t0.lo, t0.hi + w.hi);
    ZetaOptions<F> opt;
    opt.rs_terms = fl.rs_terms;
    opt.em_tolerance = static_cast<F>(parse_decimal_outward(fl.em_tol).lo);
    const auto enc = abs_zeta_half(t, opt);
    std::printf("t in %s\n", fmt(enc.t_range).c_str());
    std::printf("method %s\n", enc.method == ZetaMethod::RS ? "RS" : "EM");
    std::printf("|zeta(1/2+it)| in %s\n", fmt(enc.value).c_str());
    return 0;
}

// --------------------------------------------------------- verify-range

struct VerifyFlags {
    std::string lo, hi, a;
    std::string piece_width = "0.0009765625";  // 1/1024
    int max_depth = 20;
    int rs_terms = 2;
};

template <std::floating_point F>
int run_verify(const VerifyFlags& fl, const CommonFlags& com) {
    using namespace zetabound;
    SweepConfig cfg;
    cfg.piece_width = parse_decimal_outward(fl.piece_width).lo;
    cfg.max_depth = fl.max_depth;
    cfg.rs_terms = fl.rs_terms;
    cfg.threads = com.threads;
    const RInterval<F> A = parse_iv<F>(fl.a);
    const auto rep = verify_range<F>(static_cast<F>(parse_decimal_outward(fl.lo).lo),
                                     static_cast<F>(parse_decimal_outward(fl.hi).hi), A, cfg);
    std::printf("range [%s, %s]  A %s\n", fl.lo.c_str(), fl.hi.c_str(), fl.a.c_str());
    std::printf("pieces %zu  evaluations %zu  deepest %d\n", rep.pieces, rep.evaluations,
                rep.deepest);
    for (const auto& f : rep.failures)
        std::printf("failure [%s, %s] depth %d %s\n", fmt1(f.a).c_str(), fmt1(f.b).c_str(),
                    f.depth, f.counterexample ? "threshold exceeded" : "inconclusive");
    std::printf("VERIFY %s\n", rep.success() ? "PASS" : "FAIL");
    return rep.success() ? 0 : 1;
}

// -------------------------------------------------------------- records

struct RecordsFlags {
    std::string lo, hi, out;
    std::string piece_width = "0.0009765625";
    int refine_depth = 10;
    int rs_terms = 2;
};

template <std::floating_point F>
int run_records(const RecordsFlags& fl, const CommonFlags& com) {
    using namespace zetabound;
    SweepConfig cfg;
    cfg.piece_width = parse_decimal_outward(fl.piece_width).lo;
    cfg.record_refine_depth = fl.refine_depth;
    cfg.rs_terms = fl.rs_terms;
    cfg.threads = com.threads;
    const auto rf = record_sweep<F>(static_cast<F>(parse_decimal_outward(fl.lo).lo),
                                    static_cast<F>(parse_decimal_outward(fl.hi).hi), cfg);
    write_records(rf, fl.out);
    const auto tc = table_constant(rf, rf.lo, rf.hi);
    std::printf("records %zu  written %s\n", rf.records.size(), fl.out.c_str());
    std::printf("max ratio %s  table constant %.4f\n", fmt1(tc.max_ratio).c_str(), tc.value);
    return 0;
}

struct TableFlags {
    std::string records, lo, hi;
};

template <std::floating_point F>
int run_table(const TableFlags& fl) {
    using namespace zetabound;
    const auto rf = read_records<F>(fl.records);
    const auto tc = table_constant(rf, static_cast<F>(parse_decimal_outward(fl.lo).lo),
                                   static_cast<F>(parse_decimal_outward(fl.hi).hi));
    std::printf("records %zu in range\n", rf.records.size());
    std::printf("max ratio %s\n", fmt1(tc.max_ratio).c_str());
    std::printf("A %.4f\n", tc.value);
    return 0;
}

// -------------------------------------------------------- check-theorem

struct TheoremFlags {
    std::string k = "1.16", theta = "7.5", a0 = "3.37", t0 = "5.867e9";
    std::string target = "0.732";
    std::string params_file;
};

template <std::floating_point F>
zetabound::BoundParams<F> theorem_params(const TheoremFlags& fl) {
    std::string k = fl.k, th = fl.theta, a0 = fl.a0, t0 = fl.t0;
    if (!fl.params_file.empty()) {
        const auto kv = zetabound::read_key_values(fl.params_file);
        if (auto it = kv.find("k"); it != kv.end()) k = it->second;
        if (auto it = kv.find("theta"); it != kv.end()) th = it->second;
        if (auto it = kv.find("a0"); it != kv.end()) a0 = it->second;
        if (auto it = kv.find("t0"); it != kv.end()) t0 = it->second;
    }
    return {parse_iv<F>(k), parse_iv<F>(th), parse_iv<F>(a0), parse_iv<F>(t0)};
}

template <std::floating_point F>
int run_theorem(const TheoremFlags& fl) {
    using namespace zetabound;
    const BoundParams<F> p = theorem_params<F>(fl);
    const auto fr = feasibility(p);
    std::printf("feasibility\n%s", fr.describe().c_str());
    if (!fr.all()) {
        std::printf("THEOREM FAIL infeasible\n");
        return 1;
    }
    const F target = static_cast<F>(parse_decimal_outward(fl.target).lo);
    const auto rep = verify_large_t(p, target);
    const auto& c = rep.chain;
    std::printf("Y0 %s\n", fmt(c.y0).c_str());
    std::printf("D1 %s\nD2 %s\nD3 %s\nD4 %s\nD5 %s\n", fmt(c.d1).c_str(), fmt(c.d2).c_str(),
                fmt(c.d3).c_str(), fmt(c.d4).c_str(), fmt(c.d5).c_str());
    for (int i = 0; i < 5; ++i)
        std::printf("term%d %s\n", i + 1, fmt(rep.term[i]).c_str());
    std::printf("sup ratio bound %s\n", fmt(rep.sup_bound).c_str());
    std::printf("THEOREM %s sup <= %s for t >= t0\n", rep.pass ? "PASS" : "FAIL",
                fl.target.c_str());
    return rep.pass ? 0 : 1;
}

// ------------------------------------------------------ optimize-params

struct OptFlags {
    std::string k_min = "1.05", k_max = "1.5";
    std::string theta_min = "1", theta_max = "20";
    std::string a0_min = "1.5", a0_max = "6";
    std::string t0 = "5.867e9", target = "0.732";
    int grid = 7, rounds = 4;
    std::string out;
};

template <std::floating_point F>
int run_optimize(const OptFlags& fl) {
    using namespace zetabound;
    ParamBox<F> box{static_cast<F>(parse_decimal_outward(fl.k_min).lo),
                    static_cast<F>(parse_decimal_outward(fl.k_max).hi),
                    static_cast<F>(parse_decimal_outward(fl.theta_min).lo),
                    static_cast<F>(parse_decimal_outward(fl.theta_max).hi),
                    static_cast<F>(parse_decimal_outward(fl.a0_min).lo),
                    static_cast<F>(parse_decimal_outward(fl.a0_max).hi)};
    const F t0 = static_cast<F>(parse_decimal_outward(fl.t0).lo);
    const F target = static_cast<F>(parse_decimal_outward(fl.target).lo);
    const auto best = optimize_params(box, t0, target, fl.grid, fl.rounds);
    std::printf("k %s\ntheta %s\na0 %s\nt0 %s\n", fmt1(best.params.k.lo).c_str(),
                fmt1(best.params.theta.lo).c_str(), fmt1(best.params.a0.lo).c_str(),
                fl.t0.c_str());
    std::printf("certified sup ratio %s\n", fmt1(best.certified).c_str());
    if (!fl.out.empty()) {
        char buf[64];
        std::map<std::string, std::string> kv;
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(best.params.k.lo));
        kv["k"] = buf;
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(best.params.theta.lo));
        kv["theta"] = buf;
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(best.params.a0.lo));
        kv["a0"] = buf;
        kv["t0"] = fl.t0;
        write_key_values(fl.out, kv);
        std::printf("written %s\n", fl.out.c_str());
    }
    std::printf("OPTIMIZE %s\n", best.certified <= target ? "PASS" : "FAIL");
    return best.certified <= target ? 0 : 1;
}

// ------------------------------------------------------------ crossover

struct CrossFlags {
    std::string lo, hi;
    std::string a = "0.732";
    std::string width = "1e-3";
};

template <std::floating_point F>
int run_crossover(const CrossFlags& fl) {
    using namespace zetabound;
    const RInterval<F> A = parse_iv<F>(fl.a);
    auto theorem_shape = [A](RInterval<F> t) { return power_log_bound(A, t); };
    auto lehman = [](RInterval<F> t) { return lehman_bound(t); };
    const RInterval<F> bracket(static_cast<F>(parse_decimal_outward(fl.lo).lo),
                               static_cast<F>(parse_decimal_outward(fl.hi).hi));
    const F width = static_cast<F>(parse_decimal_outward(fl.width).hi);
    const RInterval<F> cr = crossover<F>(lehman, theorem_shape, bracket, width);
    std::printf("crossing of lehman and %s*t^(1/6)*log t\n", fl.a.c_str());
    std::printf("bracket %s  width %s\n", fmt(cr).c_str(), fmt1(cr.width()).c_str());
    return 0;
}

// ---------------------------------------------------------------- min-q

struct MinQFlags {
    std::string target = "0.732";
    std::string at = "4.678";
};

template <std::floating_point F>
int run_minq(const MinQFlags& fl) {
    using namespace zetabound;
    const auto res = min_Q<F>(static_cast<F>(parse_decimal_outward(fl.target).lo),
                              static_cast<F>(parse_decimal_outward(fl.at).lo));
    std::printf("|zeta(1/2)| in %s\n", fmt(res.zeta_half).c_str());
    std::printf("least Q in %s\n", fmt(res.enclosure).c_str());
    std::printf("MINQ %s inequality at Q=%s\n", res.certified_at ? "PASS" : "FAIL",
                fl.at.c_str());
    return res.certified_at ? 0 : 1;
}

// --------------------------------------------------------- check-lemmas

struct LemmaFlags {
    long lemma1_samples = 1000;
    long lemma2_lmax = 20;
    long lemma3_samples = 50;
    std::string lemma3_tmax = "1e5";
    long moments_max = 10000;
    std::uint64_t seed = 20240814;
};

template <std::floating_point F>
int run_lemmas(const LemmaFlags& fl) {
    using namespace zetabound;
    const BatteryReport reports[] = {
        battery_lemma1<F>(fl.lemma1_samples, fl.seed),
        battery_lemma2<F>(fl.lemma2_lmax, fl.seed + 1),
        battery_lemma3<F>(fl.lemma3_samples,
                          static_cast<F>(parse_decimal_outward(fl.lemma3_tmax).lo),
                          fl.seed + 2),
        battery_moments<F>(fl.moments_max),
    };
    bool all = true;
    for (const auto& r : reports) {
        std::printf("%s  %s  trials %ld  failures %ld%s%s\n", r.pass() ? "PASS" : "FAIL",
                    r.name.c_str(), r.trials, r.failures,
                    r.first_failure.empty() ? "" : "  first: ",
                    r.first_failure.c_str());
        all = all && r.pass();
    }
    std::printf("LEMMAS %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}

bool use_extended(const CommonFlags& com) {
    std::string p = com.precision;
    if (const char* env = std::getenv("ZETA_BOUND_PRECISION"); env && p == "double")
        p = env;
    if (p == "double" || p == "53") return false;
    if (p == "extended" || p == "64" || p == "long-double") return true;
    throw CLI::ValidationError("precision must be 'double' or 'extended', got " + p);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigorous bounds for |zeta(1/2+it)|"};
    app.require_subcommand(1);

    CommonFlags com;
    app.add_option("--digits", g_digits, "printed digits (output only)")
        ->capture_default_str();
    app.add_option("--threads", com.threads, "worker threads (0 = all cores)")
        ->capture_default_str();
    app.add_option("--precision", com.precision,
                   "endpoint type: double or extended (env ZETA_BOUND_PRECISION)")
        ->capture_default_str();

    EvalFlags ev;
    auto* c_eval = app.add_subcommand("eval", "enclose |zeta(1/2+it)|");
    c_eval->add_option("--t", ev.t, "height t (decimal)")->required();
    c_eval->add_option("--width", ev.width, "interval width above t")->capture_default_str();
    c_eval->add_option("--rs-terms", ev.rs_terms, "Riemann-Siegel correction terms (0..4)")
        ->capture_default_str();
    c_eval->add_option("--em-tol", ev.em_tol, "Euler-Maclaurin remainder tolerance")
        ->capture_default_str();

    VerifyFlags vf;
    auto* c_verify = app.add_subcommand("verify-range", "verify |zeta| < A t^(1/6) log t on [lo,hi]");
    c_verify->add_option("--lo", vf.lo)->required();
    c_verify->add_option("--hi", vf.hi)->required();
    c_verify->add_option("--a", vf.a, "constant A")->required();
    c_verify->add_option("--piece-width", vf.piece_width)->capture_default_str();
    c_verify->add_option("--max-depth", vf.max_depth)->capture_default_str();
    c_verify->add_option("--rs-terms", vf.rs_terms)->capture_default_str();

    RecordsFlags rc;
    auto* c_records = app.add_subcommand("records", "record sweep of |zeta| maxima");
    c_records->add_option("--lo", rc.lo)->required();
    c_records->add_option("--hi", rc.hi)->required();
    c_records->add_option("--out", rc.out, "record file to write")->required();
    c_records->add_option("--piece-width", rc.piece_width)->capture_default_str();
    c_records->add_option("--refine-depth", rc.refine_depth)->capture_default_str();
    c_records->add_option("--rs-terms", rc.rs_terms)->capture_default_str();

    TableFlags tb;
    auto* c_table = app.add_subcommand("table", "least 4-decimal A for a swept range");
    c_table->add_option("--records", tb.records, "record file")->required();
    c_table->add_option("--lo", tb.lo)->required();
    c_table->add_option("--hi", tb.hi)->required();

    TheoremFlags th;
    auto* c_theorem = app.add_subcommand("check-theorem", "certify the constant cascade");
    c_theorem->add_option("--k", th.k)->capture_default_str();
    c_theorem->add_option("--theta", th.theta)->capture_default_str();
    c_theorem->add_option("--a0", th.a0)->capture_default_str();
    c_theorem->add_option("--t0", th.t0)->capture_default_str();
    c_theorem->add_option("--target", th.target)->capture_default_str();
    c_theorem->add_option("--params", th.params_file, "key = value parameter file");

    OptFlags op;
    auto* c_opt = app.add_subcommand("optimize-params", "search (k, theta, A0) for the least certified sup");
    c_opt->add_option("--k-min", op.k_min)->capture_default_str();
    c_opt->add_option("--k-max", op.k_max)->capture_default_str();
    c_opt->add_option("--theta-min", op.theta_min)->capture_default_str();
    c_opt->add_option("--theta-max", op.theta_max)->capture_default_str();
    c_opt->add_option("--a0-min", op.a0_min)->capture_default_str();
    c_opt->add_option("--a0-max", op.a0_max)->capture_default_str();
    c_opt->add_option("--t0", op.t0)->capture_default_str();
    c_opt->add_option("--target", op.target)->capture_default_str();
    c_opt->add_option("--grid", op.grid)->capture_default_str();
    c_opt->add_option("--rounds", op.rounds)->capture_default_str();
    c_opt->add_option("--out", op.out, "write best parameters to this file");

    CrossFlags cx;
    auto* c_cross = app.add_subcommand("crossover", "bracket the lehman/theorem-bound crossing");
    c_cross->add_option("--lo", cx.lo)->required();
    c_cross->add_option("--hi", cx.hi)->required();
    c_cross->add_option("--a", cx.a)->capture_default_str();
    c_cross->add_option("--width", cx.width)->capture_default_str();

    MinQFlags mq;
    auto* c_minq = app.add_subcommand("min-q", "least Q with |zeta(1/2)| < A Q^(1/6) log Q");
    c_minq->add_option("--target", mq.target)->capture_default_str();
    c_minq->add_option("--at", mq.at, "also certify the inequality at this Q")
        ->capture_default_str();

    LemmaFlags lm;
    auto* c_lemmas = app.add_subcommand("check-lemmas", "run the domination batteries");
    c_lemmas->add_option("--lemma1-samples", lm.lemma1_samples)->capture_default_str();
    c_lemmas->add_option("--lemma2-lmax", lm.lemma2_lmax)->capture_default_str();
    c_lemmas->add_option("--lemma3-samples", lm.lemma3_samples)->capture_default_str();
    c_lemmas->add_option("--lemma3-tmax", lm.lemma3_tmax)->capture_default_str();
    c_lemmas->add_option("--moments-max", lm.moments_max)->capture_default_str();
    c_lemmas->add_option("--seed", lm.seed)->capture_default_str();

    for (CLI::App* sub :
         {c_eval, c_verify, c_records, c_table, c_theorem, c_opt, c_cross, c_minq, c_lemmas})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const bool ext = use_extended(com);
        auto dispatch = [&](auto fn_d, auto fn_e) { return ext ? fn_e() : fn_d(); };
        if (c_eval->parsed())
            return dispatch([&] { return run_eval<double>(ev); },
                            [&] { return run_eval<long double>(ev); });
        if (c_verify->parsed())
            return dispatch([&] { return run_verify<double>(vf, com); },
                            [&] { return run_verify<long double>(vf, com); });
        if (c_records->parsed())
            return dispatch([&] { return run_records<double>(rc, com); },
                            [&] { return run_records<long double>(rc, com); });
        if (c_table->parsed())
            return dispatch([&] { return run_table<double>(tb); },
                            [&] { return run_table<long double>(tb); });
        if (c_theorem->parsed())
            return dispatch([&] { return run_theorem<double>(th); },
                            [&] { return run_theorem<long double>(th); });
        if (c_opt->parsed())
            return dispatch([&] { return run_optimize<double>(op); },
                            [&] { return run_optimize<long double>(op); });
        if (c_cross->parsed())
            return dispatch([&] { return run_crossover<double>(cx); },
                            [&] { return run_crossover<long double>(cx); });
        if (c_minq->parsed())
            return dispatch([&] { return run_minq<double>(mq); },
                            [&] { return run_minq<long double>(mq); });
        if (c_lemmas->parsed())
            return dispatch([&] { return run_lemmas<double>(lm); },
                            [&] { return run_lemmas<long double>(lm); });
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
