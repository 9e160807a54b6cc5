// Drives the built zeta-bound binary end to end: flag parsing, exit codes,
// and byte-identical output for identical invocations.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;

#define CLI_CHECK(cond, what)                                          \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::cerr << "FAIL " << what << " at line " << __LINE__ << "\n"; \
            ++g_failures;                                              \
        }                                                              \
    } while (0)

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ZB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main() {
    // eval at the first zero: EM path, tiny lower bound
    auto ev = run("eval --t 14.1347251417 --digits 6");
    CLI_CHECK(ev.status == 0, "eval exit");
    CLI_CHECK(contains(ev.out, "method EM"), "eval method");
    CLI_CHECK(contains(ev.out, "e-1") || contains(ev.out, "e-11"), "eval tiny enclosure");

    // eval above 200 dispatches to RS
    auto ev2 = run("eval --t 1500");
    CLI_CHECK(ev2.status == 0, "eval RS exit");
    CLI_CHECK(contains(ev2.out, "method RS"), "eval RS method");

    // check-theorem with the published defaults certifies 0.732
    auto th = run("check-theorem --k 1.16 --theta 7.5 --a0 3.37 --t0 5.867e9 --target 0.732 --digits 12");
    CLI_CHECK(th.status == 0, "check-theorem exit");
    CLI_CHECK(contains(th.out, "THEOREM PASS"), "check-theorem verdict");
    CLI_CHECK(contains(th.out, "D1"), "check-theorem echoes the chain");

    // and fails against an unreachable target, with nonzero status
    auto th_bad = run("check-theorem --target 0.5");
    CLI_CHECK(th_bad.status == 1, "check-theorem fail exit");
    CLI_CHECK(contains(th_bad.out, "THEOREM FAIL"), "check-theorem fail verdict");

    // min-q certifies the corollary constant
    auto mq = run("min-q --target 0.732");
    CLI_CHECK(mq.status == 0, "min-q exit");
    CLI_CHECK(contains(mq.out, "MINQ PASS"), "min-q verdict");

    // crossover bracket near 226.7088
    auto cx = run("crossover --lo 200 --hi 300 --a 0.732 --digits 10");
    CLI_CHECK(cx.status == 0, "crossover exit");
    CLI_CHECK(contains(cx.out, "226.708"), "crossover bracket");

    // a small verify-range must pass and exit zero
    auto vr = run("verify-range --lo 2 --hi 2.5 --a 0.732 --threads 2");
    CLI_CHECK(vr.status == 0, "verify-range exit");
    CLI_CHECK(contains(vr.out, "VERIFY PASS"), "verify-range verdict");

    // and fail with status 1 when the constant is too small
    auto vr_bad = run("verify-range --lo 2 --hi 2.1 --a 0.45 --threads 2");
    CLI_CHECK(vr_bad.status == 1, "verify-range fail exit");
    CLI_CHECK(contains(vr_bad.out, "VERIFY FAIL"), "verify-range fail verdict");

    // records -> table round trip through a file
    auto rec = run("records --lo 2 --hi 2.5 --out /tmp/zb_cli_records.txt --threads 2");
    CLI_CHECK(rec.status == 0, "records exit");
    auto tab = run("table --records /tmp/zb_cli_records.txt --lo 2 --hi 2.5");
    CLI_CHECK(tab.status == 0, "table exit");
    CLI_CHECK(contains(tab.out, "A 0.6936"), "table value");
    std::remove("/tmp/zb_cli_records.txt");

    // small lemma batteries
    auto lm = run("check-lemmas --lemma1-samples 50 --lemma2-lmax 8 --lemma3-samples 5 "
                  "--lemma3-tmax 2000 --moments-max 500");
    CLI_CHECK(lm.status == 0, "check-lemmas exit");
    CLI_CHECK(contains(lm.out, "LEMMAS PASS"), "check-lemmas verdict");

    // byte-identical output for identical invocations, including threading
    auto a = run("verify-range --lo 2 --hi 3 --a 0.732 --threads 1");
    auto b = run("verify-range --lo 2 --hi 3 --a 0.732 --threads 2");
    CLI_CHECK(a.out == b.out, "thread-count independent output");
    auto c = run("eval --t 300.5 --digits 14");
    auto d = run("eval --t 300.5 --digits 14");
    CLI_CHECK(c.out == d.out, "byte-identical repetition");

    // extended precision lane via the environment variable
    auto ext = run("--precision extended eval --t 300.5");
    CLI_CHECK(ext.status == 0, "extended lane exit");
    CLI_CHECK(contains(ext.out, "method RS"), "extended lane output");

    // bad flags produce usage text and a nonzero status
    auto bad = run("eval");
    CLI_CHECK(bad.status != 0, "missing required flag");
    auto bad2 = run("eval --t notanumber");
    CLI_CHECK(bad2.status != 0, "malformed decimal");

    // optimize-params on a degenerate box reproduces the published point
    auto op = run("optimize-params --k-min 1.16 --k-max 1.16 --theta-min 7.5 --theta-max 7.5 "
                  "--a0-min 3.37 --a0-max 3.37 --grid 1 --rounds 1");
    CLI_CHECK(op.status == 0, "optimize exit");
    CLI_CHECK(contains(op.out, "OPTIMIZE PASS"), "optimize verdict");

    if (g_failures == 0) {
        std::puts("test_cli: all checks passed");
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failures\n";
    return 1;
}
