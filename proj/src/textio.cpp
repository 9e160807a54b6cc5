#include "zetabound/textio.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace zetabound {

namespace {

double step_down(double x) { return std::nextafter(x, -HUGE_VAL); }
double step_up(double x) { return std::nextafter(x, HUGE_VAL); }

// Decide whether the decimal literal equals its strtod image exactly.
// Sufficient test: mantissa digits fit a 64-bit integer m, the effective
// power of ten e is in [0, 22], and m * 10^e round-trips through double.
// All arithmetic runs in 80-bit long double, exact in that range.
bool provably_exact(const std::string& s, double parsed) {
    long long mantissa = 0;
    int digits = 0, frac_digits = 0;
    long long expo = 0;
    bool neg = false, in_frac = false, any_digit = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') {
            if (++digits > 17) return false;
            mantissa = mantissa * 10 + (c - '0');
            if (in_frac) ++frac_digits;
            any_digit = true;
        } else if (c == '.' && !in_frac) {
            in_frac = true;
        } else if ((c == 'e' || c == 'E') && any_digit) {
            expo = std::strtoll(s.c_str() + i + 1, nullptr, 10);
            break;
        } else {
            return false;
        }
    }
    if (!any_digit) return false;
    const long long e = expo - frac_digits;
    if (e < 0 || e > 22) return false;
    long double v = static_cast<long double>(mantissa);
    for (long long k = 0; k < e; ++k) {
        v *= 10.0L;
        if (v > 0x1p62L) return false;
    }
    if (neg) v = -v;
    return static_cast<long double>(parsed) == v &&
           static_cast<long double>(static_cast<double>(v)) == v;
}

} // namespace

DecimalInterval parse_decimal_outward(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("parse_decimal_outward: not a number: " + text);
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end)))
            throw std::invalid_argument("parse_decimal_outward: trailing junk in: " + text);
        ++end;
    }
    if (!std::isfinite(v))
        throw std::invalid_argument("parse_decimal_outward: out of range: " + text);
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    std::size_t start = 0;
    while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
        ++start;
    trimmed = trimmed.substr(start);
    if (provably_exact(trimmed, v)) return {v, v, true};
    // strtod is correctly rounded, so the true decimal is within half an ulp
    return {step_down(v), step_up(v), false};
}

std::map<std::string, std::string> read_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_key_values: cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (blank) continue;
            throw std::runtime_error("read_key_values: bad line " + std::to_string(lineno) +
                                     " in " + path);
        }
        auto trim = [](std::string s) {
            std::size_t a = 0, b = s.size();
            while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
            return s.substr(a, b - a);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void write_key_values(const std::string& path,
                      const std::map<std::string, std::string>& kv) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_key_values: cannot open " + path);
    for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
    if (!out) throw std::runtime_error("write_key_values: write failed for " + path);
}

} // namespace zetabound
