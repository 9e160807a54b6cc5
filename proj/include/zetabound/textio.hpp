#pragma once

// Decimal-to-interval parsing and the line-oriented key = value parameter
// format.  A numeric flag like "5.867e9" always denotes the rigorous
// enclosure of that decimal: the parse result is widened by one ulp on each
// side unless the decimal is provably representable (an integer mantissa
// times a nonnegative power of ten that fits a double exactly).

#include <map>
#include <string>

namespace zetabound {

struct DecimalInterval {
    double lo;
    double hi;
    bool exact;  // the decimal is exactly representable; lo == hi
};

// throws std::invalid_argument on malformed input
DecimalInterval parse_decimal_outward(const std::string& text);

// "key = value" lines; '#' starts a comment, blank lines ignored
std::map<std::string, std::string> read_key_values(const std::string& path);
void write_key_values(const std::string& path,
                      const std::map<std::string, std::string>& kv);

} // namespace zetabound
