#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blackbody {

/// Scientific notation, 9 significant digits, locale independent.
inline std::string format_sci(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 8);
    return std::string(buf, res.ptr);
}

/// Parses a full token as a double (plain or scientific), locale independent.
inline double parse_double(std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(token) + "'");
    return value;
}

}  // namespace blackbody
