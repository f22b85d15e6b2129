#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

namespace onto::detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// -?[0-9]+ — the textual shape only; 64-bit range is checked separately so
// out-of-range literals can fall back to strings.
inline bool is_int_lexeme(std::string_view s) {
    if (!s.empty() && s[0] == '-') s.remove_prefix(1);
    return all_digits(s);
}

// -?[0-9]+\.[0-9]+([eE][+-]?[0-9]+)? or -?[0-9]+[eE][+-]?[0-9]+
inline bool is_float_lexeme(std::string_view s) {
    if (!s.empty() && s[0] == '-') s.remove_prefix(1);
    std::size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == 0) return false;
    bool has_fraction = false;
    if (i < s.size() && s[i] == '.') {
        std::size_t j = ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == j) return false;
        has_fraction = true;
    }
    if (i == s.size()) return has_fraction;
    if (s[i] != 'e' && s[i] != 'E') return false;
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    return all_digits(s.substr(i));
}

inline bool is_bool_lexeme(std::string_view s) {
    return s == "true" || s == "false";
}

inline std::string format_int(std::int64_t v) {
    char buf[24];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

// Shortest decimal that round-trips to the identical 64-bit value; a ".0"
// suffix keeps integral floats re-inferring as floats.
inline std::string format_float(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, end);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos)
        s += ".0";
    return s;
}

} // namespace onto::detail
