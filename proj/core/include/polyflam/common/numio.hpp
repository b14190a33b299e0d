#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>

#include "polyflam/common/error.hpp"

namespace polyflam {

// Shortest round-trip decimal form. Used for every float the pipeline writes,
// so reruns with identical inputs produce byte-identical files.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& context) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{}) {
        throw SchemaError("expected a number in " + context + ", got '" + std::string(text) + "'");
    }
    for (const char* p = res.ptr; p != last; ++p) {
        if (*p != ' ' && *p != '\t' && *p != '\r') {
            throw SchemaError("trailing characters after number in " + context + ": '" +
                              std::string(text) + "'");
        }
    }
    return value;
}

inline long parse_int(std::string_view text, const std::string& context) {
    long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{}) {
        throw SchemaError("expected an integer in " + context + ", got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace polyflam
