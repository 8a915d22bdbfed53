#pragma once

#include <charconv>
#include <string>
#include <string_view>

// Shortest round-trip decimal encoding for every numeric value we write.
namespace dmdd::detail {

inline std::string format_double(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline bool parse_double(std::string_view cell, double& out) {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    if (cell.empty()) {
        return false;
    }
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace dmdd::detail
