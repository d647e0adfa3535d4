#pragma once

#include <charconv>
#include <string>

namespace harmdiff {

/// Shortest decimal string that parses back to the same double
/// (round-trip exact, deterministic bytes).
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace harmdiff
