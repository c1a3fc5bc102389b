#pragma once

#include <stdexcept>
#include <string>

namespace eip {

// Invalid argument, malformed input file, violated family constraint, parse error.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a configured exhaustive-search or DP size limit.
// Exceeding a limit is always an error, never a silent approximation.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace eip
