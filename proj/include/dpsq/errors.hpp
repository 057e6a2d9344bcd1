#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpsq {

// Bad user input: malformed files, out-of-range vertices, loops, non-subcubic
// graphs where subcubic is required, unknown generator names, ...
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid cover: pair sets that are not matchings, indices out of
// range, matchings attached to non-edges.  Also exit code 2.
struct invalid_cover_error : input_error {
    explicit invalid_cover_error(const std::string& msg) : input_error(msg) {}
};

// An exhaustive search ran out of its configured budget before reaching a
// verdict.  Never silently converted into an answer; the CLI maps it to exit
// code 3.  Carries how much of the search space was covered so reports can be
// honest about partial progress.
struct budget_error : std::runtime_error {
    std::uint64_t covers_checked = 0;   // covers fully tested before giving up
    double space_estimate = 0.0;        // total covers in the space (inf if huge)
    explicit budget_error(const std::string& msg, std::uint64_t checked = 0,
                          double space = 0.0)
        : std::runtime_error(msg), covers_checked(checked), space_estimate(space) {}
};

} // namespace dpsq
