#pragma once
#include <cstdint>
#include <cstdlib>
#include <string>

namespace dpsq {

// Caps for the exhaustive searches.  max_covers bounds adversarial cover
// enumeration per call, max_nodes bounds the backtracking inside a single
// transversal search.  The environment variable DPSQ_BUDGET (a single integer)
// overrides max_covers.
struct Budget {
    std::uint64_t max_covers = 10'000'000;
    std::uint64_t max_nodes = 1'000'000;
    int enum_max_n = 10;   // enumerate_subcubic refuses larger n
    int iso_max_n = 12;    // is_isomorphic refuses larger graphs

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("DPSQ_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) b.max_covers = v;
        }
        return b;
    }
};

} // namespace dpsq
