#pragma once

#include <cstdint>
#include <string>

namespace hcover {

// Caps for the exponential-size searches. The defaults are desk-scale; the
// ARC_COVER_CAPS environment variable overrides them with a comma-separated
// "key=value" list (keys match the field names below).
struct ResourceCaps {
    int pattern_vertices = 8;              // enumerate_copies: max |V(H)|
    std::uint64_t copies = 5000000;        // enumerate_copies: max copy count
    std::uint64_t disc_maps = 10000000;    // disc: max |V(L)|^{|V(H)|}
    int gamma_vertices = 16;               // gamma: max |V(H)| for the subset DP
    int b_vertices = 24;                   // b_param: max |V(H)| for the cut search
    std::uint64_t oracle_copies = 20000;   // exact_tau / exact_nu: max copy count
    std::uint64_t oracle_nodes = 2000000;  // exact_tau / exact_nu: search-tree cap
    int decompose_n = 15;                  // decompose_kn: max n
    std::uint64_t decompose_steps = 50000000; // decompose_kn: backtracking budget
    std::uint64_t simplex_pivots = 2000000;   // LP solver iteration cap

    void apply_overrides(const std::string& spec);

    // Defaults plus ARC_COVER_CAPS overrides, if the variable is set.
    static ResourceCaps from_env();
};

} // namespace hcover
