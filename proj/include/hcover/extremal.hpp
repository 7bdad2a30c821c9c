#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// C_k-decomposition of K_n: every unordered pair of [n] is a consecutive
// pair of exactly one cycle; cycle count n(n-1)/(2k).
struct CycleDecomposition {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> cycles;
};

// Backtracking search that always covers the lexicographically smallest
// uncovered pair next (embedded as the first edge of the next cycle, second
// vertex minimal). Deterministic; fails with ResourceLimitError when the
// step budget runs out.
CycleDecomposition decompose_kn(int n, int k, const ResourceCaps& caps = ResourceCaps());

bool validate_decomposition(const CycleDecomposition& dec);

// Orient each cycle in one of its two rotational directions by seeded coin
// flips; the result is a regular tournament.
Digraph orient_decomposition(const CycleDecomposition& dec, std::uint64_t seed);

// The oriented cycles as arc-disjoint C_k copies of T, as indices into
// enumerate_copies(T, C_k). Size n(n-1)/(2k) plus the trivial bound
// nu* <= |E(K_n)|/k pins nu_k(T) = nu*_k(T) = n(n-1)/(2k).
std::vector<std::size_t> packing_from_decomposition(const CycleDecomposition& dec,
                                                    const Digraph& t,
                                                    const ResourceCaps& caps = ResourceCaps());

// Haggkvist-Thomassen arc bound for C_k-free digraphs: n(n-1)/2 + (k-2)n/2.
Rational ht_bound(int n, int k);

struct HtReport {
    bool ck_free = false;
    long arc_count = 0;
    Rational bound;
    bool consistent = false; // !ck_free || arc_count <= bound
};

HtReport check_ht(const Digraph& d, int k, const ResourceCaps& caps = ResourceCaps());

// Text format: header "n k", one cycle of k vertex indices per line.
std::string serialize_decomposition(const CycleDecomposition& dec);
CycleDecomposition parse_decomposition(const std::string& text);

} // namespace hcover
