#pragma once

#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/lp.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// Peeling threshold 1/(|E(H)| - disc_H(L)); positive because disc < |E(H)|
// for nonempty L, and at least 1/f(H, L).
Rational alpha_threshold(const Pattern& h, const Pattern& l,
                         const ResourceCaps& caps = ResourceCaps());

struct PeelResult {
    std::vector<int> peeled;                         // F1, in peel order
    std::vector<std::pair<int, Rational>> trace;     // (arc id, cover value at removal)
    std::vector<char> arc_active;                    // residual mask
    std::vector<char> copy_active;                   // copies avoiding F1
    FracSolution residual_solution;                  // optimal on the residual
    FracSolution original_solution;                  // first solve, nu*(D)
};

// Peeling loop: re-solve the LP, move one maximum-value arc with
// cover >= threshold (ties: smallest arc id) into F1, repeat until every
// value is below the threshold. One arc per re-solve. batch = true removes
// every qualifying arc per re-solve instead; faster, but outside the
// certified weight bound, so approximate_cover never uses it.
PeelResult peel_heavy_arcs(const Digraph& d, const Pattern& h,
                           const std::vector<Copy>& copies, const Rational& threshold,
                           Arith mode = Arith::exact,
                           const ResourceCaps& caps = ResourceCaps(), bool batch = false);

// Arcs (x, y) carrying positive cover whose part pair (part(x), part(y)) is
// not an arc of L; same-part arcs with positive cover always qualify. Parts
// are L-vertex indices (0-based).
std::vector<int> partition_cover(const Digraph& d, const std::vector<char>& arc_active,
                                 const std::vector<Rational>& cover, const Pattern& l,
                                 const std::vector<int>& assignment,
                                 Arith mode = Arith::exact);

// Expected partition_cover weight given a partial assignment (-1 means
// unassigned; each unassigned vertex is uniform over the r parts).
Rational conditional_expected_weight(const Digraph& d, const std::vector<char>& arc_active,
                                     const std::vector<Rational>& cover, const Pattern& l,
                                     const std::vector<int>& partial,
                                     Arith mode = Arith::exact);

struct DerandResult {
    std::vector<int> assignment;
    // expectation before any placement, then after each one; non-increasing
    std::vector<Rational> expectation_trace;
};

// Conditional-expectation derandomization: vertices in descending order of
// weighted degree over positive-cover arcs (ties: vertex index), each placed
// in the part minimizing the conditional expectation (ties: smallest part).
DerandResult derandomized_partition(const Digraph& d, const std::vector<char>& arc_active,
                                    const std::vector<Rational>& cover, const Pattern& l,
                                    Arith mode = Arith::exact);

struct CoverResult {
    std::vector<int> cover_arcs; // F, sorted
    Rational cover_weight;
    Rational nu_star_original;
    Rational ratio_bound;        // f(H, L)
    std::vector<std::pair<int, Rational>> peel_trace;
    std::vector<int> assignment;
    bool h_free_certified = false;
};

// Full pipeline: peel at 1/f(H,L), derandomize the partition of the residual,
// take F = F1 union F2. Certifies H-freeness by re-enumeration and enforces
// cover_weight <= f(H,L) * nu*(D) (exact in rational mode).
CoverResult approximate_cover(const Digraph& d, const Pattern& h, const Pattern& l,
                              Arith mode = Arith::exact,
                              const ResourceCaps& caps = ResourceCaps());

// Undirected K_k-cover: orient G acyclically, cover with
// H = T_k and L = C_2; the ratio f(T_k, C_2) = b(T_k) = floor(k^2/4). The
// returned arc ids equal edge ids of G.
CoverResult undirected_kk_cover(const UndirectedGraph& g, int k,
                                Arith mode = Arith::exact,
                                const ResourceCaps& caps = ResourceCaps());

} // namespace hcover
