#pragma once

#include <cstdint>
#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/rational.hpp"

namespace hcover {

struct OracleResult {
    Rational value;
    std::vector<int> witness_arcs;           // tau: optimal hitting set
    std::vector<std::size_t> witness_copies; // nu: optimal packing
    std::uint64_t node_count = 0;
};

// Minimum-weight arc set meeting every H-copy, branch-and-bound with the
// fractional LP optimum as lower bound and fail-first branching on an
// uncovered copy's arcs.
OracleResult exact_tau(const Digraph& d, const Pattern& h,
                       const ResourceCaps& caps = ResourceCaps(),
                       Arith lp_mode = Arith::exact);

// Maximum pairwise arc-disjoint H-copies (unweighted hosts only),
// branch-and-bound pruned at floor(nu*) of the residual.
OracleResult exact_nu(const Digraph& d, const Pattern& h,
                      const ResourceCaps& caps = ResourceCaps(),
                      Arith lp_mode = Arith::exact);

// Copies accepted in canonical order when arc-disjoint from those already
// accepted. No guarantee beyond size <= exact_nu.
std::vector<std::size_t> greedy_packing(const Digraph& d, const Pattern& h,
                                        const ResourceCaps& caps = ResourceCaps());

} // namespace hcover
