#pragma once

#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"

namespace hcover {

// One H-copy in D: the arc ids it occupies plus one witness vertex map.
// Copies are equal iff their (vertex set, arc id set) pairs are equal, so
// automorphic re-embeddings of the same subgraph collapse.
struct Copy {
    std::vector<int> arc_ids; // sorted ascending
    std::vector<int> witness; // V(H) -> V(D)

    bool operator==(const Copy& o) const { return arc_ids == o.arc_ids && witness == o.witness; }
};

// Exhaustive, duplicate-free enumeration of C(H, D), ordered lexicographically
// by sorted arc id set. Backtracking over a connectivity-greedy order of H's
// vertices; with parallel arcs every distinct arc selection is its own copy.
std::vector<Copy> enumerate_copies(const Digraph& d, const Pattern& h,
                                   const ResourceCaps& caps = ResourceCaps());

// Same, restricted to arcs with arc_active[id] != 0 (the residual D \ F).
std::vector<Copy> enumerate_copies_masked(const Digraph& d, const Pattern& h,
                                          const std::vector<char>& arc_active,
                                          const ResourceCaps& caps = ResourceCaps());

// Early-exit existence test on the masked residual.
bool has_copy_masked(const Digraph& d, const Pattern& h,
                     const std::vector<char>& arc_active,
                     const ResourceCaps& caps = ResourceCaps());

// True iff D \ F is H-free.
bool is_h_free(const Digraph& d, const Pattern& h, const std::vector<int>& removed_arcs,
               const ResourceCaps& caps = ResourceCaps());

// Indices of the copies whose arc set contains arc_id.
std::vector<std::size_t> copies_through_arc(const std::vector<Copy>& copies, int arc_id);

} // namespace hcover
