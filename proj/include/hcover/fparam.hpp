#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcover/caps.hpp"
#include "hcover/digraph.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// Outcome of the f(H) search. f(H) itself is an infimum over all nonempty L
// and is reported as the interval [f_lower, f_upper] with a witness; it is
// exact only where a certificate applies (cycles, one-way bipartite H).
struct FValueReport {
    int disc = 0;                    // disc(H, best_l)
    Rational f_of_l;                 // f(H, best_l) == f_upper
    std::optional<Pattern> best_l;
    Rational f_upper;
    Rational f_lower;                // |E(H)| / 2
    int gamma = 0;
    int b = 0;
    bool one_way_bipartite = false;
    // gamma(H) == |E(H)|/2 (every vertex pair induces a 2-cycle or nothing):
    // here f(H) = |E(H)|/2 but no finite L attains it, e.g. H = C_2.
    bool infimum_not_attained = false;
};

// Minimum number of H-arcs left unrealized over all maps V(H) -> V(L) into
// the blowup B(L); (i,i) never counts as an L-arc. Exhaustive over
// |V(L)|^{|V(H)|} maps (branch-and-prune), capped by caps.disc_maps.
int disc(const Pattern& h, const Pattern& l, const ResourceCaps& caps = ResourceCaps());

// max{ |E(H)| (1 - |E(L)|/|V(L)|^2), |E(H)| - disc(H, L) }, exact.
Rational f_of(const Pattern& h, const Pattern& l, const ResourceCaps& caps = ResourceCaps());

// Minimum of f(H, L) over: transitive tournaments T_2..T_t (t = r_max,
// auto-extended so the acyclic bound gamma(H) is attained whenever
// gamma > |E|/2), directed cycles C_2..C_min(r_max,12), and all canonical
// patterns on <= min(r_max, 4) vertices. Candidates whose disc computation
// would exceed the map cap are skipped.
FValueReport f_search(const Pattern& h, int r_max = 4,
                      const ResourceCaps& caps = ResourceCaps());

// Maximum arcs in an acyclic subgraph (|E| minus min feedback arc set),
// by dynamic programming over vertex subsets.
int gamma(const Pattern& h, const ResourceCaps& caps = ResourceCaps());

// Maximum arcs crossing a bipartition in either direction, brute force.
int b_param(const Pattern& h, const ResourceCaps& caps = ResourceCaps());

// True iff no vertex has both positive in-degree and positive out-degree,
// i.e. H has no directed path of length 2 and no directed 2-cycle.
bool is_one_way_bipartite(const Pattern& h);

// Minimum adjacency bitstring over all vertex permutations (row-major bits).
std::uint64_t canonical_bits(const Pattern& p);

// All canonical nonempty patterns on exactly r vertices, ascending bitstring
// order (r <= 4).
std::vector<Pattern> enumerate_patterns(int r);

} // namespace hcover
