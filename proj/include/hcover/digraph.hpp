#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "hcover/rational.hpp"

namespace hcover {

struct Arc {
    int tail = 0;
    int head = 0;
    Rational weight = Rational(1);
};

// Weighted directed multigraph host. Arc identity is positional: the arc with
// id i is arcs()[i], so parallel arcs stay distinguishable and every
// downstream arc set is a set of arc ids. Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    Digraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const;
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool unit_weights() const;
    Rational total_weight() const;

    bool operator==(const Digraph& o) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

// Small simple directed pattern graph: 2-cycles allowed, no loops, no
// parallel arcs. Used both as H and as L.
class Pattern {
public:
    Pattern() = default;
    Pattern(int vertex_count, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    bool has_arc(int a, int b) const;
    // Out-neighbour bitmask of vertex a.
    std::uint64_t out_mask(int a) const { return adj_[a]; }

    bool operator==(const Pattern& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_; // sorted, unique
    std::vector<std::uint64_t> adj_;
};

struct Edge {
    int u = 0;
    int v = 0;
    Rational weight = Rational(1);
};

// Undirected host for the K_k-cover route. Loops rejected; parallel edges
// permitted unless constructed with simple = true.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(int vertex_count, std::vector<Edge> edges, bool simple = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool simple() const { return simple_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_; // endpoints normalized u < v
    bool simple_ = false;
};

Digraph build_digraph(int vertex_count,
                      const std::vector<std::tuple<int, int, Rational>>& arcs);

Pattern directed_cycle(int k);
Pattern transitive_tournament(int r);

// Regular tournament on odd n: arcs i -> i+d (mod n) for d = 1..(n-1)/2.
Digraph rotational_tournament(int n);

Digraph random_digraph(int n, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);

UndirectedGraph complete_graph(int n);
UndirectedGraph perfect_matching(int n);

// Every edge oriented from lower to higher vertex index; edge ids become arc
// ids, so covers of the orientation map back to edge sets of G.
Digraph acyclic_orientation(const UndirectedGraph& g);

// Unit-weight host with the same arcs as the pattern.
Digraph to_digraph(const Pattern& p);

bool is_acyclic(const Digraph& d); // Kahn traversal

// Text formats: first line `n`, then one `tail head [weight]` per line;
// `#` starts a comment. Pattern files must not carry weights.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);
Pattern parse_pattern(const std::string& text);
std::string serialize_pattern(const Pattern& p);
UndirectedGraph parse_undirected(const std::string& text);
std::string serialize_undirected(const UndirectedGraph& g);

} // namespace hcover
