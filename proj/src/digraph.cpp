#include "hcover/digraph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "hcover/errors.hpp"

namespace hcover {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    if (n_ < 0) throw ValidationError("negative vertex count");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_) {
            throw ValidationError("arc endpoint out of range");
        }
        if (a.tail == a.head) throw ValidationError("loop arcs are not allowed");
        if (a.weight < 0) throw ValidationError("negative arc weight");
    }
}

const Arc& Digraph::arc(int id) const {
    if (id < 0 || id >= arc_count()) throw ValidationError("unknown arc id");
    return arcs_[static_cast<std::size_t>(id)];
}

bool Digraph::unit_weights() const {
    for (const Arc& a : arcs_) {
        if (a.weight != 1) return false;
    }
    return true;
}

Rational Digraph::total_weight() const {
    Rational s(0);
    for (const Arc& a : arcs_) s += a.weight;
    return s;
}

bool Digraph::operator==(const Digraph& o) const {
    if (n_ != o.n_ || arcs_.size() != o.arcs_.size()) return false;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (arcs_[i].tail != o.arcs_[i].tail || arcs_[i].head != o.arcs_[i].head ||
            arcs_[i].weight != o.arcs_[i].weight) {
            return false;
        }
    }
    return true;
}

Pattern::Pattern(int vertex_count, std::vector<std::pair<int, int>> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    if (n_ <= 0) throw ValidationError("pattern needs a positive vertex count");
    if (n_ > 64) throw ValidationError("pattern too large (max 64 vertices)");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [a, b] = arcs_[i];
        if (a < 0 || a >= n_ || b < 0 || b >= n_) {
            throw ValidationError("pattern arc endpoint out of range");
        }
        if (a == b) throw ValidationError("pattern loops are not allowed");
        if (i > 0 && arcs_[i] == arcs_[i - 1]) {
            throw ValidationError("duplicate pattern arc");
        }
    }
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [a, b] : arcs_) adj_[static_cast<std::size_t>(a)] |= (1ULL << b);
}

bool Pattern::has_arc(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
    return (adj_[static_cast<std::size_t>(a)] >> b) & 1ULL;
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges, bool simple)
    : n_(vertex_count), edges_(std::move(edges)), simple_(simple) {
    if (n_ < 0) throw ValidationError("negative vertex count");
    for (Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw ValidationError("edge endpoint out of range");
        }
        if (e.u == e.v) throw ValidationError("loop edges are not allowed");
        if (e.weight < 0) throw ValidationError("negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    if (simple_) {
        auto sorted = edges_;
        std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.u, a.v) < std::tie(b.u, b.v);
        });
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
                throw ValidationError("parallel edge in simple graph");
            }
        }
    }
}

Digraph build_digraph(int vertex_count,
                      const std::vector<std::tuple<int, int, Rational>>& arcs) {
    std::vector<Arc> list;
    list.reserve(arcs.size());
    for (const auto& [t, h, w] : arcs) list.push_back({t, h, w});
    return Digraph(vertex_count, std::move(list));
}

Pattern directed_cycle(int k) {
    if (k < 2) throw ValidationError("directed cycle needs k >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
    return Pattern(k, std::move(arcs));
}

Pattern transitive_tournament(int r) {
    if (r < 1) throw ValidationError("transitive tournament needs r >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) arcs.emplace_back(i, j);
    }
    return Pattern(r, std::move(arcs));
}

Digraph rotational_tournament(int n) {
    if (n < 1 || n % 2 == 0) throw ValidationError("rotational tournament needs odd n");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= (n - 1) / 2; ++d) {
            arcs.push_back({i, (i + d) % n, Rational(1)});
        }
    }
    return Digraph(n, std::move(arcs));
}

namespace {

// Deterministic Bernoulli draw; avoids the implementation-defined
// std::bernoulli_distribution so seeds reproduce across platforms.
bool coin(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11); // 53 random bits
    return u < p * 9007199254740992.0;                 // p * 2^53
}

} // namespace

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("probability out of [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (coin(rng, p)) arcs.push_back({i, j, Rational(1)});
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw ValidationError("negative vertex count");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1ULL) {
                arcs.push_back({i, j, Rational(1)});
            } else {
                arcs.push_back({j, i, Rational(1)});
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

UndirectedGraph complete_graph(int n) {
    if (n < 0) throw ValidationError("negative vertex count");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, Rational(1)});
    }
    return UndirectedGraph(n, std::move(edges), true);
}

UndirectedGraph perfect_matching(int n) {
    if (n < 0 || n % 2 != 0) throw ValidationError("perfect matching needs even n");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1, Rational(1)});
    return UndirectedGraph(n, std::move(edges), true);
}

Digraph acyclic_orientation(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) arcs.push_back({e.u, e.v, e.weight});
    return Digraph(g.vertex_count(), std::move(arcs));
}

Digraph to_digraph(const Pattern& p) {
    std::vector<Arc> arcs;
    for (auto [a, b] : p.arcs()) arcs.push_back({a, b, Rational(1)});
    return Digraph(p.vertex_count(), std::move(arcs));
}

bool is_acyclic(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const Arc& a : d.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (const Arc& a : d.arcs()) {
            if (a.tail != v) continue;
            if (--indeg[static_cast<std::size_t>(a.head)] == 0) queue.push_back(a.head);
        }
    }
    return seen == n;
}

namespace {

struct ParsedGraphText {
    long long n = -1;
    // (tail, head, weight, had_weight)
    std::vector<std::tuple<int, int, Rational, bool>> rows;
};

ParsedGraphText parse_graph_text(const std::string& text) {
    ParsedGraphText out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string t0;
        if (!(ls >> t0)) continue; // blank line
        if (out.n < 0) {
            std::string extra;
            try {
                std::size_t used = 0;
                out.n = std::stoll(t0, &used);
                if (used != t0.size()) throw std::invalid_argument(t0);
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": expected vertex count, got '" + t0 + "'");
            }
            if (ls >> extra) {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": trailing token '" + extra + "'");
            }
            continue;
        }
        std::string t1, t2, extra;
        if (!(ls >> t1)) {
            throw ValidationError("line " + std::to_string(lineno) + ": expected 'tail head [weight]'");
        }
        long long tail = 0, head = 0;
        try {
            std::size_t u0 = 0, u1 = 0;
            tail = std::stoll(t0, &u0);
            head = std::stoll(t1, &u1);
            if (u0 != t0.size() || u1 != t1.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ValidationError("line " + std::to_string(lineno) + ": bad vertex index");
        }
        Rational w(1);
        bool had_weight = false;
        if (ls >> t2) {
            had_weight = true;
            try {
                w = parse_rational(t2);
            } catch (const ValidationError& e) {
                throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
            }
            if (ls >> extra) {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": trailing token '" + extra + "'");
            }
        }
        out.rows.emplace_back(static_cast<int>(tail), static_cast<int>(head), w, had_weight);
    }
    if (out.n < 0) throw ValidationError("missing vertex-count line");
    return out;
}

} // namespace

Digraph parse_digraph(const std::string& text) {
    ParsedGraphText p = parse_graph_text(text);
    std::vector<Arc> arcs;
    arcs.reserve(p.rows.size());
    for (const auto& [t, h, w, hw] : p.rows) arcs.push_back({t, h, w});
    return Digraph(static_cast<int>(p.n), std::move(arcs));
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << "\n";
    for (const Arc& a : d.arcs()) {
        out << a.tail << " " << a.head;
        if (a.weight != 1) out << " " << rational_string(a.weight);
        out << "\n";
    }
    return out.str();
}

Pattern parse_pattern(const std::string& text) {
    ParsedGraphText p = parse_graph_text(text);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(p.rows.size());
    for (const auto& [t, h, w, hw] : p.rows) {
        if (hw) throw ValidationError("pattern files must not carry weights");
        arcs.emplace_back(t, h);
    }
    return Pattern(static_cast<int>(p.n), std::move(arcs));
}

std::string serialize_pattern(const Pattern& p) {
    std::ostringstream out;
    out << p.vertex_count() << "\n";
    for (auto [a, b] : p.arcs()) out << a << " " << b << "\n";
    return out.str();
}

UndirectedGraph parse_undirected(const std::string& text) {
    ParsedGraphText p = parse_graph_text(text);
    std::vector<Edge> edges;
    edges.reserve(p.rows.size());
    for (const auto& [u, v, w, hw] : p.rows) edges.push_back({u, v, w});
    return UndirectedGraph(static_cast<int>(p.n), std::move(edges));
}

std::string serialize_undirected(const UndirectedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v;
        if (e.weight != 1) out << " " << rational_string(e.weight);
        out << "\n";
    }
    return out.str();
}

} // namespace hcover
