#include "hcover/embed.hpp"

#include <algorithm>
#include <map>

#include "hcover/errors.hpp"

namespace hcover {

namespace {

// Order H's vertices so that each one (after the first) touches as many
// already-ordered vertices as possible; starved orders make the host
// candidate loops degenerate into a cartesian product.
std::vector<int> embedding_order(const Pattern& h) {
    const int k = h.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(k), 0);
    for (auto [a, b] : h.arcs()) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_degree = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int u : order) {
                if (h.has_arc(u, v)) ++links;
                if (h.has_arc(v, u)) ++links;
            }
            int deg = degree[static_cast<std::size_t>(v)];
            if (links > best_links || (links == best_links && deg > best_degree)) {
                best = v;
                best_links = links;
                best_degree = deg;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = 1;
    }
    return order;
}

struct HostIndex {
    int n = 0;
    // arc ids from tail to head, ascending, active arcs only
    std::vector<std::vector<std::vector<int>>> by_pair;

    HostIndex(const Digraph& d, const std::vector<char>& active) : n(d.vertex_count()) {
        by_pair.assign(static_cast<std::size_t>(n),
                       std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
        for (int id = 0; id < d.arc_count(); ++id) {
            if (!active.empty() && !active[static_cast<std::size_t>(id)]) continue;
            const Arc& a = d.arc(id);
            by_pair[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)]
                .push_back(id);
        }
    }

    const std::vector<int>& ids(int tail, int head) const {
        return by_pair[static_cast<std::size_t>(tail)][static_cast<std::size_t>(head)];
    }
};

struct Enumerator {
    const Digraph& d;
    const Pattern& h;
    const HostIndex index;
    const std::vector<int> order;      // H vertices in embedding order
    std::vector<int> position;         // H vertex -> position in order
    // constraints checked when placing position t: arcs between order[t] and
    // earlier vertices, as (earlier position, forward?) pairs
    std::vector<std::vector<std::pair<int, bool>>> constraints;
    const ResourceCaps& caps;
    bool existence_only = false;
    bool found = false;

    std::vector<int> image;            // position -> host vertex
    std::vector<char> used;            // host vertex taken
    // copies keyed by (sorted vertex set, sorted arc ids) -> witness
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> dedup;

    Enumerator(const Digraph& d_, const Pattern& h_, const std::vector<char>& active,
               const ResourceCaps& caps_)
        : d(d_), h(h_), index(d_, active), order(embedding_order(h_)), caps(caps_) {
        const int k = h.vertex_count();
        position.assign(static_cast<std::size_t>(k), -1);
        for (int t = 0; t < k; ++t) position[static_cast<std::size_t>(order[t])] = t;
        constraints.assign(static_cast<std::size_t>(k), {});
        for (auto [a, b] : h.arcs()) {
            int pa = position[static_cast<std::size_t>(a)];
            int pb = position[static_cast<std::size_t>(b)];
            if (pa < pb) {
                constraints[static_cast<std::size_t>(pb)].emplace_back(pa, true);
            } else {
                constraints[static_cast<std::size_t>(pa)].emplace_back(pb, false);
            }
        }
        image.assign(static_cast<std::size_t>(k), -1);
        used.assign(static_cast<std::size_t>(d.vertex_count()), 0);
    }

    void run() {
        if (h.arc_count() < 1) throw ValidationError("pattern H needs at least one arc");
        if (h.vertex_count() > caps.pattern_vertices) {
            throw ResourceLimitError("pattern exceeds the embedding vertex cap");
        }
        if (h.vertex_count() > d.vertex_count()) return;
        place(0);
    }

    void place(int t) {
        if (found) return;
        const int k = h.vertex_count();
        if (t == k) {
            emit();
            return;
        }
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (auto [prev, forward] : constraints[static_cast<std::size_t>(t)]) {
                int u = image[static_cast<std::size_t>(prev)];
                const auto& ids = forward ? index.ids(u, v) : index.ids(v, u);
                if (ids.empty()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(t)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            place(t + 1);
            used[static_cast<std::size_t>(v)] = 0;
            image[static_cast<std::size_t>(t)] = -1;
            if (found) return;
        }
    }

    // A complete vertex map; expand parallel-arc choices into copies.
    void emit() {
        if (existence_only) {
            found = true;
            return;
        }
        const auto& harcs = h.arcs();
        const std::size_t m = harcs.size();
        std::vector<const std::vector<int>*> options(m);
        std::vector<int> witness(static_cast<std::size_t>(h.vertex_count()));
        for (int hv = 0; hv < h.vertex_count(); ++hv) {
            witness[static_cast<std::size_t>(hv)] =
                image[static_cast<std::size_t>(position[static_cast<std::size_t>(hv)])];
        }
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = harcs[i];
            options[i] = &index.ids(witness[static_cast<std::size_t>(a)],
                                    witness[static_cast<std::size_t>(b)]);
        }
        std::vector<std::size_t> pick(m, 0);
        std::vector<int> vertices = witness;
        std::sort(vertices.begin(), vertices.end());
        while (true) {
            std::vector<int> arc_ids(m);
            for (std::size_t i = 0; i < m; ++i) arc_ids[i] = (*options[i])[pick[i]];
            std::sort(arc_ids.begin(), arc_ids.end());
            dedup.emplace(std::make_pair(vertices, std::move(arc_ids)), witness);
            if (dedup.size() > caps.copies) {
                throw ResourceLimitError("copy count exceeds the enumeration cap");
            }
            std::size_t i = 0;
            while (i < m && ++pick[i] == options[i]->size()) {
                pick[i] = 0;
                ++i;
            }
            if (i == m) break;
        }
    }

    std::vector<Copy> collect() const {
        std::vector<Copy> out;
        out.reserve(dedup.size());
        // map order = lexicographic by (vertex set, arc ids); reorder by arc ids
        std::vector<const std::pair<const std::pair<std::vector<int>, std::vector<int>>,
                                    std::vector<int>>*> rows;
        rows.reserve(dedup.size());
        for (const auto& kv : dedup) rows.push_back(&kv);
        std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
            if (a->first.second != b->first.second) return a->first.second < b->first.second;
            return a->first.first < b->first.first;
        });
        for (const auto* row : rows) out.push_back(Copy{row->first.second, row->second});
        return out;
    }
};

} // namespace

std::vector<Copy> enumerate_copies(const Digraph& d, const Pattern& h,
                                   const ResourceCaps& caps) {
    return enumerate_copies_masked(d, h, {}, caps);
}

std::vector<Copy> enumerate_copies_masked(const Digraph& d, const Pattern& h,
                                          const std::vector<char>& arc_active,
                                          const ResourceCaps& caps) {
    Enumerator e(d, h, arc_active, caps);
    e.run();
    return e.collect();
}

bool has_copy_masked(const Digraph& d, const Pattern& h,
                     const std::vector<char>& arc_active, const ResourceCaps& caps) {
    Enumerator e(d, h, arc_active, caps);
    e.existence_only = true;
    e.run();
    return e.found;
}

bool is_h_free(const Digraph& d, const Pattern& h, const std::vector<int>& removed_arcs,
               const ResourceCaps& caps) {
    std::vector<char> active(static_cast<std::size_t>(d.arc_count()), 1);
    for (int id : removed_arcs) {
        if (id < 0 || id >= d.arc_count()) throw ValidationError("unknown arc id");
        active[static_cast<std::size_t>(id)] = 0;
    }
    return !has_copy_masked(d, h, active, caps);
}

std::vector<std::size_t> copies_through_arc(const std::vector<Copy>& copies, int arc_id) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (std::binary_search(copies[i].arc_ids.begin(), copies[i].arc_ids.end(), arc_id)) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace hcover
