#include "hcover/oracles.hpp"

#include <algorithm>

#include "hcover/errors.hpp"
#include "hcover/lp.hpp"

namespace hcover {

namespace {

std::vector<std::size_t> greedy_from_copies(const std::vector<Copy>& copies, int arc_count) {
    std::vector<char> used(static_cast<std::size_t>(arc_count), 0);
    std::vector<std::size_t> picked;
    for (std::size_t c = 0; c < copies.size(); ++c) {
        bool free = true;
        for (int id : copies[c].arc_ids) {
            if (used[static_cast<std::size_t>(id)]) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        for (int id : copies[c].arc_ids) used[static_cast<std::size_t>(id)] = 1;
        picked.push_back(c);
    }
    return picked;
}

struct TauSearch {
    const Digraph& d;
    const std::vector<Copy>& copies;
    Arith lp_mode;
    const ResourceCaps& caps;
    std::vector<char> chosen;    // arcs moved into the cover
    std::vector<char> forbidden; // arcs excluded on this branch
    Rational chosen_weight = Rational(0);
    Rational best_weight;
    std::vector<int> best_arcs;
    std::uint64_t nodes = 0;

    TauSearch(const Digraph& d_, const std::vector<Copy>& c_, Arith m_, const ResourceCaps& k_)
        : d(d_), copies(c_), lp_mode(m_), caps(k_) {
        chosen.assign(static_cast<std::size_t>(d.arc_count()), 0);
        forbidden.assign(static_cast<std::size_t>(d.arc_count()), 0);
    }

    // Greedy incumbent: repeatedly take the arc hitting the most live copies.
    void seed_incumbent() {
        std::vector<char> alive(copies.size(), 1);
        std::vector<int> picked;
        Rational weight(0);
        std::size_t remaining = copies.size();
        while (remaining > 0) {
            std::vector<int> hits(static_cast<std::size_t>(d.arc_count()), 0);
            for (std::size_t c = 0; c < copies.size(); ++c) {
                if (!alive[c]) continue;
                for (int id : copies[c].arc_ids) ++hits[static_cast<std::size_t>(id)];
            }
            int best = -1;
            for (int id = 0; id < d.arc_count(); ++id) {
                if (hits[static_cast<std::size_t>(id)] == 0) continue;
                if (best < 0 || hits[static_cast<std::size_t>(id)] > hits[static_cast<std::size_t>(best)]) {
                    best = id;
                }
            }
            picked.push_back(best);
            weight += d.arc(best).weight;
            for (std::size_t c = 0; c < copies.size(); ++c) {
                if (!alive[c]) continue;
                if (std::binary_search(copies[c].arc_ids.begin(), copies[c].arc_ids.end(),
                                       best)) {
                    alive[c] = 0;
                    --remaining;
                }
            }
        }
        std::sort(picked.begin(), picked.end());
        best_arcs = picked;
        best_weight = weight;
    }

    void run() {
        seed_incumbent();
        dfs();
    }

    void dfs() {
        if (++nodes > caps.oracle_nodes) {
            throw ResourceLimitError("exact_tau node cap exceeded");
        }
        // live copies: not hit by a chosen arc
        std::vector<char> copy_live(copies.size(), 0);
        bool any = false;
        std::size_t branch_copy = copies.size();
        std::size_t branch_options = 0;
        for (std::size_t c = 0; c < copies.size(); ++c) {
            bool hit = false;
            for (int id : copies[c].arc_ids) {
                if (chosen[static_cast<std::size_t>(id)]) {
                    hit = true;
                    break;
                }
            }
            if (hit) continue;
            copy_live[c] = 1;
            any = true;
            std::size_t options = 0;
            for (int id : copies[c].arc_ids) {
                if (!forbidden[static_cast<std::size_t>(id)]) ++options;
            }
            if (branch_copy == copies.size() || options < branch_options) {
                branch_copy = c;
                branch_options = options;
            }
        }
        if (!any) {
            if (chosen_weight < best_weight) {
                best_weight = chosen_weight;
                best_arcs.clear();
                for (int id = 0; id < d.arc_count(); ++id) {
                    if (chosen[static_cast<std::size_t>(id)]) best_arcs.push_back(id);
                }
            }
            return;
        }
        if (branch_options == 0) return; // every arc of some live copy is forbidden

        std::vector<char> arc_active(static_cast<std::size_t>(d.arc_count()), 1);
        for (int id = 0; id < d.arc_count(); ++id) {
            if (chosen[static_cast<std::size_t>(id)]) arc_active[static_cast<std::size_t>(id)] = 0;
        }
        FracSolution lp =
            solve_fractional_masked(d, copies, arc_active, copy_live, lp_mode, caps);
        Rational bound = chosen_weight + lp.optimum;
        if (lp_mode == Arith::floating) bound -= tolerances(lp_mode).feas;
        if (bound >= best_weight) return;

        std::vector<int> local;
        for (int id : copies[branch_copy].arc_ids) {
            if (forbidden[static_cast<std::size_t>(id)]) continue;
            chosen[static_cast<std::size_t>(id)] = 1;
            chosen_weight += d.arc(id).weight;
            dfs();
            chosen_weight -= d.arc(id).weight;
            chosen[static_cast<std::size_t>(id)] = 0;
            forbidden[static_cast<std::size_t>(id)] = 1;
            local.push_back(id);
        }
        for (int id : local) forbidden[static_cast<std::size_t>(id)] = 0;
    }
};

struct NuSearch {
    const Digraph& d;
    const std::vector<Copy>& copies;
    Arith lp_mode;
    const ResourceCaps& caps;
    std::vector<char> arc_used;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;

    NuSearch(const Digraph& d_, const std::vector<Copy>& c_, Arith m_, const ResourceCaps& k_)
        : d(d_), copies(c_), lp_mode(m_), caps(k_) {
        arc_used.assign(static_cast<std::size_t>(d.arc_count()), 0);
    }

    void run() {
        best = greedy_from_copies(copies, d.arc_count());
        dfs(0);
    }

    bool compatible(std::size_t c) const {
        for (int id : copies[c].arc_ids) {
            if (arc_used[static_cast<std::size_t>(id)]) return false;
        }
        return true;
    }

    void dfs(std::size_t idx) {
        if (++nodes > caps.oracle_nodes) {
            throw ResourceLimitError("exact_nu node cap exceeded");
        }
        std::vector<char> live(copies.size(), 0);
        std::size_t live_count = 0;
        for (std::size_t c = idx; c < copies.size(); ++c) {
            if (compatible(c)) {
                live[c] = 1;
                ++live_count;
            }
        }
        if (current.size() + live_count <= best.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (live_count == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // floor(nu*) of the residual bounds any extension
        FracSolution lp = solve_fractional_masked(d, copies, {}, live, lp_mode, caps);
        Rational frac = lp.optimum;
        if (lp_mode == Arith::floating) frac += tolerances(lp_mode).feas;
        mpz_class fl = frac.get_num() / frac.get_den();
        if (Rational(fl) > frac) fl -= 1; // mpz division truncates toward zero; frac >= 0 here
        if (current.size() + fl.get_ui() <= best.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }

        std::size_t next = idx;
        while (next < copies.size() && !live[next]) ++next;
        if (next == copies.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // include
        for (int id : copies[next].arc_ids) arc_used[static_cast<std::size_t>(id)] = 1;
        current.push_back(next);
        dfs(next + 1);
        current.pop_back();
        for (int id : copies[next].arc_ids) arc_used[static_cast<std::size_t>(id)] = 0;
        // exclude
        dfs(next + 1);
    }
};

} // namespace

OracleResult exact_tau(const Digraph& d, const Pattern& h, const ResourceCaps& caps,
                       Arith lp_mode) {
    std::vector<Copy> copies = enumerate_copies(d, h, caps);
    if (copies.size() > caps.oracle_copies) {
        throw ResourceLimitError("exact_tau copy cap exceeded");
    }
    OracleResult result;
    if (copies.empty()) {
        result.value = Rational(0);
        return result;
    }
    TauSearch search(d, copies, lp_mode, caps);
    search.run();
    result.value = search.best_weight;
    result.witness_arcs = search.best_arcs;
    result.node_count = search.nodes;
    return result;
}

OracleResult exact_nu(const Digraph& d, const Pattern& h, const ResourceCaps& caps,
                      Arith lp_mode) {
    if (!d.unit_weights()) throw ValidationError("exact_nu requires an unweighted host");
    std::vector<Copy> copies = enumerate_copies(d, h, caps);
    if (copies.size() > caps.oracle_copies) {
        throw ResourceLimitError("exact_nu copy cap exceeded");
    }
    OracleResult result;
    if (copies.empty()) {
        result.value = Rational(0);
        return result;
    }
    NuSearch search(d, copies, lp_mode, caps);
    search.run();
    result.value = Rational(static_cast<long>(search.best.size()));
    result.witness_copies = search.best;
    result.node_count = search.nodes;
    return result;
}

std::vector<std::size_t> greedy_packing(const Digraph& d, const Pattern& h,
                                        const ResourceCaps& caps) {
    if (!d.unit_weights()) throw ValidationError("greedy_packing requires an unweighted host");
    std::vector<Copy> copies = enumerate_copies(d, h, caps);
    return greedy_from_copies(copies, d.arc_count());
}

} // namespace hcover
