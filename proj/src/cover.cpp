#include "hcover/cover.hpp"

#include <algorithm>

#include "hcover/errors.hpp"
#include "hcover/fparam.hpp"

namespace hcover {

Rational alpha_threshold(const Pattern& h, const Pattern& l, const ResourceCaps& caps) {
    if (l.arc_count() < 1) throw ValidationError("alpha requires a nonempty L");
    int d = disc(h, l, caps);
    if (d >= h.arc_count()) throw NumericError("disc_H(L) = |E(H)| with nonempty L");
    return make_rational(1, h.arc_count() - d);
}

PeelResult peel_heavy_arcs(const Digraph& d, const Pattern& h,
                           const std::vector<Copy>& copies, const Rational& threshold,
                           Arith mode, const ResourceCaps& caps, bool batch) {
    if (!(threshold > 0)) throw ValidationError("peel threshold must be positive");
    const Tolerances tol = tolerances(mode);
    const Rational margin = threshold - tol.feas;

    PeelResult result;
    result.arc_active.assign(static_cast<std::size_t>(d.arc_count()), 1);
    result.copy_active.assign(copies.size(), 1);
    result.original_solution =
        solve_fractional_masked(d, copies, result.arc_active, result.copy_active, mode, caps);

    FracSolution sol = result.original_solution;
    while (true) {
        std::vector<int> picks;
        int best = -1;
        for (int id = 0; id < d.arc_count(); ++id) {
            if (!result.arc_active[static_cast<std::size_t>(id)]) continue;
            const Rational& c = sol.cover[static_cast<std::size_t>(id)];
            if (!(c >= margin)) continue;
            picks.push_back(id);
            if (best < 0 || c > sol.cover[static_cast<std::size_t>(best)]) best = id;
        }
        if (best < 0) break;
        if (!batch) picks = {best};
        for (int pick : picks) {
            result.peeled.push_back(pick);
            result.trace.emplace_back(pick, sol.cover[static_cast<std::size_t>(pick)]);
            result.arc_active[static_cast<std::size_t>(pick)] = 0;
            for (std::size_t c = 0; c < copies.size(); ++c) {
                if (!result.copy_active[c]) continue;
                if (std::binary_search(copies[c].arc_ids.begin(), copies[c].arc_ids.end(),
                                       pick)) {
                    result.copy_active[c] = 0;
                }
            }
        }
        sol = solve_fractional_masked(d, copies, result.arc_active, result.copy_active, mode,
                                      caps);
    }
    result.residual_solution = std::move(sol);
    return result;
}

std::vector<int> partition_cover(const Digraph& d, const std::vector<char>& arc_active,
                                 const std::vector<Rational>& cover, const Pattern& l,
                                 const std::vector<int>& assignment, Arith mode) {
    if (assignment.size() != static_cast<std::size_t>(d.vertex_count())) {
        throw ValidationError("assignment must cover every vertex");
    }
    const Tolerances tol = tolerances(mode);
    std::vector<int> out;
    for (int id = 0; id < d.arc_count(); ++id) {
        if (!arc_active.empty() && !arc_active[static_cast<std::size_t>(id)]) continue;
        if (!(cover[static_cast<std::size_t>(id)] > tol.slack_eps)) continue;
        const Arc& a = d.arc(id);
        int i = assignment[static_cast<std::size_t>(a.tail)];
        int j = assignment[static_cast<std::size_t>(a.head)];
        if (i < 0 || i >= l.vertex_count() || j < 0 || j >= l.vertex_count()) {
            throw ValidationError("assignment part out of range");
        }
        if (!l.has_arc(i, j)) out.push_back(id); // covers i == j too: no loops in L
    }
    return out;
}

namespace {

struct PartCounts {
    // missing_out[i] = #{j in [r] : (i,j) not an arc of L}, loops included
    std::vector<int> missing_out;
    std::vector<int> missing_in;
    int r;
    long missing_pairs; // r^2 - |E(L)|

    explicit PartCounts(const Pattern& l) : r(l.vertex_count()) {
        missing_out.assign(static_cast<std::size_t>(r), 0);
        missing_in.assign(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                if (!l.has_arc(i, j)) {
                    ++missing_out[static_cast<std::size_t>(i)];
                    ++missing_in[static_cast<std::size_t>(j)];
                }
            }
        }
        missing_pairs = static_cast<long>(r) * r - l.arc_count();
    }
};

Rational expected_weight(const Digraph& d, const std::vector<char>& arc_active,
                         const std::vector<Rational>& cover, const Pattern& l,
                         const PartCounts& pc, const std::vector<int>& part,
                         const Rational& slack_eps) {
    Rational total(0);
    const long r = pc.r;
    for (int id = 0; id < d.arc_count(); ++id) {
        if (!arc_active.empty() && !arc_active[static_cast<std::size_t>(id)]) continue;
        if (!(cover[static_cast<std::size_t>(id)] > slack_eps)) continue;
        const Arc& a = d.arc(id);
        int pi = part[static_cast<std::size_t>(a.tail)];
        int pj = part[static_cast<std::size_t>(a.head)];
        if (pi >= 0 && pj >= 0) {
            if (!l.has_arc(pi, pj)) total += a.weight;
        } else if (pi >= 0) {
            total += a.weight * make_rational(pc.missing_out[static_cast<std::size_t>(pi)], r);
        } else if (pj >= 0) {
            total += a.weight * make_rational(pc.missing_in[static_cast<std::size_t>(pj)], r);
        } else {
            total += a.weight * make_rational(pc.missing_pairs, r * r);
        }
    }
    return total;
}

} // namespace

Rational conditional_expected_weight(const Digraph& d, const std::vector<char>& arc_active,
                                     const std::vector<Rational>& cover, const Pattern& l,
                                     const std::vector<int>& partial, Arith mode) {
    if (partial.size() != static_cast<std::size_t>(d.vertex_count())) {
        throw ValidationError("partial assignment must have one slot per vertex");
    }
    const Tolerances tol = tolerances(mode);
    return expected_weight(d, arc_active, cover, l, PartCounts(l), partial, tol.slack_eps);
}

DerandResult derandomized_partition(const Digraph& d, const std::vector<char>& arc_active,
                                    const std::vector<Rational>& cover, const Pattern& l,
                                    Arith mode) {
    const Tolerances tol = tolerances(mode);
    const PartCounts pc(l);
    const int n = d.vertex_count();
    const int r = l.vertex_count();

    std::vector<Rational> degree(static_cast<std::size_t>(n), Rational(0));
    for (int id = 0; id < d.arc_count(); ++id) {
        if (!arc_active.empty() && !arc_active[static_cast<std::size_t>(id)]) continue;
        if (!(cover[static_cast<std::size_t>(id)] > tol.slack_eps)) continue;
        const Arc& a = d.arc(id);
        degree[static_cast<std::size_t>(a.tail)] += a.weight;
        degree[static_cast<std::size_t>(a.head)] += a.weight;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        return degree[static_cast<std::size_t>(u)] > degree[static_cast<std::size_t>(v)];
    });

    DerandResult result;
    result.assignment.assign(static_cast<std::size_t>(n), -1);
    result.expectation_trace.push_back(
        expected_weight(d, arc_active, cover, l, pc, result.assignment, tol.slack_eps));
    for (int v : order) {
        int best_part = 0;
        Rational best_val;
        bool have = false;
        for (int i = 0; i < r; ++i) {
            result.assignment[static_cast<std::size_t>(v)] = i;
            Rational val =
                expected_weight(d, arc_active, cover, l, pc, result.assignment, tol.slack_eps);
            if (!have || val < best_val) {
                have = true;
                best_val = val;
                best_part = i;
            }
        }
        result.assignment[static_cast<std::size_t>(v)] = best_part;
        result.expectation_trace.push_back(best_val);
    }
    return result;
}

CoverResult approximate_cover(const Digraph& d, const Pattern& h, const Pattern& l,
                              Arith mode, const ResourceCaps& caps) {
    if (l.arc_count() < 1) throw ValidationError("approximate_cover requires a nonempty L");
    if (h.arc_count() < 2) throw ValidationError("approximate_cover requires |E(H)| >= 2");

    const Tolerances tol = tolerances(mode);
    std::vector<Copy> copies = enumerate_copies(d, h, caps);
    Rational ratio = f_of(h, l, caps);
    Rational threshold = Rational(1) / ratio;

    PeelResult peel = peel_heavy_arcs(d, h, copies, threshold, mode, caps);
    DerandResult derand = derandomized_partition(d, peel.arc_active,
                                                 peel.residual_solution.cover, l, mode);
    std::vector<int> f2 = partition_cover(d, peel.arc_active, peel.residual_solution.cover, l,
                                          derand.assignment, mode);

    CoverResult result;
    result.cover_arcs = peel.peeled;
    result.cover_arcs.insert(result.cover_arcs.end(), f2.begin(), f2.end());
    std::sort(result.cover_arcs.begin(), result.cover_arcs.end());
    result.cover_arcs.erase(std::unique(result.cover_arcs.begin(), result.cover_arcs.end()),
                            result.cover_arcs.end());
    result.cover_weight = Rational(0);
    for (int id : result.cover_arcs) result.cover_weight += d.arc(id).weight;
    result.nu_star_original = peel.original_solution.optimum;
    result.ratio_bound = ratio;
    result.peel_trace = peel.trace;
    result.assignment = derand.assignment;
    result.h_free_certified = is_h_free(d, h, result.cover_arcs, caps);

    if (!result.h_free_certified) {
        throw NumericError("partition cover failed to hit every copy");
    }
    if (result.cover_weight > ratio * result.nu_star_original + tol.feas) {
        throw NumericError("cover weight exceeds the certified f(H,L) bound");
    }
    return result;
}

CoverResult undirected_kk_cover(const UndirectedGraph& g, int k, Arith mode,
                                const ResourceCaps& caps) {
    if (k < 3) throw ValidationError("undirected_kk_cover requires k >= 3");
    Digraph d = acyclic_orientation(g);
    Pattern h = transitive_tournament(k);
    Pattern l = directed_cycle(2);
    CoverResult result = approximate_cover(d, h, l, mode, caps);
    // f(T_k, C_2) = b(T_k) = floor(k^2/4)
    if (result.ratio_bound != Rational(static_cast<long>(k) * k / 4)) {
        throw NumericError("unexpected ratio bound on the K_k path");
    }
    return result;
}

} // namespace hcover
