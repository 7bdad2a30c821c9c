#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hcover/cover.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/errors.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracles.hpp"

using namespace hcover;

namespace {

// independent oracle: minimum hitting-set size by enumerating arc subsets in
// increasing cardinality (unweighted hosts, small limits only)
int tau_brute_force(const Digraph& d, const Pattern& h, int max_size) {
    auto copies = enumerate_copies(d, h);
    if (copies.empty()) return 0;
    std::vector<int> support;
    for (int id = 0; id < d.arc_count(); ++id) {
        if (!copies_through_arc(copies, id).empty()) support.push_back(id);
    }
    const int s = static_cast<int>(support.size());
    for (int size = 1; size <= max_size; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < size; ++i) {
                pick[static_cast<std::size_t>(i)] =
                    support[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            }
            if (is_h_free(d, h, pick)) return size;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return max_size + 1;
}

// independent oracle: maximum arc-disjoint subfamily by subset enumeration
std::size_t nu_brute_force(const Digraph& d, const Pattern& h) {
    auto copies = enumerate_copies(d, h);
    const std::size_t m = copies.size();
    REQUIRE(m <= 20);
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << m); ++mask) {
        std::vector<char> used(static_cast<std::size_t>(d.arc_count()), 0);
        bool ok = true;
        std::size_t count = 0;
        for (std::size_t c = 0; c < m && ok; ++c) {
            if (!((mask >> c) & 1)) continue;
            ++count;
            for (int id : copies[c].arc_ids) {
                if (used[static_cast<std::size_t>(id)]) {
                    ok = false;
                    break;
                }
                used[static_cast<std::size_t>(id)] = 1;
            }
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

Digraph disjoint_triangles(int m) {
    std::vector<Arc> arcs;
    for (int t = 0; t < m; ++t) {
        int base = 3 * t;
        arcs.push_back({base, base + 1, Rational(1)});
        arcs.push_back({base + 1, base + 2, Rational(1)});
        arcs.push_back({base + 2, base, Rational(1)});
    }
    return Digraph(3 * m, arcs);
}

} // namespace

TEST_CASE("R_5 fixtures") {
    Digraph r5 = rotational_tournament(5);
    auto tau3 = exact_tau(r5, directed_cycle(3));
    CHECK(tau3.value == 3);
    CHECK(tau_brute_force(r5, directed_cycle(3), 4) == 3);
    CHECK(is_h_free(r5, directed_cycle(3), tau3.witness_arcs));

    auto nu3 = exact_nu(r5, directed_cycle(3));
    CHECK(nu3.value == 2);
    CHECK(nu_brute_force(r5, directed_cycle(3)) == 2);

    auto tau4 = exact_tau(r5, directed_cycle(4));
    CHECK(tau4.value == 2);
    CHECK(tau_brute_force(r5, directed_cycle(4), 3) == 2);
    CHECK(is_h_free(r5, directed_cycle(4), tau4.witness_arcs));

    auto nu4 = exact_nu(r5, directed_cycle(4));
    CHECK(nu4.value == 1);
    CHECK(nu_brute_force(r5, directed_cycle(4)) == 1);
}

TEST_CASE("witnesses are feasible and achieve the value") {
    Digraph d = random_tournament(7, 17);
    Pattern h = directed_cycle(3);
    auto tau = exact_tau(d, h);
    CHECK(is_h_free(d, h, tau.witness_arcs));
    Rational w(0);
    for (int id : tau.witness_arcs) w += d.arc(id).weight;
    CHECK(w == tau.value);

    auto nu = exact_nu(d, h);
    CHECK(Rational(static_cast<long>(nu.witness_copies.size())) == nu.value);
    auto copies = enumerate_copies(d, h);
    std::vector<char> used(static_cast<std::size_t>(d.arc_count()), 0);
    for (std::size_t c : nu.witness_copies) {
        for (int id : copies[c].arc_ids) {
            CHECK(!used[static_cast<std::size_t>(id)]);
            used[static_cast<std::size_t>(id)] = 1;
        }
    }
}

TEST_CASE("triangle fixture and disjoint unions") {
    Digraph c3 = disjoint_triangles(1);
    CHECK(exact_tau(c3, directed_cycle(3)).value == 1);
    CHECK(exact_nu(c3, directed_cycle(3)).value == 1);

    for (int m : {2, 3}) {
        Digraph d = disjoint_triangles(m);
        CHECK(exact_tau(d, directed_cycle(3)).value == m);
        CHECK(exact_nu(d, directed_cycle(3)).value == m);
        CHECK(greedy_packing(d, directed_cycle(3)).size() == static_cast<std::size_t>(m));
    }
}

TEST_CASE("weighted tau picks the cheap arc") {
    Digraph d = build_digraph(3, {{0, 1, 3}, {1, 2, make_rational(1, 2)}, {2, 0, 5}});
    auto tau = exact_tau(d, directed_cycle(3));
    CHECK(tau.value == make_rational(1, 2));
    CHECK(tau.witness_arcs == std::vector<int>{1});
}

TEST_CASE("greedy packing is bracketed by exact_nu") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Digraph d = random_tournament(7, 600 + seed);
        auto greedy = greedy_packing(d, directed_cycle(3));
        auto nu = exact_nu(d, directed_cycle(3));
        CHECK(Rational(static_cast<long>(greedy.size())) <= nu.value);
        if (nu.value > 0) CHECK(!greedy.empty());
    }
    Digraph path = build_digraph(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(greedy_packing(path, directed_cycle(3)).empty());
}

TEST_CASE("exact_nu rejects weighted hosts") {
    Digraph d = build_digraph(3, {{0, 1, 2}, {1, 2, 1}, {2, 0, 1}});
    CHECK_THROWS_AS(exact_nu(d, directed_cycle(3)), ValidationError);
    CHECK_THROWS_AS(greedy_packing(d, directed_cycle(3)), ValidationError);
}

TEST_CASE("sandwich chain on random unweighted instances") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Digraph d = (seed % 2 == 0) ? random_tournament(6, 700 + seed)
                                    : random_digraph(5, 0.7, 700 + seed);
        for (int k : {3, 4}) {
            Pattern h = directed_cycle(k);
            Rational frac = nu_star(d, h);
            auto nu = exact_nu(d, h);
            auto tau = exact_tau(d, h);
            CHECK(nu.value <= frac);
            CHECK(frac <= tau.value);
            CHECK(tau.value <= Rational(h.arc_count()) * nu.value);
        }
    }
}

TEST_CASE("approximate cover is never cheaper than exact tau") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Digraph d = random_tournament(7, 800 + seed);
        auto result = approximate_cover(d, directed_cycle(3), transitive_tournament(3));
        auto tau = exact_tau(d, directed_cycle(3));
        CHECK(result.cover_weight >= tau.value);
        CHECK(result.cover_weight <= result.ratio_bound * result.nu_star_original);
    }
}

TEST_CASE("caps stop the search") {
    Digraph d = random_tournament(8, 1);
    ResourceCaps caps;
    caps.oracle_copies = 2;
    CHECK_THROWS_AS(exact_tau(d, directed_cycle(3), caps), ResourceLimitError);
    ResourceCaps node_caps;
    node_caps.oracle_nodes = 1;
    CHECK_THROWS_AS(exact_tau(random_digraph(6, 1.0, 2), directed_cycle(3), node_caps),
                    ResourceLimitError);
}
