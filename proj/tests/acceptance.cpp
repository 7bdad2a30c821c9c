// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exact rational mode throughout; no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "hcover/cover.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/errors.hpp"
#include "hcover/extremal.hpp"
#include "hcover/fparam.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracles.hpp"

using namespace hcover;

namespace {

struct Failure {
    std::string detail;
};

void expect(bool condition, const std::string& detail) {
    if (!condition) throw Failure{detail};
}

// ---------------------------------------------------------------------------
// shared certification sweep (criteria 5, 6, 7, 8, 10)

struct SweepRun {
    std::string label;
    int k = 0;
    Digraph host;
    Pattern h;
    Pattern l;
    Rational ratio;               // f(H, L)
    Rational nu_star_value;       // optimum of the first LP
    Rational cover_weight;
    std::vector<int> cover_arcs;
    bool h_free = false;
    bool derand_monotone = false;
    Rational initial_expectation; // (1 - l/r^2) * sum of positive-cover weights
    Rational f2_weight;
    std::optional<Rational> tau;  // exact oracle when within caps
    std::optional<Rational> nu;
    bool certificates_ok = false; // both LP certificates re-verified feasible
};

bool verify_certificates(const Digraph& d, const std::vector<Copy>& copies,
                         const std::vector<char>& copy_active, const FracSolution& sol) {
    for (std::size_t c = 0; c < copies.size(); ++c) {
        if (!copy_active.empty() && !copy_active[c]) continue;
        Rational sum(0);
        for (int id : copies[c].arc_ids) sum += sol.cover[static_cast<std::size_t>(id)];
        if (sum < 1) return false;
    }
    std::vector<Rational> load(static_cast<std::size_t>(d.arc_count()), Rational(0));
    for (std::size_t c = 0; c < copies.size(); ++c) {
        for (int id : copies[c].arc_ids) load[static_cast<std::size_t>(id)] += sol.packing[c];
    }
    for (int id = 0; id < d.arc_count(); ++id) {
        if (load[static_cast<std::size_t>(id)] > d.arc(id).weight) return false;
        if (sol.cover[static_cast<std::size_t>(id)] < 0) return false;
        if (sol.cover[static_cast<std::size_t>(id)] > 1) return false;
    }
    return sol.gap == 0;
}

const std::vector<SweepRun>& certification_sweep() {
    static std::vector<SweepRun> sweep = [] {
        std::vector<SweepRun> runs;
        ResourceCaps caps;
        ResourceCaps oracle_caps;
        oracle_caps.oracle_nodes = 400000;

        struct Spec {
            int k;
            std::string label;
            Digraph host;
        };
        std::vector<Spec> specs;
        auto add_instances = [&specs](int k, int quota) {
            int count = 0;
            std::uint64_t seed = 100 * static_cast<std::uint64_t>(k);
            for (int n = 5; n <= 9 && count + 2 <= quota; ++n) {
                for (int s = 0; s < 2; ++s, ++count) {
                    std::ostringstream label;
                    label << "tournament n=" << n << " seed=" << seed + 1;
                    specs.push_back({k, label.str(), random_tournament(n, ++seed)});
                }
            }
            const double probabilities[] = {0.3, 0.6, 1.0};
            for (int n = 5; n <= 8; ++n) {
                for (double p : probabilities) {
                    if (count >= quota) break;
                    if (k == 5 && n >= 7 && p == 1.0) continue; // copy counts explode
                    std::ostringstream label;
                    label << "digraph n=" << n << " p=" << p << " seed=" << seed + 1;
                    specs.push_back({k, label.str(), random_digraph(n, p, ++seed)});
                    ++count;
                }
            }
            int n = 5;
            while (count < quota) { // pad with more tournaments
                std::ostringstream label;
                label << "tournament n=" << n << " seed=" << seed + 1;
                specs.push_back({k, label.str(), random_tournament(n, ++seed)});
                ++count;
                n = (n == 9) ? 5 : n + 1;
            }
        };
        add_instances(3, 36);
        add_instances(4, 34);
        add_instances(5, 30);

        for (const Spec& spec : specs) {
            SweepRun run;
            run.k = spec.k;
            run.label = spec.label + " k=" + std::to_string(spec.k);
            run.host = spec.host;
            run.h = directed_cycle(spec.k);
            run.l = transitive_tournament(spec.k == 5 ? 4 : 3); // L per the cycle analysis
            run.ratio = f_of(run.h, run.l, caps);

            auto copies = enumerate_copies(run.host, run.h, caps);
            Rational threshold = Rational(1) / run.ratio;
            auto peel = peel_heavy_arcs(run.host, run.h, copies, threshold, Arith::exact, caps);
            auto derand = derandomized_partition(run.host, peel.arc_active,
                                                 peel.residual_solution.cover, run.l);
            auto f2 = partition_cover(run.host, peel.arc_active, peel.residual_solution.cover,
                                      run.l, derand.assignment);

            run.nu_star_value = peel.original_solution.optimum;
            run.cover_arcs = peel.peeled;
            run.cover_arcs.insert(run.cover_arcs.end(), f2.begin(), f2.end());
            std::sort(run.cover_arcs.begin(), run.cover_arcs.end());
            run.cover_arcs.erase(std::unique(run.cover_arcs.begin(), run.cover_arcs.end()),
                                 run.cover_arcs.end());
            run.cover_weight = Rational(0);
            for (int id : run.cover_arcs) run.cover_weight += run.host.arc(id).weight;
            run.f2_weight = Rational(0);
            for (int id : f2) run.f2_weight += run.host.arc(id).weight;
            run.h_free = is_h_free(run.host, run.h, run.cover_arcs, caps);

            run.derand_monotone = true;
            for (std::size_t i = 1; i < derand.expectation_trace.size(); ++i) {
                if (derand.expectation_trace[i] > derand.expectation_trace[i - 1]) {
                    run.derand_monotone = false;
                }
            }
            run.initial_expectation = derand.expectation_trace.front();

            run.certificates_ok =
                verify_certificates(run.host, copies, {}, peel.original_solution) &&
                verify_certificates(run.host, copies, peel.copy_active,
                                    peel.residual_solution);

            // dense hosts with a large tau-vs-nu* gap blow up the search tree
            if (copies.size() <= 160 && run.host.arc_count() <= 48) {
                try {
                    run.tau = exact_tau(run.host, run.h, oracle_caps).value;
                    run.nu = exact_nu(run.host, run.h, oracle_caps).value;
                } catch (const ResourceLimitError&) {
                    run.tau.reset();
                    run.nu.reset();
                }
            }
            runs.push_back(std::move(run));
        }
        return runs;
    }();
    return sweep;
}

// ---------------------------------------------------------------------------
// criteria

void criterion_disc_table() {
    for (int k = 3; k <= 8; ++k) {
        for (int r = 2; r <= 4; ++r) {
            int expected = (k + r - 1) / r;
            int got = disc(directed_cycle(k), transitive_tournament(r));
            expect(got == expected, "disc(C_" + std::to_string(k) + ", T_" + std::to_string(r) +
                                        ") = " + std::to_string(got));
        }
    }
}

void criterion_f_golden() {
    expect(f_of(directed_cycle(3), transitive_tournament(3)) == 2, "f(C_3,T_3)");
    expect(f_of(directed_cycle(4), transitive_tournament(3)) == make_rational(8, 3),
           "f(C_4,T_3)");
    expect(f_of(directed_cycle(5), transitive_tournament(4)) == make_rational(25, 8),
           "f(C_5,T_4)");
    expect(f_of(directed_cycle(6), transitive_tournament(3)) == 4, "f(C_6,T_3)");
    expect(f_of(directed_cycle(2), transitive_tournament(4)) == make_rational(5, 4),
           "f(C_2,T_4)");

    auto c3 = f_search(directed_cycle(3), 3);
    expect(c3.f_upper == 2, "f_search(C_3,3) value");
    expect(c3.best_l.has_value() && *c3.best_l == transitive_tournament(3),
           "f_search(C_3,3) witness");

    auto c5 = f_search(directed_cycle(5), 4);
    expect(c5.f_upper == make_rational(25, 8), "f_search(C_5,4) value");
    expect(c5.best_l.has_value() && *c5.best_l == transitive_tournament(4),
           "f_search(C_5,4) witness");
}

Pattern random_acceptance_pattern(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = 3 + static_cast<int>(rng() % 4); // 3..6 vertices
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            switch (rng() % 5) {
                case 0: arcs.emplace_back(i, j); break;
                case 1: arcs.emplace_back(j, i); break;
                case 2:
                    arcs.emplace_back(i, j);
                    arcs.emplace_back(j, i);
                    break;
                default: break;
            }
        }
    }
    return Pattern(n, std::move(arcs));
}

void criterion_parameter_sandwich() {
    int kept = 0;
    for (std::uint64_t seed = 0; kept < 50; ++seed) {
        expect(seed < 4000, "pattern generator starved");
        Pattern h = random_acceptance_pattern(31000 + seed);
        if (h.arc_count() < 2) continue;
        int g = gamma(h);
        int b = b_param(h);
        // gamma(H) = |E|/2 is the doubled-graph family where the infimum is
        // not attained by any finite L; the sandwich is tested off it
        if (2 * g == h.arc_count()) continue;
        ++kept;

        expect(disc(h, transitive_tournament(h.vertex_count())) == h.arc_count() - g,
               "disc(H, T_r) identity at seed " + std::to_string(seed));
        expect(disc(h, directed_cycle(2)) == h.arc_count() - b,
               "disc(H, C_2) identity at seed " + std::to_string(seed));

        auto report = f_search(h, std::max(4, h.vertex_count()));
        expect(report.f_lower == make_rational(h.arc_count(), 2), "f_lower value");
        expect(report.f_lower <= report.f_upper, "lower vs upper at seed " + std::to_string(seed));
        expect(report.f_upper <= std::min(g, b),
               "upper vs min(gamma, b) at seed " + std::to_string(seed));
    }
}

void criterion_r5_fixtures() {
    Digraph r5 = rotational_tournament(5);
    expect(exact_tau(r5, directed_cycle(3)).value == 3, "tau_3(R_5)");
    expect(exact_nu(r5, directed_cycle(3)).value == 2, "nu_3(R_5)");
    expect(exact_tau(r5, directed_cycle(4)).value == 2, "tau_4(R_5)");
    expect(exact_nu(r5, directed_cycle(4)).value == 1, "nu_4(R_5)");
    expect(nu_star(r5, directed_cycle(3)) == make_rational(5, 2), "nu*_3(R_5)");
}

void criterion_certification_sweep() {
    const auto& sweep = certification_sweep();
    expect(sweep.size() == 100, "expected 100 runs, got " + std::to_string(sweep.size()));
    for (const SweepRun& run : sweep) {
        expect(run.h_free, "not H-free: " + run.label);
        expect(run.cover_weight <= run.ratio * run.nu_star_value,
               "weight bound violated: " + run.label);
        if (run.tau) {
            expect(*run.tau > 0 || run.cover_weight == 0, "tau=0 with cover: " + run.label);
            if (*run.tau > 0) {
                expect(run.cover_weight <= run.ratio * (*run.tau),
                       "weight/tau ratio violated: " + run.label);
            }
        }
    }
}

void criterion_duality_sandwich() {
    int full_sandwich = 0;
    for (const SweepRun& run : certification_sweep()) {
        expect(run.certificates_ok, "primal-dual certificates failed: " + run.label);
        if (run.tau && run.nu) {
            ++full_sandwich;
            expect(*run.nu <= run.nu_star_value, "nu <= nu* failed: " + run.label);
            expect(run.nu_star_value <= *run.tau, "nu* <= tau failed: " + run.label);
            expect(*run.tau <= Rational(run.k) * (*run.nu),
                   "tau <= |E(H)| nu failed: " + run.label);
        }
    }
    expect(full_sandwich >= 30,
           "only " + std::to_string(full_sandwich) + " runs had both oracles");
}

void criterion_partition_assignments() {
    std::mt19937_64 rng(515151);
    const auto& sweep = certification_sweep();
    int instances = 0;
    int assignments = 0;
    for (const SweepRun& run : sweep) {
        if (instances >= 20) break;
        ++instances;
        auto copies = enumerate_copies(run.host, run.h);
        Rational threshold = Rational(1) / run.ratio;
        auto peel = peel_heavy_arcs(run.host, run.h, copies, threshold);
        const int r = run.l.vertex_count();
        for (int trial = 0; trial < 10; ++trial) {
            ++assignments;
            std::vector<int> assignment(static_cast<std::size_t>(run.host.vertex_count()));
            for (auto& part : assignment) {
                part = static_cast<int>(rng() % static_cast<std::uint64_t>(r));
            }
            auto f2 = partition_cover(run.host, peel.arc_active,
                                      peel.residual_solution.cover, run.l, assignment);
            std::vector<int> removed = peel.peeled;
            removed.insert(removed.end(), f2.begin(), f2.end());
            expect(is_h_free(run.host, run.h, removed),
                   "random assignment left a copy alive: " + run.label);
        }
    }
    expect(assignments == 200, "expected 200 assignments, got " + std::to_string(assignments));
}

void criterion_derandomization() {
    for (const SweepRun& run : certification_sweep()) {
        expect(run.derand_monotone, "expectation increased: " + run.label);
        expect(run.f2_weight <= run.initial_expectation,
               "F2 exceeds the initial expectation: " + run.label);
    }
}

void criterion_constructions() {
    for (auto [n, k] : {std::pair<int, int>{7, 3}, std::pair<int, int>{9, 4}}) {
        auto dec = decompose_kn(n, k);
        expect(validate_decomposition(dec), "invalid decomposition");
        Rational target = make_rational(static_cast<long>(n) * (n - 1), 2L * k);
        expect(Rational(static_cast<long>(dec.cycles.size())) == target, "cycle count");
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            Digraph t = orient_decomposition(dec, seed);
            std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
            for (const Arc& a : t.arcs()) ++outdeg[static_cast<std::size_t>(a.tail)];
            for (int v = 0; v < n; ++v) {
                expect(outdeg[static_cast<std::size_t>(v)] == (n - 1) / 2,
                       "orientation not regular");
            }
            auto packing = packing_from_decomposition(dec, t);
            expect(Rational(static_cast<long>(packing.size())) == target, "packing size");
            expect(nu_star(t, directed_cycle(k)) == target, "nu* mismatch on constructed T");
        }
    }
}

void criterion_ht_consistency() {
    int checked = 0;
    for (const SweepRun& run : certification_sweep()) {
        if (checked >= 50) break;
        ++checked;
        std::vector<Arc> residual_arcs;
        std::vector<char> in_cover(static_cast<std::size_t>(run.host.arc_count()), 0);
        for (int id : run.cover_arcs) in_cover[static_cast<std::size_t>(id)] = 1;
        for (int id = 0; id < run.host.arc_count(); ++id) {
            if (!in_cover[static_cast<std::size_t>(id)]) residual_arcs.push_back(run.host.arc(id));
        }
        Digraph residual(run.host.vertex_count(), residual_arcs);
        auto report = check_ht(residual, run.k);
        expect(report.ck_free, "residual has a k-cycle: " + run.label);
        expect(report.consistent, "arc-count bound violated: " + run.label);
    }
    expect(checked == 50, "expected 50 covers");
}

void criterion_declared_scale_limits() {
    // The quadratic asymptotics (the covering side of the lower-bound
    // construction, the o(n^2) integral-packing statements, and the a.a.s. claim
    // about random orientations) are not reproducible at desk scale; the
    // suites above replace them, and the orientation experiment asserts only
    // the deterministic bounds |E|/2 <= gamma <= |E| per sample.
    for (auto [n, samples, seed0] :
         {std::tuple<int, int, std::uint64_t>{6, 10, 640},
          std::tuple<int, int, std::uint64_t>{8, 20, 880}}) {
        UndirectedGraph g = complete_graph(n);
        for (int s = 0; s < samples; ++s) {
            std::mt19937_64 rng(seed0 + static_cast<std::uint64_t>(s));
            std::vector<std::pair<int, int>> arcs;
            for (const Edge& e : g.edges()) {
                if (rng() & 1ULL) {
                    arcs.emplace_back(e.u, e.v);
                } else {
                    arcs.emplace_back(e.v, e.u);
                }
            }
            Pattern oriented(n, std::move(arcs));
            int gam = gamma(oriented);
            expect(2 * gam >= oriented.arc_count(), "gamma lower bound");
            expect(gam <= oriented.arc_count(), "gamma upper bound");
        }
    }
    // a perfect matching orientation is acyclic: gamma/|E| = 1
    UndirectedGraph pm = perfect_matching(8);
    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : pm.edges()) arcs.emplace_back(e.u, e.v);
    Pattern matching(8, std::move(arcs));
    expect(gamma(matching) == matching.arc_count(), "matching orientation");
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void()> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "disc(C_k, T_r) table", 1.0, criterion_disc_table},
        {2, "f golden values and searches", 10.0, criterion_f_golden},
        {3, "acyclic/bipartite sandwich on 50 random patterns", 30.0,
         criterion_parameter_sandwich},
        {4, "R_5 fixtures", 5.0, criterion_r5_fixtures},
        {5, "certification sweep (100 runs)", 600.0, criterion_certification_sweep},
        {6, "duality and integer sandwich on the sweep", 600.0, criterion_duality_sandwich},
        {7, "partition cover under 200 random assignments", 600.0,
         criterion_partition_assignments},
        {8, "derandomized expectation is monotone", 600.0, criterion_derandomization},
        {9, "K_7/C_3 and K_9/C_4 constructions", 120.0, criterion_constructions},
        {10, "arc-count consistency on 50 covers", 600.0, criterion_ht_consistency},
        {11, "declared desk-scale limits (report-only experiments)", 120.0,
         criterion_declared_scale_limits},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.limit_seconds) {
            ok = false;
            detail = "time limit exceeded";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("%d criteria failed\n", failures);
    }
    return failures;
}
