#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcover/caps.hpp"
#include "hcover/cover.hpp"
#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/errors.hpp"
#include "hcover/extremal.hpp"
#include "hcover/fparam.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracles.hpp"
#include "hcover/report.hpp"

namespace {

using hcover::Json;
using hcover::Rational;

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hcover::ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// cycle:k | tt:r | c2 | file:path
hcover::Pattern pattern_from_spec(const std::string& spec) {
    if (spec == "c2") return hcover::directed_cycle(2);
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw hcover::ValidationError("bad pattern spec '" + spec + "'");
    }
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "file") return hcover::parse_pattern(load_file(arg));
    int value = 0;
    try {
        value = std::stoi(arg);
    } catch (const std::exception&) {
        throw hcover::ValidationError("bad pattern spec '" + spec + "'");
    }
    if (kind == "cycle") return hcover::directed_cycle(value);
    if (kind == "tt") return hcover::transitive_tournament(value);
    throw hcover::ValidationError("bad pattern spec '" + spec + "'");
}

// kn:n | matching:n | file:path
hcover::UndirectedGraph undirected_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw hcover::ValidationError("bad graph spec '" + spec + "'");
    }
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "file") return hcover::parse_undirected(load_file(arg));
    int value = 0;
    try {
        value = std::stoi(arg);
    } catch (const std::exception&) {
        throw hcover::ValidationError("bad graph spec '" + spec + "'");
    }
    if (kind == "kn") return hcover::complete_graph(value);
    if (kind == "matching") return hcover::perfect_matching(value);
    throw hcover::ValidationError("bad graph spec '" + spec + "'");
}

Json input_entry(const std::string& spec, const std::string& content) {
    Json j;
    j["spec"] = spec;
    j["fnv64"] = hcover::fnv1a64_hex(content);
    return j;
}

struct Report {
    Json body;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Report(const std::vector<std::string>& echo, bool float_mode) {
        body["command"] = echo;
        body["mode"] = float_mode ? "float" : "exact";
        body["inputs"] = Json::object();
        body["outputs"] = Json::object();
    }

    void finish() {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        body["timing_ms"] =
            std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
        std::cout << body.dump(2) << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP-based fractional packing/covering of a fixed directed pattern"};
    app.set_help_flag("--help", "print usage"); // frees -h for the --h pattern flag
    app.require_subcommand(1);

    std::string host_spec, h_spec, l_spec, g_spec, family;
    std::uint64_t seed = 0;
    int rmax = 4;
    int trials = 10;
    int samples = 10;
    int n_arg = 0, k_arg = 0;
    int limit = 1000;
    bool float_mode = false;
    bool orient = false;
    std::string write_host, write_decomposition;

    auto* cmd_copies = app.add_subcommand("copies", "Enumerate C(H, D)");
    cmd_copies->add_option("--host", host_spec, "host digraph file")->required();
    cmd_copies->add_option("--h", h_spec, "pattern H (cycle:k, tt:r, c2, file:path)")->required();
    cmd_copies->add_option("--limit", limit, "max copies to list");

    auto* cmd_lp = app.add_subcommand("lp", "Fractional H-cover / H-packing LP");
    cmd_lp->add_option("--host", host_spec)->required();
    cmd_lp->add_option("--h", h_spec)->required();
    cmd_lp->add_flag("--float", float_mode, "floating-point simplex");

    auto* cmd_fparam = app.add_subcommand("fparam", "disc / f(H,L) / f(H) search");
    cmd_fparam->add_option("--h", h_spec)->required();
    cmd_fparam->add_option("--l", l_spec, "fixed L (otherwise search)");
    cmd_fparam->add_option("--rmax", rmax, "search cap on |V(L)|");

    auto* cmd_cover = app.add_subcommand("cover", "Derandomized f(H,L)-approximate H-cover");
    cmd_cover->add_option("--host", host_spec)->required();
    cmd_cover->add_option("--h", h_spec)->required();
    cmd_cover->add_option("--l", l_spec)->required();
    cmd_cover->add_flag("--float", float_mode);

    auto* cmd_exact = app.add_subcommand("exact", "Exact tau and nu by branch-and-bound");
    cmd_exact->add_option("--host", host_spec)->required();
    cmd_exact->add_option("--h", h_spec)->required();

    auto* cmd_construct = app.add_subcommand("construct", "C_k-decomposition of K_n");
    cmd_construct->add_option("--n", n_arg)->required();
    cmd_construct->add_option("--k", k_arg)->required();
    cmd_construct->add_option("--seed", seed);
    cmd_construct->add_flag("--orient", orient, "orient into a regular tournament");
    cmd_construct->add_option("--write-host", write_host, "write the tournament to a file");
    cmd_construct->add_option("--write-decomposition", write_decomposition);

    auto* cmd_ratio = app.add_subcommand("experiment-ratio", "Certified-ratio sweep");
    cmd_ratio->add_option("--family", family,
                          "tournament:n | digraph:n:p | constructed:n:k")->required();
    cmd_ratio->add_option("--h", h_spec)->required();
    cmd_ratio->add_option("--l", l_spec)->required();
    cmd_ratio->add_option("--trials", trials);
    cmd_ratio->add_option("--seed", seed);
    cmd_ratio->add_flag("--float", float_mode);

    auto* cmd_orientation =
        app.add_subcommand("experiment-orientation", "gamma/b of random orientations");
    cmd_orientation->add_option("--g", g_spec, "kn:n | matching:n | file:path")->required();
    cmd_orientation->add_option("--samples", samples);
    cmd_orientation->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const hcover::ResourceCaps caps = hcover::ResourceCaps::from_env();
    const hcover::Arith mode = float_mode ? hcover::Arith::floating : hcover::Arith::exact;
    std::vector<std::string> echo(argv, argv + argc);

    try {
        Report report(echo, float_mode);
        if (*cmd_construct || *cmd_ratio || *cmd_orientation) {
            // insert before taking references: ordered_json reallocates members
            report.body["seed"] = seed;
        }
        Json& inputs = report.body["inputs"];
        Json& out = report.body["outputs"];

        if (*cmd_copies) {
            std::string text = load_file(host_spec);
            hcover::Digraph d = hcover::parse_digraph(text);
            hcover::Pattern h = pattern_from_spec(h_spec);
            inputs["host"] = input_entry(host_spec, text);
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            auto copies = hcover::enumerate_copies(d, h, caps);
            out["copy_count"] = copies.size();
            Json rows = Json::array();
            const std::size_t list_cap = limit < 0 ? 0 : static_cast<std::size_t>(limit);
            for (std::size_t i = 0; i < copies.size() && i < list_cap; ++i) {
                Json row;
                row["arc_ids"] = copies[i].arc_ids;
                row["witness"] = copies[i].witness;
                rows.push_back(row);
            }
            out["copies"] = rows;
            out["truncated"] = copies.size() > list_cap;
        } else if (*cmd_lp) {
            std::string text = load_file(host_spec);
            hcover::Digraph d = hcover::parse_digraph(text);
            hcover::Pattern h = pattern_from_spec(h_spec);
            inputs["host"] = input_entry(host_spec, text);
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            auto copies = hcover::enumerate_copies(d, h, caps);
            auto sol = hcover::solve_fractional(d, h, copies, mode, caps);
            out["copy_count"] = copies.size();
            out["solution"] = hcover::frac_solution_json(d, sol);
            out["slackness"] =
                hcover::slackness_json(hcover::check_complementary_slackness(d, copies, sol, mode));
        } else if (*cmd_fparam) {
            hcover::Pattern h = pattern_from_spec(h_spec);
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            if (!l_spec.empty()) {
                hcover::Pattern l = pattern_from_spec(l_spec);
                inputs["l"] = input_entry(l_spec, hcover::serialize_pattern(l));
                out["disc"] = hcover::disc(h, l, caps);
                out["f_of_l"] = hcover::rational_json(hcover::f_of(h, l, caps));
                out["alpha"] = hcover::rational_json(hcover::alpha_threshold(h, l, caps));
            } else {
                out["search"] = hcover::fvalue_report_json(hcover::f_search(h, rmax, caps));
            }
            out["gamma"] = hcover::gamma(h, caps);
            out["b"] = hcover::b_param(h, caps);
            out["one_way_bipartite"] = hcover::is_one_way_bipartite(h);
        } else if (*cmd_cover) {
            std::string text = load_file(host_spec);
            hcover::Digraph d = hcover::parse_digraph(text);
            hcover::Pattern h = pattern_from_spec(h_spec);
            hcover::Pattern l = pattern_from_spec(l_spec);
            inputs["host"] = input_entry(host_spec, text);
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            inputs["l"] = input_entry(l_spec, hcover::serialize_pattern(l));
            auto result = hcover::approximate_cover(d, h, l, mode, caps);
            out["result"] = hcover::cover_result_json(result);
        } else if (*cmd_exact) {
            std::string text = load_file(host_spec);
            hcover::Digraph d = hcover::parse_digraph(text);
            hcover::Pattern h = pattern_from_spec(h_spec);
            inputs["host"] = input_entry(host_spec, text);
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            out["tau"] = hcover::oracle_result_json(hcover::exact_tau(d, h, caps));
            if (d.unit_weights()) {
                out["nu"] = hcover::oracle_result_json(hcover::exact_nu(d, h, caps));
            } else {
                out["nu"] = nullptr;
                out["nu_skipped"] = "weighted host";
            }
        } else if (*cmd_construct) {
            Json spec_echo;
            spec_echo["n"] = n_arg;
            spec_echo["k"] = k_arg;
            inputs["construct"] = spec_echo;
            auto dec = hcover::decompose_kn(n_arg, k_arg, caps);
            out["cycle_count"] = dec.cycles.size();
            out["cycles"] = dec.cycles;
            out["valid"] = hcover::validate_decomposition(dec);
            if (!write_decomposition.empty()) {
                std::ofstream f(write_decomposition, std::ios::binary);
                f << hcover::serialize_decomposition(dec);
            }
            if (orient || !write_host.empty()) {
                hcover::Digraph t = hcover::orient_decomposition(dec, seed);
                bool regular = true;
                std::vector<int> outdeg(static_cast<std::size_t>(dec.n), 0);
                for (const auto& a : t.arcs()) ++outdeg[static_cast<std::size_t>(a.tail)];
                for (int v = 0; v < dec.n; ++v) {
                    if (outdeg[static_cast<std::size_t>(v)] != (dec.n - 1) / 2) regular = false;
                }
                auto packing = hcover::packing_from_decomposition(dec, t, caps);
                Rational nu = hcover::nu_star(t, hcover::directed_cycle(dec.k),
                                              hcover::Arith::exact, caps);
                out["tournament"] = hcover::serialize_digraph(t);
                out["regular"] = regular;
                out["packing_size"] = packing.size();
                out["nu_star"] = hcover::rational_json(nu);
                out["certified"] =
                    regular && nu == Rational(static_cast<long>(packing.size())) &&
                    Rational(static_cast<long>(packing.size())) ==
                        hcover::make_rational(static_cast<long>(dec.n) * (dec.n - 1),
                                              2L * dec.k);
                // covering-side context: exact tau next to n^2/4 (the
                // quadratic lower-bound regime is out of desk-scale reach,
                // so this is reported, never asserted)
                out["quarter_n_squared"] = hcover::rational_json(
                    hcover::make_rational(static_cast<long>(dec.n) * dec.n, 4));
                try {
                    out["tau"] = hcover::oracle_result_json(
                        hcover::exact_tau(t, hcover::directed_cycle(dec.k), caps));
                } catch (const hcover::ResourceLimitError&) {
                    out["tau"] = nullptr;
                }
                if (!write_host.empty()) {
                    std::ofstream f(write_host, std::ios::binary);
                    f << hcover::serialize_digraph(t);
                }
            }
        } else if (*cmd_ratio) {
            hcover::Pattern h = pattern_from_spec(h_spec);
            hcover::Pattern l = pattern_from_spec(l_spec);
            inputs["family"] = family;
            inputs["h"] = input_entry(h_spec, hcover::serialize_pattern(h));
            inputs["l"] = input_entry(l_spec, hcover::serialize_pattern(l));

            std::vector<std::string> parts;
            {
                std::stringstream ss(family);
                std::string item;
                while (std::getline(ss, item, ':')) parts.push_back(item);
            }
            std::optional<hcover::CycleDecomposition> dec;
            int fam_n = 0, fam_k = 0;
            double fam_p = 0;
            try {
                if (parts.empty()) throw std::invalid_argument(family);
                if (parts[0] == "tournament" && parts.size() == 2) {
                    fam_n = std::stoi(parts[1]);
                } else if (parts[0] == "digraph" && parts.size() == 3) {
                    fam_n = std::stoi(parts[1]);
                    fam_p = std::stod(parts[2]);
                } else if (parts[0] == "constructed" && parts.size() == 3) {
                    fam_n = std::stoi(parts[1]);
                    fam_k = std::stoi(parts[2]);
                } else {
                    throw std::invalid_argument(family);
                }
            } catch (const std::exception&) {
                throw hcover::ValidationError("bad family '" + family + "'");
            }
            if (parts[0] == "constructed") {
                dec = hcover::decompose_kn(fam_n, fam_k, caps);
            }

            Json rows = Json::array();
            Rational max_ratio(0);
            Rational ratio_sum(0);
            long ratio_count = 0;
            for (int t = 0; t < trials; ++t) {
                std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
                hcover::Digraph d;
                if (parts[0] == "tournament") {
                    d = hcover::random_tournament(fam_n, trial_seed);
                } else if (parts[0] == "digraph") {
                    d = hcover::random_digraph(fam_n, fam_p, trial_seed);
                } else {
                    d = hcover::orient_decomposition(*dec, trial_seed);
                }
                auto result = hcover::approximate_cover(d, h, l, mode, caps);
                Json row;
                row["trial"] = t;
                row["seed"] = trial_seed;
                row["nu_star"] = hcover::rational_json(result.nu_star_original);
                row["cover_weight"] = hcover::rational_json(result.cover_weight);
                row["h_free"] = result.h_free_certified;
                if (result.nu_star_original > 0) {
                    Rational ratio = result.cover_weight / result.nu_star_original;
                    row["ratio_vs_nu_star"] = hcover::rational_json(ratio);
                    if (ratio > max_ratio) max_ratio = ratio;
                    ratio_sum += ratio;
                    ++ratio_count;
                } else {
                    row["ratio_vs_nu_star"] = nullptr;
                }
                try {
                    auto tau = hcover::exact_tau(d, h, caps);
                    row["exact_tau"] = hcover::rational_json(tau.value);
                    if (tau.value > 0) {
                        row["ratio_vs_tau"] =
                            hcover::rational_json(result.cover_weight / tau.value);
                    } else {
                        row["ratio_vs_tau"] = nullptr;
                    }
                } catch (const hcover::ResourceLimitError&) {
                    row["exact_tau"] = nullptr;
                    row["ratio_vs_tau"] = nullptr;
                }
                rows.push_back(row);
            }
            out["trials"] = rows;
            out["ratio_bound"] = hcover::rational_json(hcover::f_of(h, l, caps));
            out["max_ratio_vs_nu_star"] = hcover::rational_json(max_ratio);
            out["mean_ratio_vs_nu_star"] =
                ratio_count > 0
                    ? hcover::rational_json(ratio_sum / Rational(ratio_count))
                    : Json(nullptr);
        } else if (*cmd_orientation) {
            hcover::UndirectedGraph g = undirected_from_spec(g_spec);
            inputs["g"] = input_entry(g_spec, hcover::serialize_undirected(g));
            // orientations of multigraphs would need parallel pattern arcs
            (void)hcover::UndirectedGraph(g.vertex_count(), g.edges(), true);
            Json rows = Json::array();
            Rational ratio_sum(0);
            for (int s = 0; s < samples; ++s) {
                std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s));
                std::vector<std::pair<int, int>> arcs;
                for (const auto& e : g.edges()) {
                    if (rng() & 1ULL) {
                        arcs.emplace_back(e.u, e.v);
                    } else {
                        arcs.emplace_back(e.v, e.u);
                    }
                }
                hcover::Pattern oriented(g.vertex_count(), std::move(arcs));
                int gam = hcover::gamma(oriented, caps);
                int bb = hcover::b_param(oriented, caps);
                const long e = oriented.arc_count();
                if (2 * gam < e || gam > e) {
                    throw hcover::NumericError("gamma bound violated");
                }
                Rational ratio = hcover::make_rational(std::min(gam, bb), e);
                ratio_sum += ratio;
                Json row;
                row["sample"] = s;
                row["gamma"] = gam;
                row["b"] = bb;
                row["arc_count"] = e;
                row["min_over_edges"] = hcover::rational_json(ratio);
                rows.push_back(row);
            }
            out["samples"] = rows;
            out["mean_min_over_edges"] =
                samples > 0 ? hcover::rational_json(ratio_sum / Rational(samples))
                            : Json(nullptr);
            out["note"] = "only |E|/2 <= gamma <= |E| is asserted per sample";
        }

        report.finish();
        return 0;
    } catch (const hcover::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const hcover::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
