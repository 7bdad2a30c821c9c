#include "hcover/report.hpp"

namespace hcover {

Json rational_json(const Rational& q) {
    Json j;
    j["exact"] = rational_string(q);
    j["float"] = rational_double(q);
    return j;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

Json frac_solution_json(const Digraph& d, const FracSolution& sol) {
    Json j;
    j["optimum"] = rational_json(sol.optimum);
    j["gap"] = rational_json(sol.gap);
    Json cover = Json::array();
    for (int id = 0; id < d.arc_count(); ++id) {
        const Rational& c = sol.cover[static_cast<std::size_t>(id)];
        if (c == 0) continue;
        Json row;
        row["arc_id"] = id;
        row["value"] = rational_json(c);
        cover.push_back(row);
    }
    j["cover"] = cover;
    Json packing = Json::array();
    for (std::size_t i = 0; i < sol.packing.size(); ++i) {
        if (sol.packing[i] == 0) continue;
        Json row;
        row["copy"] = i;
        row["value"] = rational_json(sol.packing[i]);
        packing.push_back(row);
    }
    j["packing"] = packing;
    return j;
}

Json slackness_json(const SlacknessReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["max_violation"] = rational_json(report.max_violation);
    Json entries = Json::array();
    for (const SlacknessEntry& e : report.entries) {
        Json row;
        row["arc_id"] = e.arc_id;
        row["cover"] = rational_json(e.cover_value);
        row["load"] = rational_json(e.packing_load);
        row["weight"] = rational_json(e.weight);
        row["violation"] = rational_json(e.violation);
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

Json cover_result_json(const CoverResult& result) {
    Json j;
    j["cover_arcs"] = result.cover_arcs;
    j["cover_weight"] = rational_json(result.cover_weight);
    j["nu_star"] = rational_json(result.nu_star_original);
    j["ratio_bound"] = rational_json(result.ratio_bound);
    Json trace = Json::array();
    for (const auto& [id, value] : result.peel_trace) {
        Json row;
        row["arc_id"] = id;
        row["cover"] = rational_json(value);
        trace.push_back(row);
    }
    j["peel_trace"] = trace;
    j["assignment"] = result.assignment;
    j["h_free_certified"] = result.h_free_certified;
    return j;
}

Json fvalue_report_json(const FValueReport& report) {
    Json j;
    j["f_lower"] = rational_json(report.f_lower);
    j["f_upper"] = rational_json(report.f_upper);
    j["disc"] = report.disc;
    j["gamma"] = report.gamma;
    j["b"] = report.b;
    j["one_way_bipartite"] = report.one_way_bipartite;
    j["infimum_not_attained"] = report.infimum_not_attained;
    if (report.best_l) {
        j["best_l"] = serialize_pattern(*report.best_l);
    } else {
        j["best_l"] = nullptr;
    }
    return j;
}

Json oracle_result_json(const OracleResult& result) {
    Json j;
    j["value"] = rational_json(result.value);
    j["witness_arcs"] = result.witness_arcs;
    j["witness_copies"] = result.witness_copies;
    j["node_count"] = result.node_count;
    return j;
}

Json ht_report_json(const HtReport& report) {
    Json j;
    j["ck_free"] = report.ck_free;
    j["arc_count"] = report.arc_count;
    j["bound"] = rational_json(report.bound);
    j["consistent"] = report.consistent;
    return j;
}

} // namespace hcover
