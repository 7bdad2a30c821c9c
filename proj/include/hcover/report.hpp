#pragma once

#include <string>

#include <json.hpp>

#include "hcover/cover.hpp"
#include "hcover/extremal.hpp"
#include "hcover/fparam.hpp"
#include "hcover/lp.hpp"
#include "hcover/oracles.hpp"
#include "hcover/rational.hpp"

namespace hcover {

// Reports preserve field order so identical runs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"exact": "p/q", "float": <double>}
Json rational_json(const Rational& q);

std::string fnv1a64_hex(const std::string& data);

Json frac_solution_json(const Digraph& d, const FracSolution& sol);
Json slackness_json(const SlacknessReport& report);
Json cover_result_json(const CoverResult& result);
Json fvalue_report_json(const FValueReport& report);
Json oracle_result_json(const OracleResult& result);
Json ht_report_json(const HtReport& report);

} // namespace hcover
