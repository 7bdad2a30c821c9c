#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcover/digraph.hpp"
#include "hcover/embed.hpp"
#include "hcover/report.hpp"

using namespace hcover;

TEST_CASE("rational rendering round-trips exactly") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        long num = static_cast<long>(rng() % 2000) - 1000;
        long den = 1 + static_cast<long>(rng() % 999);
        Rational q = make_rational(num, den);
        CHECK(parse_rational(rational_string(q)) == q);
    }
    Json j = rational_json(make_rational(5, 2));
    CHECK(j["exact"] == "5/2");
    CHECK(j["float"] == 2.5);
}

TEST_CASE("fnv1a64 is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("hcover") == fnv1a64_hex("hcover"));
    CHECK(fnv1a64_hex("hcover") != fnv1a64_hex("hcovers"));
}

TEST_CASE("solution reports carry both renderings") {
    Digraph r5 = rotational_tournament(5);
    auto copies = enumerate_copies(r5, directed_cycle(3));
    auto sol = solve_fractional(r5, directed_cycle(3), copies);
    Json j = frac_solution_json(r5, sol);
    CHECK(j["optimum"]["exact"] == "5/2");
    CHECK(j["optimum"]["float"] == 2.5);
    CHECK(j["gap"]["exact"] == "0");
    CHECK(j["cover"].size() == 5);
    CHECK(j["packing"].size() == 5);

    Json s = slackness_json(check_complementary_slackness(r5, copies, sol));
    CHECK(s["ok"] == true);
    CHECK(s["entries"].size() == 5);
}

TEST_CASE("cover result report shape") {
    Digraph r5 = rotational_tournament(5);
    auto result = approximate_cover(r5, directed_cycle(3), transitive_tournament(3));
    Json j = cover_result_json(result);
    for (const char* key :
         {"cover_arcs", "cover_weight", "nu_star", "ratio_bound", "peel_trace", "assignment",
          "h_free_certified"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["h_free_certified"] == true);
    CHECK(j["ratio_bound"]["exact"] == "2");
}

TEST_CASE("identical values serialize identically") {
    Digraph r5 = rotational_tournament(5);
    auto copies = enumerate_copies(r5, directed_cycle(3));
    Json a = frac_solution_json(r5, solve_fractional(r5, directed_cycle(3), copies));
    Json b = frac_solution_json(r5, solve_fractional(r5, directed_cycle(3), copies));
    CHECK(a.dump() == b.dump());
}
