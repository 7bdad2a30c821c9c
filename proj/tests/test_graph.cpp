#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hcover/digraph.hpp"
#include "hcover/errors.hpp"
#include "hcover/rational.hpp"

using namespace hcover;

namespace {

Digraph c3_fixture() {
    return build_digraph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

} // namespace

TEST_CASE("build_digraph basics") {
    Digraph d = c3_fixture();
    CHECK(d.vertex_count() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.arc(0).tail == 0);
    CHECK(d.arc(2).head == 0);

    Digraph empty = build_digraph(0, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.arc_count() == 0);

    Digraph multi = build_digraph(2, {{0, 1, make_rational(5, 2)}, {0, 1, 1}});
    CHECK(multi.arc_count() == 2);
    CHECK(multi.arc(0).weight == make_rational(5, 2));
    CHECK(multi.arc(1).weight == 1);
}

TEST_CASE("build_digraph rejects bad input") {
    CHECK_THROWS_AS(build_digraph(2, {{0, 2, 1}}), ValidationError);
    CHECK_THROWS_AS(build_digraph(2, {{0, 1, -1}}), ValidationError);
    CHECK_THROWS_AS(build_digraph(1, {{0, 0, 1}}), ValidationError);
    CHECK_THROWS_AS(build_digraph(-1, {}), ValidationError);
}

TEST_CASE("directed_cycle") {
    Pattern c2 = directed_cycle(2);
    CHECK(c2.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

    Pattern c3 = directed_cycle(3);
    CHECK(c3.arc_count() == 3);
    CHECK(c3.has_arc(2, 0));

    Pattern c5 = directed_cycle(5);
    CHECK(c5.arc_count() == 5);

    CHECK_THROWS_AS(directed_cycle(1), ValidationError);
}

TEST_CASE("transitive_tournament") {
    CHECK(transitive_tournament(2).arcs() == std::vector<std::pair<int, int>>{{0, 1}});
    Pattern t3 = transitive_tournament(3);
    CHECK(t3.arc_count() == 3);
    CHECK(is_acyclic(to_digraph(t3)));
    CHECK(transitive_tournament(4).arc_count() == 6);
    CHECK_THROWS_AS(transitive_tournament(0), ValidationError);
}

TEST_CASE("pattern validation") {
    CHECK_THROWS_AS(Pattern(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Pattern(2, {{0, 1}, {0, 1}}), ValidationError);
    CHECK_THROWS_AS(Pattern(2, {{0, 3}}), ValidationError);
}

TEST_CASE("rotational_tournament degrees") {
    for (int n : {3, 5, 7}) {
        Digraph t = rotational_tournament(n);
        CHECK(t.arc_count() == n * (n - 1) / 2);
        std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
        std::vector<int> indeg(static_cast<std::size_t>(n), 0);
        for (const Arc& a : t.arcs()) {
            ++outdeg[static_cast<std::size_t>(a.tail)];
            ++indeg[static_cast<std::size_t>(a.head)];
        }
        for (int v = 0; v < n; ++v) {
            CHECK(outdeg[static_cast<std::size_t>(v)] == (n - 1) / 2);
            CHECK(indeg[static_cast<std::size_t>(v)] == (n - 1) / 2);
        }
    }
    Digraph r5 = rotational_tournament(5);
    for (const Arc& a : r5.arcs()) {
        int diff = (a.head - a.tail + 5) % 5;
        CHECK((diff == 1 || diff == 2));
    }
    CHECK_THROWS_AS(rotational_tournament(4), ValidationError);
}

TEST_CASE("random generators") {
    CHECK(random_digraph(4, 0.0, 9).arc_count() == 0);
    CHECK(random_digraph(4, 1.0, 9).arc_count() == 12);
    CHECK(random_tournament(5, 1).arc_count() == 10);

    Digraph a = random_digraph(8, 0.4, 123);
    Digraph b = random_digraph(8, 0.4, 123);
    CHECK(a == b);
    Digraph t1 = random_tournament(9, 7);
    Digraph t2 = random_tournament(9, 7);
    CHECK(t1 == t2);

    // one arc per unordered pair
    Digraph t = random_tournament(6, 3);
    std::set<std::pair<int, int>> pairs;
    for (const Arc& arc : t.arcs()) {
        pairs.insert({std::min(arc.tail, arc.head), std::max(arc.tail, arc.head)});
    }
    CHECK(pairs.size() == 15);

    CHECK_THROWS_AS(random_digraph(4, 1.5, 0), ValidationError);
}

TEST_CASE("acyclic_orientation") {
    CHECK(acyclic_orientation(complete_graph(3)) == to_digraph(transitive_tournament(3)));
    CHECK(acyclic_orientation(complete_graph(4)) == to_digraph(transitive_tournament(4)));
    UndirectedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
    Digraph d = acyclic_orientation(path);
    CHECK(d.arc(0).tail == 0);
    CHECK(d.arc(1).tail == 1);
    for (int n : {2, 5, 8}) {
        CHECK(is_acyclic(acyclic_orientation(complete_graph(n))));
    }
}

TEST_CASE("parse_digraph and serialize_digraph") {
    Digraph c3 = parse_digraph("3\n0 1 1\n1 2 1\n2 0 1\n");
    CHECK(c3 == c3_fixture());

    Digraph multi = parse_digraph("2\n0 1 2.5\n0 1 1\n");
    CHECK(multi.arc_count() == 2);
    CHECK(multi.arc(0).weight == make_rational(5, 2));

    CHECK_THROWS_AS(parse_digraph("1\n0 0 1\n"), ValidationError);

    // comments, blanks, and line-numbered syntax errors
    Digraph commented = parse_digraph("# host\n3\n\n0 1  # first arc\n1 2\n2 0\n");
    CHECK(commented == c3_fixture());
    try {
        parse_digraph("3\n0 x\n");
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    // round trips
    std::string normalized = serialize_digraph(multi);
    CHECK(serialize_digraph(parse_digraph(normalized)) == normalized);
    CHECK(parse_digraph(serialize_digraph(c3_fixture())) == c3_fixture());
    Digraph weighted = build_digraph(4, {{0, 1, make_rational(1, 3)}, {2, 3, 4}});
    CHECK(parse_digraph(serialize_digraph(weighted)) == weighted);
}

TEST_CASE("pattern text format forbids weights") {
    Pattern p = parse_pattern("3\n0 1\n1 2\n2 0\n");
    CHECK(p == directed_cycle(3));
    CHECK_THROWS_AS(parse_pattern("2\n0 1 2\n"), ValidationError);
    CHECK(parse_pattern(serialize_pattern(transitive_tournament(4))) ==
          transitive_tournament(4));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("2.5") == make_rational(5, 2));
    CHECK(parse_rational("5/2") == make_rational(5, 2));
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational(".25") == make_rational(1, 4));
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(rational_string(make_rational(25, 8)) == "25/8");
    CHECK(rational_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("undirected graphs") {
    UndirectedGraph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    UndirectedGraph m = perfect_matching(6);
    CHECK(m.edge_count() == 3);
    CHECK_THROWS_AS(perfect_matching(5), ValidationError);
    CHECK_THROWS_AS(UndirectedGraph(2, {{0, 0, 1}}), ValidationError);
    CHECK_THROWS_AS(UndirectedGraph(2, {{0, 1, 1}, {1, 0, 1}}, true), ValidationError);
    UndirectedGraph round = parse_undirected(serialize_undirected(k4));
    CHECK(round.edge_count() == 6);
}
