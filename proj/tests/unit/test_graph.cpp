#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dpsq/errors.hpp"
#include "dpsq/generate.hpp"
#include "dpsq/graph.hpp"

using namespace dpsq;

TEST_CASE("build_graph validates input") {
    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), input_error);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), input_error);
    CHECK_THROWS_AS(build_graph(-1, {}), input_error);
    Graph g = build_graph(3, {{1, 0}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2); // duplicates collapse, orientation ignored
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("edges come out sorted with first < second") {
    Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
    auto es = g.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0] == Edge{0, 1});
    CHECK(es[1] == Edge{0, 2});
    CHECK(es[2] == Edge{2, 3});
    for (auto [u, v] : es) CHECK(u < v);
}

TEST_CASE("degree_stats and subcubic checks") {
    Graph k4 = generate("complete", {4}).g;
    auto st = degree_stats(k4);
    CHECK(st.min_degree == 3);
    CHECK(st.max_degree == 3);
    CHECK(st.is_subcubic);
    Graph k5 = generate("complete", {5}).g;
    CHECK(!is_subcubic(k5));
    CHECK_THROWS_AS(require_subcubic(k5, "test"), input_error);
    CHECK_NOTHROW(require_subcubic(k4, "test"));
}

TEST_CASE("bfs distances") {
    Graph p4 = generate("path", {4}).g;
    auto d = bfs_distances(p4, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3});
    Graph two = build_graph(3, {{0, 1}});
    auto d2 = bfs_distances(two, 0);
    CHECK(d2[2] == -1);
}

TEST_CASE("square of small graphs") {
    Graph c4 = generate("cycle", {4}).g;
    Graph sq = square(c4);
    CHECK(sq.edge_count() == 6); // K_4
    Graph c5 = generate("cycle", {5}).g;
    CHECK(square(c5).edge_count() == 10); // K_5
    Graph c6 = generate("cycle", {6}).g;
    Graph sq6 = square(c6);
    CHECK(sq6.edge_count() == 12);
    CHECK(!sq6.has_edge(0, 3)); // opposite vertices stay non-adjacent
    Graph p3 = generate("path", {3}).g;
    CHECK(square(p3).edge_count() == 3);
}

TEST_CASE("girth") {
    CHECK(girth(generate("cycle", {4}).g) == 4);
    CHECK(girth(generate("cycle", {7}).g) == 7);
    CHECK(girth(generate("complete", {4}).g) == 3);
    CHECK(girth(generate("petersen", {}).g) == 5);
    CHECK(!girth(generate("path", {5}).g).has_value());
    CHECK(girth(generate("theta", {2, 2, 2}).g) == 6);
    CHECK(girth(generate("theta", {0, 2, 2}).g) == 4);
}

TEST_CASE("components and connectivity") {
    Graph g = build_graph(5, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    CHECK(comps.size() == 3);
    CHECK(!is_connected(g));
    CHECK(is_connected(generate("petersen", {}).g));
    Graph empty;
    CHECK(is_connected(empty)); // vacuous
}

TEST_CASE("induced subgraph preserves order") {
    Graph c5 = generate("cycle", {5}).g;
    Graph sub = induced_subgraph(c5, {0, 1, 3});
    CHECK(sub.n == 3);
    CHECK(sub.edge_count() == 1); // only 0-1 survives
    CHECK(sub.has_edge(0, 1));
}

TEST_CASE("threads in a theta graph") {
    Graph theta = generate("theta", {2, 2, 2}).g;
    auto threads = find_threads(theta);
    REQUIRE(threads.size() == 3);
    for (const auto& t : threads) {
        CHECK(t.vertices.size() == 2);
        CHECK(!t.cyclic);
        CHECK(t.attach_front != t.attach_back);
        CHECK(t.longest);
    }
}

TEST_CASE("threads in a cycle are one cyclic thread") {
    Graph c5 = generate("cycle", {5}).g;
    auto threads = find_threads(c5);
    REQUIRE(threads.size() == 1);
    CHECK(threads[0].cyclic);
    CHECK(threads[0].vertices.size() == 5);
}

TEST_CASE("face thread attaches to the same 3-vertex on both ends") {
    Graph face = generate("face", {4}).g;
    auto threads = find_threads(face);
    REQUIRE(threads.size() == 1);
    CHECK(!threads[0].cyclic);
    CHECK(threads[0].vertices.size() == 3);
    CHECK(threads[0].attach_front == threads[0].attach_back);
}

TEST_CASE("every 2-vertex lies in exactly one thread") {
    for (auto spec : {std::vector<int>{1, 2, 3}, std::vector<int>{0, 1, 4}}) {
        Graph g = generate("theta", spec).g;
        auto threads = find_threads(g);
        std::set<int> seen;
        int two = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == 2) ++two;
        for (const auto& t : threads)
            for (int v : t.vertices) {
                CHECK(g.degree(v) == 2);
                CHECK(!seen.count(v));
                seen.insert(v);
            }
        CHECK((int)seen.size() == two);
    }
}

TEST_CASE("y_profile") {
    Graph y = generate("y", {2, 1, 3}).g;
    int center = -1;
    for (int v = 0; v < y.n; ++v)
        if (y.degree(v) == 3) center = v;
    REQUIRE(center >= 0);
    // boundary caps count as vertices of degree 1, ending the 2-vertex walk
    CHECK(y_profile(y, center) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(y_profile(y, (center + 1) % y.n), input_error);

    Graph theta = generate("theta", {1, 2, 3}).g;
    for (int v = 0; v < theta.n; ++v)
        if (theta.degree(v) == 3)
            CHECK(y_profile(theta, v) == std::vector<int>{1, 2, 3});
}

TEST_CASE("peel_extendable") {
    Graph c4 = generate("cycle", {4}).g;
    Graph k4 = square(c4);
    // capacity 5 everywhere strips K_4 completely
    PeelResult pr = peel_extendable(k4, std::vector<int>(4, 5));
    CHECK(pr.core.empty());
    CHECK(pr.removed.size() == 4);
    // capacity 3 strips nothing: every vertex keeps degree 3
    PeelResult pr3 = peel_extendable(k4, std::vector<int>(4, 3));
    CHECK(pr3.core.size() == 4);
    CHECK(pr3.removed.empty());
    // capacity 4 cascades: once one vertex goes, the rest follow
    PeelResult pr4 = peel_extendable(k4, std::vector<int>(4, 4));
    CHECK(pr4.core.empty());
}

TEST_CASE("theta square core survives at capacity 5") {
    Graph theta = generate("theta", {2, 2, 2}).g;
    Graph sq = square(theta);
    PeelResult pr = peel_extendable(sq, std::vector<int>(sq.n, 5));
    CHECK((int)pr.core.size() == sq.n); // nothing peels: min square degree is 5
    int mindeg = sq.n;
    for (int v = 0; v < sq.n; ++v) mindeg = std::min(mindeg, sq.degree(v));
    CHECK(mindeg == 5);
}
