#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecc/graph.hpp"
#include "test_util.hpp"

using namespace ecc;

namespace {

// Independent construction of a coalescence: materialize each part as its
// own K_{a_i} and glue through an explicit vertex map. Oracle for the
// builder under test.
Graph coalescence_by_gluing(int k, const std::vector<int>& parts) {
    int order = k;
    for (int a : parts) order += a - k;
    Graph g(order);
    int offset = k;
    for (int a : parts) {
        std::vector<int> ids;
        for (int i = 0; i < k; ++i) ids.push_back(i);
        for (int i = 0; i < a - k; ++i) ids.push_back(offset + i);
        for (std::size_t x = 0; x < ids.size(); ++x)
            for (std::size_t y = x + 1; y < ids.size(); ++y)
                if (!g.adjacent(ids[x], ids[y])) g.add_edge(ids[x], ids[y]);
        offset += a - k;
    }
    return g;
}

}  // namespace

TEST_CASE("complete graphs") {
    Graph k1 = build_complete(1);
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k4 = build_complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(k4.adjacent(u, v));

    CHECK_THROWS_AS(build_complete(0), std::invalid_argument);
}

TEST_CASE("coalescence builder") {
    Graph g = build_coalescence({3, {6, 6}});
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 27);

    Graph bow = testing::bowtie();
    CHECK(bow.order() == 5);
    CHECK(bow.edge_count() == 6);

    Graph triple = build_coalescence({3, {6, 6, 6}});
    CHECK(triple.order() == 12);
    CHECK(triple.edge_count() == 39);
    CHECK(triple == coalescence_by_gluing(3, {6, 6, 6}));

    // each part induces a complete graph; no edges between private blocks
    CoalescenceSpec spec{3, {6, 6}};
    for (int u = 3; u < 6; ++u)
        for (int v = 6; v < 9; ++v) CHECK(!g.adjacent(u, v));

    CHECK_THROWS_AS(build_coalescence({6, {6, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(build_coalescence({1, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_coalescence({1, {3, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_coalescence({0, {3, 3}}), std::invalid_argument);
}

TEST_CASE("coalescence order and size closed forms") {
    for (int k = 1; k <= 4; ++k)
        for (int a1 = k + 1; a1 <= 7; ++a1)
            for (int a2 = k + 1; a2 <= 7; ++a2) {
                if (a1 < 3 || a2 < 3) continue;
                CoalescenceSpec spec{k, {a1, a2}};
                Graph g = build_coalescence(spec);
                CHECK(g.order() == spec.total_order());
                CHECK(g.edge_count() == spec.total_size());
                CHECK(g == coalescence_by_gluing(k, {a1, a2}));
            }
}

TEST_CASE("family builder") {
    CHECK(build_family({3, 2}).order() == 9);
    CHECK(build_family({4, 3}).order() == 16);
    CHECK(distances(build_family({3, 2})).diameter == 2);
    // diameter 2 across the family grid
    for (int n = 2; n <= 5; ++n)
        for (int l = 2; l <= 4; ++l) CHECK(distances(build_family({n, l})).diameter == 2);
    CHECK_THROWS_AS(build_family({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_family({3, 1}), std::invalid_argument);
}

TEST_CASE("friendship builder") {
    CHECK(build_friendship(1) == build_complete(3));
    Graph f4 = build_friendship(4);
    CHECK(f4.order() == 9);
    CHECK(f4.edge_count() == 12);
    CHECK(build_friendship(2) == testing::bowtie());
    CHECK_THROWS_AS(build_friendship(0), std::invalid_argument);
}

TEST_CASE("edge deletion") {
    Graph k2 = build_complete(2);
    Graph split = delete_edge(k2, EdgeRef(0, 1));
    CHECK(!is_connected(split));
    CHECK_THROWS_AS(delete_edge(k2, EdgeRef(0, 1), true), std::invalid_argument);

    Graph f4 = build_friendship(4);
    Graph f4d = delete_edge(f4, EdgeRef(7, 8));
    CHECK(is_connected(f4d));
    CHECK(f4d.edge_count() == 11);

    Graph g = build_family({3, 2});
    for (const EdgeRef& e : g.edges()) CHECK(is_connected(delete_edge(g, e)));

    CHECK_THROWS_AS(delete_edge(g, EdgeRef(3, 6)), std::invalid_argument);

    // deletion round trip
    Graph gd = delete_edge(g, EdgeRef(0, 1));
    gd.add_edge(0, 1);
    CHECK(gd == g);
}

TEST_CASE("distances and eccentricities") {
    DistanceInfo p3 = distances(testing::path3());
    CHECK(p3.ecc == std::vector<int>{2, 1, 2});
    CHECK(p3.diameter == 2);

    DistanceInfo fam = distances(build_family({3, 2}));
    for (int v = 0; v < 3; ++v) CHECK(fam.ecc[v] == 1);
    for (int v = 3; v < 9; ++v) CHECK(fam.ecc[v] == 2);

    DistanceInfo f4 = distances(build_friendship(4));
    CHECK(f4.ecc[0] == 1);
    for (int v = 1; v < 9; ++v) CHECK(f4.ecc[v] == 2);

    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_THROWS_AS(distances(two), std::invalid_argument);
}

TEST_CASE("distance matrix properties") {
    for (const auto& [name, g] : testing::corpus()) {
        CAPTURE(name);
        DistanceInfo info = distances(g);
        int n = g.order();
        for (int i = 0; i < n; ++i) {
            CHECK(info.dist[i][i] == 0);
            for (int j = 0; j < n; ++j) CHECK(info.dist[i][j] == info.dist[j][i]);
        }
        // triangle inequality on sampled triples
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int k = (i + j) % n;
                CHECK(info.dist[i][j] <= info.dist[i][k] + info.dist[k][j]);
            }
    }
}

TEST_CASE("edge classification") {
    CoalescenceSpec spec{3, {6, 6}};
    CHECK(classify_edge(spec, EdgeRef(0, 1)) == EdgeCase::CliqueInternal);
    CHECK(classify_edge(spec, EdgeRef(0, 3)) == EdgeCase::CliqueIncident);
    CHECK(classify_edge(spec, EdgeRef(3, 4)) == EdgeCase::CliqueExternal);
    CHECK_THROWS_AS(classify_edge(spec, EdgeRef(3, 6)), std::invalid_argument);

    // the three cases partition the edge set with the predicted counts
    for (int n = 2; n <= 4; ++n)
        for (int l = 2; l <= 4; ++l) {
            FamilySpec fs{n, l};
            CoalescenceSpec cs = fs.to_coalescence();
            Graph g = build_family(fs);
            int internal = 0, incident = 0, external = 0;
            for (const EdgeRef& e : g.edges()) {
                switch (classify_edge(cs, e)) {
                    case EdgeCase::CliqueInternal: ++internal; break;
                    case EdgeCase::CliqueIncident: ++incident; break;
                    case EdgeCase::CliqueExternal: ++external; break;
                }
            }
            CHECK(internal == n * (n - 1) / 2);
            CHECK(incident == l * n * n);
            CHECK(external == l * n * (n - 1) / 2);
            CHECK(internal + incident + external == g.edge_count());
        }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(build_complete(1)));
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(!is_connected(two));
    CHECK(is_connected(delete_edge(build_friendship(4), EdgeRef(7, 8))));
}

TEST_CASE("natural partition") {
    CoalescenceSpec spec{3, {6, 5}};
    auto cells = natural_partition(spec);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == std::vector<int>{0, 1, 2});
    CHECK(cells[1] == std::vector<int>{3, 4, 5});
    CHECK(cells[2] == std::vector<int>{6, 7});
}

TEST_CASE("graph text format") {
    Graph g = build_family({3, 2});
    Graph back = read_graph(write_graph(g));
    CHECK(back == g);

    std::string text = write_graph(g);
    CHECK(text.substr(0, 4) == "9 27");

    CHECK_THROWS_AS(read_graph("2 1\n1 0\n"), std::invalid_argument);   // u >= v
    CHECK_THROWS_AS(read_graph("2 1\n0 2\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(read_graph("3 2\n0 1\n0 1\n"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(read_graph("3 2\n0 1\n"), std::invalid_argument);   // truncated
    CHECK_THROWS_AS(read_graph(""), std::invalid_argument);
}
