#include "oracles.hpp"

#include "colornet/error.hpp"
#include "colornet/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace colornet;

TEST_CASE("construction collapses duplicates and checks ids") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
    const Graph t = Graph::from_edges(3, tri);
    CHECK(t.node_count() == 3);
    CHECK(t.edge_count() == 3);

    const std::vector<Edge> dup{{0, 1}, {0, 1}, {1, 2}};
    CHECK(Graph::from_edges(4, dup).edge_count() == 2);
    const std::vector<Edge> flipped{{1, 0}, {0, 1}};
    CHECK(Graph::from_edges(2, flipped).edge_count() == 1);

    const std::vector<Edge> bad{{0, 2}};
    CHECK_THROWS_AS(Graph::from_edges(2, bad), InvalidNodeId);
}

TEST_CASE("self loops are filtered or rejected") {
    const std::vector<Edge> loop{{0, 0}, {0, 1}};
    CHECK(Graph::from_edges(2, loop).edge_count() == 1);
    CHECK_THROWS_AS(Graph::from_edges(2, loop, SelfLoopPolicy::Reject), SelfLoopRejected);
}

TEST_CASE("adjacency is symmetric and sorted") {
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
        const Graph g = oracle::random_graph(20, 0.3, seed);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (NodeId w : nb) {
                CHECK(g.has_edge(w, v));
                CHECK(w != v);
            }
        }
    }
}

TEST_CASE("degree sequences") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
    CHECK(degree_sequence(Graph::from_edges(3, tri)).degrees == std::vector<std::size_t>{2, 2, 2});
    CHECK(degree_sequence(oracle::star(3)).degrees == std::vector<std::size_t>{3, 1, 1, 1});
}

TEST_CASE("handshake lemma on random graphs") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 40;
        const Graph g = oracle::random_graph(n, 0.05 + (seed % 10) / 10.0, seed);
        CHECK(degree_sequence(g).total() == 2 * g.edge_count());
    }
}

TEST_CASE("edge order does not matter") {
    std::mt19937 rng(7);
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        auto edges = oracle::random_edges(25, 0.2, seed);
        const Graph a = Graph::from_edges(25, edges);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto& e : edges) {
            if (rng() % 2) std::swap(e.u, e.v);
        }
        const Graph b = Graph::from_edges(25, edges);
        CHECK(a == b);
        for (NodeId v = 0; v < 25; ++v) {
            CHECK(std::ranges::equal(a.neighbors(v), b.neighbors(v)));
        }
    }
}

TEST_CASE("degree summary uses sample deviation") {
    const DegreeSequence ds{{1, 2, 2, 3, 7}};
    const auto s = summarize_degrees(ds);
    CHECK(s.min == 1);
    CHECK(s.max == 7);
    CHECK(s.mean == doctest::Approx(3.0));
    // deviations -2,-1,-1,0,4: squares sum 22, over n-1 = 5.5
    CHECK(s.stdev == doctest::Approx(std::sqrt(5.5)));
    CHECK(s.mode == 2);
    CHECK(s.median == doctest::Approx(2.0));
}

TEST_CASE("top degree nodes break ties by id") {
    const DegreeSequence ds{{3, 5, 5, 1, 3}};
    CHECK(top_degree_nodes(ds, 3) == std::vector<NodeId>{1, 2, 0});
    CHECK(top_degree_nodes(ds, 10).size() == 5);
}

TEST_CASE("bfs distances") {
    CHECK(bfs_distances(oracle::path(3), 0) == std::vector<std::uint32_t>{0, 1, 2});

    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const auto d = bfs_distances(Graph::from_edges(4, two), 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(d[3] == kUnreachable);

    CHECK_THROWS_AS(bfs_distances(oracle::path(3), 3), InvalidNodeId);

    const Graph p = oracle::petersen();
    for (NodeId s = 0; s < 10; ++s) {
        const auto dist = bfs_distances(p, s);
        CHECK(*std::max_element(dist.begin(), dist.end()) == 2);
    }
}

TEST_CASE("bfs agrees with Floyd-Warshall") {
    for (std::uint32_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const Graph g = oracle::random_graph(n, 0.15 + (seed % 7) / 10.0, seed);
        const auto fw = oracle::floyd_warshall(g);
        for (NodeId s = 0; s < n; ++s) {
            const auto d = bfs_distances(g, s);
            for (NodeId t = 0; t < n; ++t) {
                if (fw[s][t] == oracle::kInf) CHECK(d[t] == kUnreachable);
                else CHECK(d[t] == fw[s][t]);
            }
        }
    }
}

TEST_CASE("connected components") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {2, 0}};
    CHECK(connected_components(Graph::from_edges(3, tri)).size() == 1);
    const auto c = connected_components(Graph::from_edges(4, tri));
    REQUIRE(c.size() == 2);
    CHECK(c[1] == std::vector<NodeId>{3});
    CHECK(connected_components(Graph::from_edges(5, std::vector<Edge>{})).size() == 5);
    CHECK(is_connected(oracle::petersen()));
}

TEST_CASE("components partition the nodes and match reachability") {
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        const Graph g = oracle::random_graph(15, 0.08, seed);
        const auto comps = connected_components(g);
        const auto fw = oracle::floyd_warshall(g);
        std::vector<int> owner(15, -1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (NodeId v : comps[i]) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(i);
            }
        }
        for (NodeId u = 0; u < 15; ++u)
            for (NodeId v = 0; v < 15; ++v) CHECK((owner[u] == owner[v]) == (fw[u][v] != oracle::kInf));
    }
}

TEST_CASE("edge list round trip") {
    const Graph g = oracle::random_graph(30, 0.2, 11);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(ss.str().rfind("# nodes=30\n", 0) == 0);
    CHECK(read_edge_list(ss) == g);

    std::istringstream isolated("# nodes=4\n0\t1\n");
    CHECK(read_edge_list(isolated).node_count() == 4);
}

TEST_CASE("malformed edge lists report the line") {
    std::istringstream in("# nodes=3\n0\t1\n1 x\n");
    try {
        read_edge_list(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream range("# nodes=2\n0\t5\n");
    CHECK_THROWS_AS(read_edge_list(range), InvalidNodeId);
}
