#include "oracles.hpp"

#include "colornet/error.hpp"
#include "colornet/generators.hpp"
#include "colornet/metrics.hpp"
#include "colornet/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace colornet;

namespace {

std::size_t hub_links(const Graph& g, const std::vector<NodeId>& hubs) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < hubs.size(); ++a)
        for (std::size_t b = a + 1; b < hubs.size(); ++b) count += g.has_edge(hubs[a], hubs[b]);
    return count;
}

// Connected random graph: a random tree plus G(n, p) extras.
Graph connected_random(std::size_t n, double p, std::uint32_t seed) {
    auto edges = oracle::random_edges(n, p, seed);
    std::mt19937 rng(seed + 1000);
    for (NodeId v = 1; v < n; ++v) edges.push_back({static_cast<NodeId>(rng() % v), v});
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("preferential attachment hits the link target") {
    const Graph g = preferential_attachment({1000, 4960, 15});
    CHECK(g.node_count() == 1000);
    CHECK(g.edge_count() == 4960);
    CHECK(is_connected(g));
    const auto s = summarize_degrees(degree_sequence(g));
    CHECK(s.mean == doctest::Approx(9.92));
    CHECK(s.min >= 3);
    CHECK(s.min <= 5);
    CHECK(s.max >= 80);
    CHECK(s.max <= 140);
    CHECK(static_cast<double>(s.max) > 5 * s.median);
}

TEST_CASE("preferential attachment with one link per node is a tree") {
    const Graph g = preferential_attachment({5, 4, 3});
    CHECK(g.edge_count() == 4);
    CHECK(is_connected(g));
}

TEST_CASE("preferential attachment is connected and deterministic for every seed") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph a = preferential_attachment({300, 1200, seed});
        CHECK(is_connected(a));
        CHECK(a.edge_count() == 1200);
        CHECK(a == preferential_attachment({300, 1200, seed}));
    }
    CHECK(preferential_attachment({300, 1200, 1}) != preferential_attachment({300, 1200, 2}));
}

TEST_CASE("preferential attachment rejects infeasible configs") {
    CHECK_THROWS_AS(preferential_attachment({1, 0, 0}), GeneratorInfeasible);
    CHECK_THROWS_AS(preferential_attachment({10, 100, 0}), GeneratorInfeasible);
    CHECK_THROWS_AS(preferential_attachment({10, 2, 0}), GeneratorInfeasible);
}

TEST_CASE("zero rewiring steps leave the graph unchanged") {
    const Graph g = preferential_attachment({200, 800, 4});
    RewireOptions opt;
    const auto r = assortativity_rewire(g, opt);
    CHECK(r.graph == g);
    CHECK_FALSE(r.changed());
}

TEST_CASE("rewiring preserves degrees over 10^4 swaps") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        const Graph g = connected_random(60 + seed * 5, 0.1, seed);
        for (auto dir : {MixingDirection::Assortative, MixingDirection::Disassortative}) {
            for (double ordered : {1.0, 0.5}) {
                RewireOptions opt;
                opt.direction = dir;
                opt.steps = 10'000;
                opt.seed = seed;
                opt.ordered_probability = ordered;
                const auto r = assortativity_rewire(g, opt);
                CHECK(degree_sequence(r.graph).degrees == degree_sequence(g).degrees);
                CHECK(r.graph.edge_count() == g.edge_count());
                CHECK(is_connected(r.graph));
            }
        }
    }
}

TEST_CASE("rewiring moves assortativity monotonically") {
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        const Graph g = connected_random(80, 0.08, seed);
        const double r0 = assortativity(g);
        for (auto dir : {MixingDirection::Assortative, MixingDirection::Disassortative}) {
            double prev = r0;
            for (std::size_t steps : {50, 200, 1000, 5000}) {
                RewireOptions opt;
                opt.direction = dir;
                opt.steps = steps;
                opt.seed = seed;
                opt.keep_connected = false;
                const double r = assortativity(assortativity_rewire(g, opt).graph);
                if (dir == MixingDirection::Assortative) CHECK(r >= prev - 1e-12);
                else CHECK(r <= prev + 1e-12);
                prev = r;
            }
            if (dir == MixingDirection::Assortative) CHECK(prev > r0);
            else CHECK(prev < r0);
        }
    }
}

TEST_CASE("saturated disassortative rewiring of a scale-free graph") {
    const Graph g = preferential_attachment({1000, 4960, 15});
    const auto r = saturate_mixing(g, MixingDirection::Disassortative, 1);
    const double a = assortativity(r.graph);
    CHECK(a <= -0.2);
    CHECK(a >= -0.45);
    CHECK(is_connected(r.graph));
}

TEST_CASE("rewired variants order their assortativity") {
    const Graph g = preferential_attachment({1000, 4960, 16});
    RewireOptions opt;
    opt.steps = 15 * g.edge_count();
    opt.direction = MixingDirection::Assortative;
    const double ra = assortativity(assortativity_rewire(g, opt).graph);
    opt.direction = MixingDirection::Disassortative;
    const double rd = assortativity(assortativity_rewire(g, opt).graph);
    const double rn = assortativity(g);
    CHECK(ra > rn);
    CHECK(rn > rd);
}

TEST_CASE("Erdos-Gallai") {
    CHECK(is_graphical({{2, 2, 2}}));
    CHECK(is_graphical({{3, 1, 1, 1}}));
    CHECK_FALSE(is_graphical({{3, 3, 1, 1}}));
    CHECK_FALSE(is_graphical({{1, 1, 1}}));
    CHECK_FALSE(is_graphical({{4, 1, 1, 1}}));
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
        CHECK(is_graphical(degree_sequence(oracle::random_graph(12, 0.4, seed))));
    }
}

TEST_CASE("clustered construction of a triangle") {
    ClusteredConfig cfg;
    cfg.hub_fraction = 0.34;
    const auto r = clustered_from_degree_list({{2, 2, 2}}, cfg);
    CHECK(r.graph.edge_count() == 3);
    CHECK(clustering_coefficient(r.graph) == doctest::Approx(1.0));
    CHECK_THROWS_AS(clustered_from_degree_list({{3, 3, 1, 1}}, cfg), DegreeSequenceInfeasible);
}

TEST_CASE("clustered construction keeps the degree list and hub control") {
    const auto ds = degree_sequence(preferential_attachment({1000, 4960, 15}));
    const Graph baseline = clustered_from_degree_list(ds, ClusteredConfig{.seed = 3}).graph;

    // Clustering of a degree-preserving random version of the same list.
    RewireOptions shuffle;
    shuffle.steps = 20 * baseline.edge_count();
    shuffle.ordered_probability = 0.0;
    shuffle.seed = 9;
    const double random_cc = clustering_coefficient(assortativity_rewire(baseline, shuffle).graph);

    const auto hubs = top_degree_nodes(ds, 50);
    std::size_t previous = 0;
    for (double p : {0.0, 0.25, 0.75}) {
        ClusteredConfig cfg;
        cfg.p_hub = p;
        cfg.seed = 3;
        const auto r = clustered_from_degree_list(ds, cfg);
        CHECK(r.residual_stubs == 0);
        CHECK(degree_sequence(r.graph).degrees == ds.degrees);
        const double cc = clustering_coefficient(r.graph);
        CHECK(cc > random_cc);
        CHECK(cc >= 0.15);
        CHECK(cc <= 0.35);
        const std::size_t links = hub_links(r.graph, hubs);
        if (p == 0.0) CHECK(links == 0);
        else CHECK(links > previous);
        // At most p of all hub pairs, and close to it when degrees allow.
        CHECK(static_cast<double>(links) <= p * 1225 + 40);
        CHECK(static_cast<double>(links) >= 0.8 * p * 1225);
        previous = links;
    }
    CHECK(degree_sequence(baseline).degrees == ds.degrees);
}

TEST_CASE("clustered construction is deterministic") {
    const auto ds = degree_sequence(preferential_attachment({300, 1200, 5}));
    ClusteredConfig cfg;
    cfg.p_hub = 0.25;
    cfg.seed = 8;
    CHECK(clustered_from_degree_list(ds, cfg).graph == clustered_from_degree_list(ds, cfg).graph);
}

TEST_CASE("noise rewiring replaces the requested share of links") {
    const Graph g = preferential_attachment({500, 2000, 2});
    CHECK(noise_rewire(g, 0.0, 1) == g);
    for (double pr : {0.02, 0.04, 0.10, 0.5}) {
        const Graph h = noise_rewire(g, pr, 7);
        CHECK(h.edge_count() == g.edge_count());
        std::size_t kept = 0;
        for (const Edge& e : h.edges()) kept += g.has_edge(e.u, e.v);
        const auto replaced = static_cast<std::size_t>(std::llround(pr * 2000));
        CHECK(g.edge_count() - kept == replaced);
    }
}

TEST_CASE("noise rewiring keeps one endpoint of each replaced link") {
    const Graph g = preferential_attachment({200, 800, 12});
    const Graph h = noise_rewire(g, 0.1, 5);
    std::multiset<NodeId> lost, gained;
    for (const Edge& e : g.edges()) {
        if (!h.has_edge(e.u, e.v)) {
            lost.insert(e.u);
            lost.insert(e.v);
        }
    }
    for (const Edge& e : h.edges()) {
        if (!g.has_edge(e.u, e.v)) {
            gained.insert(e.u);
            gained.insert(e.v);
        }
    }
    // Each replaced link shares at least one endpoint with its replacement,
    // so the total degree change is at most one unit per replaced link.
    std::size_t moved = 0;
    for (NodeId v = 0; v < 200; ++v) {
        const auto d = static_cast<long>(h.degree(v)) - static_cast<long>(g.degree(v));
        moved += static_cast<std::size_t>(d > 0 ? d : 0);
    }
    CHECK(moved <= 80);
    CHECK(gained.size() == lost.size());
}

TEST_CASE("noise rewiring fails on a complete graph") {
    CHECK_THROWS_AS(noise_rewire(oracle::clique(6), 0.2, 1), RewireExhausted);
}

TEST_CASE("noise levels are cumulative") {
    const Graph g = preferential_attachment({400, 1600, 21});
    const Graph l2 = noise_to_level(g, 0.02, 4);
    const Graph l4 = noise_to_level(g, 0.04, 4);
    const Graph l10 = noise_to_level(g, 0.10, 4);
    CHECK(l2 == noise_rewire(g, 0.02, derive_seed(4, {0})));
    CHECK(l4 == noise_rewire(l2, 0.02, derive_seed(4, {1})));
    CHECK(l10 == noise_rewire(l4, 0.06, derive_seed(4, {2})));
    CHECK(noise_to_level(g, 0.0, 4) == g);
}
