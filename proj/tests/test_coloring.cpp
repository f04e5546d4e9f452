#include "oracles.hpp"

#include "colornet/coloring.hpp"
#include "colornet/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <limits>
#include <random>
#include <set>
#include <sstream>

using namespace colornet;

namespace {

std::vector<Color> random_colors(std::size_t n, std::size_t c, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Color> out(n);
    for (auto& x : out) x = static_cast<Color>(rng() % c);
    return out;
}

} // namespace

TEST_CASE("verify_coloring counts monochromatic edges") {
    const Graph tri = oracle::clique(3);
    CHECK(verify_coloring(tri, std::vector<Color>{0, 1, 2}, 3) == 0);
    CHECK(verify_coloring(tri, std::vector<Color>{0, 0, 1}, 3) == 1);
    CHECK_THROWS_AS(verify_coloring(tri, std::vector<Color>{0, 1, 3}, 3), InvalidColor);
    CHECK_THROWS_AS(verify_coloring(tri, std::vector<Color>{0, 1}, 3), InvalidColor);
}

TEST_CASE("verify_coloring matches a full recount") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        const Graph g = oracle::random_graph(5 + seed % 30, 0.2, seed);
        const auto colors = random_colors(g.node_count(), 1 + seed % 5, seed * 3);
        CHECK(verify_coloring(g, colors, 1 + seed % 5) == oracle::conflicts(g, colors));
    }
}

TEST_CASE("dsatur is proper on random graphs") {
    for (std::uint32_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 1 + seed % 64;
        const Graph g = oracle::random_graph(n, 0.05 + (seed % 9) / 10.0, seed);
        const Coloring c = dsatur(g);
        CHECK(c.proper);
        CHECK(verify_coloring(g, c) == 0);
        const auto used = std::set<Color>(c.colors.begin(), c.colors.end()).size();
        CHECK(used == c.palette_size);
    }
}

TEST_CASE("dsatur is exact on cliques, cycles and bipartite graphs") {
    for (std::size_t n = 1; n <= 9; ++n) {
        const Graph k = oracle::clique(n);
        CHECK(dsatur(k).palette_size == oracle::chromatic_number(k));
        CHECK(dsatur(k).palette_size == n);
    }
    for (std::size_t n = 3; n <= 9; ++n) {
        const Graph c = oracle::cycle(n);
        CHECK(dsatur(c).palette_size == oracle::chromatic_number(c));
    }
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = 1; a + b <= 9; ++b) {
            const Graph g = oracle::complete_bipartite(a, b);
            CHECK(dsatur(g).palette_size == 2);
            CHECK(oracle::chromatic_number(g) == 2);
        }
    }
    for (std::size_t n = 2; n <= 9; ++n) CHECK(dsatur(oracle::path(n)).palette_size == 2);
}

TEST_CASE("dsatur never beats the chromatic number") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        const Graph g = oracle::random_graph(1 + seed % 9, 0.2 + (seed % 7) / 10.0, seed);
        CHECK(dsatur(g).palette_size >= oracle::chromatic_number(g));
    }
}

TEST_CASE("dsatur starts from a highest-degree node with color 0") {
    const Graph s = oracle::star(4);
    const Coloring c = dsatur(s);
    CHECK(c.colors == std::vector<Color>{0, 1, 1, 1, 1});

    // Two hubs of equal degree: the lower id goes first and keeps color 0.
    const std::vector<Edge> e{{1, 0}, {1, 2}, {1, 3}, {4, 0}, {4, 2}, {4, 3}};
    const Coloring d = dsatur(Graph::from_edges(5, e));
    CHECK(d.colors[1] == 0);
    CHECK(d.colors[4] == 0);
    CHECK(d.palette_size == 2);
}

TEST_CASE("dsatur breaks saturation ties by degree, then by id") {
    // Path 0-1-2-3 with a leaf 4 on node 2.
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
    const Coloring c = dsatur(Graph::from_edges(5, e));
    CHECK(c.colors == std::vector<Color>{0, 1, 0, 1, 1});
}

TEST_CASE("relabeling a proper coloring keeps it proper") {
    std::mt19937 rng(3);
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        const Graph g = oracle::random_graph(30, 0.2, seed);
        const Coloring c = dsatur(g);
        std::vector<Color> perm(c.palette_size);
        std::iota(perm.begin(), perm.end(), Color{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Color> relabeled(c.colors.size());
        for (std::size_t v = 0; v < relabeled.size(); ++v) relabeled[v] = perm[c.colors[v]];
        CHECK(verify_coloring(g, relabeled, c.palette_size) == 0);
    }
}

TEST_CASE("hill climbing cannot 3-color K4") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = hill_climb(oracle::clique(4), {3, 0.0625, 20'000, seed});
        CHECK_FALSE(r.record.success);
        CHECK(r.record.evals_used == 20'000);
        CHECK(r.record.final_conflicts >= 1);
    }
}

TEST_CASE("hill climbing 2-colors C4") {
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        successes += hill_climb(oracle::cycle(4), {2, 0.0625, 2'000'000, seed}).record.success;
    }
    CHECK(successes >= 99);
}

TEST_CASE("hill climbing is deterministic per seed") {
    const Graph g = oracle::random_graph(60, 0.1, 4);
    const HcConfig cfg{4, 0.0625, 50'000, 77};
    const auto a = hill_climb(g, cfg);
    const auto b = hill_climb(g, cfg);
    CHECK(a.coloring.colors == b.coloring.colors);
    CHECK(a.record.evals_used == b.record.evals_used);
    CHECK(a.record.final_conflicts == b.record.final_conflicts);
    CHECK(a.record.last_success_eval == b.record.last_success_eval);
    CHECK(a.record.success_count == b.record.success_count);
}

TEST_CASE("hill climbing tracks conflicts exactly and never worsens") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_graph(80, 0.15, seed);
        std::size_t previous = std::numeric_limits<std::size_t>::max();
        for (std::size_t evals : {0, 10, 100, 1000, 5000}) {
            const auto r = hill_climb(g, {3, 0.0625, evals, seed});
            CHECK(r.record.final_conflicts == oracle::conflicts(g, r.coloring.colors));
            CHECK(r.record.final_conflicts <= previous);
            CHECK(r.coloring.proper == (r.record.final_conflicts == 0));
            previous = r.record.final_conflicts;
        }
    }
}

TEST_CASE("hill climbing success bookkeeping") {
    const Graph g = oracle::random_graph(40, 0.1, 9);
    const auto r = hill_climb(g, {6, 0.0625, 200'000, 1});
    REQUIRE(r.record.success);
    CHECK(r.record.last_success_eval.size() == 40);
    for (std::size_t v = 0; v < 40; ++v) {
        CHECK(r.record.last_success_eval[v] <= r.record.evals_used);
        CHECK((r.record.success_count[v] == 0) == (r.record.last_success_eval[v] == 0));
    }
}

TEST_CASE("hill climbing rejects bad configs") {
    CHECK_THROWS_AS(hill_climb(oracle::path(3), {0, 0.0625, 10, 0}), InvalidColor);
    CHECK_THROWS_AS(hill_climb(oracle::path(3), {2, 0.0, 10, 0}), InvalidColor);
}

TEST_CASE("batches derive one seed per run") {
    const Graph g = oracle::random_graph(30, 0.2, 1);
    const auto serial = hill_climb_batch(g, {4, 0.0625, 20'000, 0}, 6, 99, 1);
    const auto threaded = hill_climb_batch(g, {4, 0.0625, 20'000, 0}, 6, 99, 3);
    REQUIRE(serial.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(serial[i].coloring.colors == threaded[i].coloring.colors);
        CHECK(serial[i].record.seed == threaded[i].record.seed);
    }
    CHECK(serial[0].record.seed != serial[1].record.seed);
}

TEST_CASE("palette ladder") {
    PaletteSearchOptions opt;
    opt.max_evals = 100'000;
    const auto c6 = find_hc_palette(oracle::cycle(6), 2, opt);
    CHECK(c6.palette_size == 2);
    CHECK(c6.reached);
    REQUIRE(c6.ladder.size() == 1);
    CHECK(c6.ladder[0].successes == 10);

    opt.max_evals = 2'000;
    // The default cap is max degree + 1 = 5, so the ladder stops at 4.
    const auto capped = find_hc_palette(oracle::clique(5), 2, opt);
    CHECK_FALSE(capped.reached);
    CHECK(capped.palette_size == 4);
    REQUIRE(capped.ladder.size() == 2);
    CHECK(capped.ladder[1].successes == 0);

    opt.max_palette = 6;
    const auto k5 = find_hc_palette(oracle::clique(5), 2, opt);
    CHECK(k5.palette_size == 6);
    CHECK(k5.reached);
    REQUIRE(k5.ladder.size() == 3);
    CHECK(k5.ladder[0].palette_size == 2);
    CHECK(k5.ladder[1].palette_size == 4);
    CHECK(k5.final_runs.size() == 10);
}

TEST_CASE("top-k color stats") {
    const Graph s = oracle::star(3);
    CHECK(top_k_color_stats(s, std::vector<Color>{0, 0, 0, 0}, 3).mean == 0.0);
    CHECK(top_k_color_stats(s, std::vector<Color>{0, 0, 0, 0}, 3).sd == 0.0);
    const auto two = top_k_color_stats(oracle::path(2), std::vector<Color>{0, 1}, 2);
    CHECK(two.mean == doctest::Approx(0.5));
    CHECK(two.sd == doctest::Approx(0.5));
    // Hub first, then the lowest-id leaves.
    const auto top = top_k_color_stats(s, std::vector<Color>{4, 0, 2, 9}, 2);
    CHECK(top.mean == doctest::Approx(2.0));
}

TEST_CASE("coloring files") {
    std::stringstream ss;
    write_coloring(ss, std::vector<Color>{2, 0, 1});
    CHECK(ss.str() == "0\t2\n1\t0\n2\t1\n");
    CHECK(read_coloring(ss) == std::vector<Color>{2, 0, 1});
    std::istringstream gap("0\t1\n2\t0\n");
    CHECK_THROWS_AS(read_coloring(gap), ParseError);
    std::istringstream twice("0\t1\n0\t0\n");
    CHECK_THROWS_AS(read_coloring(twice), ParseError);
}
