#pragma once

#include "colornet/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <span>
#include <vector>

namespace colornet {

using Color = std::uint32_t;

/// Node colors (starting at 0) with the palette they were drawn from.
struct Coloring {
    std::vector<Color> colors;
    std::size_t palette_size = 0;
    bool proper = false;
};

/// Number of edges whose endpoints share a color. Throws InvalidColor if any
/// color is outside [0, palette_size) or the color vector has the wrong size.
std::size_t verify_coloring(const Graph& g, std::span<const Color> colors,
                            std::size_t palette_size);
inline std::size_t verify_coloring(const Graph& g, const Coloring& c) {
    return verify_coloring(g, c.colors, c.palette_size);
}

/// Degree-saturation greedy coloring. The next node has the most distinct
/// neighbor colors, then the highest degree, then the lowest id; it takes the
/// lowest color free among its neighbors. palette_size is the number of
/// colors used.
Coloring dsatur(const Graph& g);

struct HcConfig {
    std::size_t palette_size = 1;
    double pm = 0.0625;
    std::size_t max_evals = 2'000'000;
    std::uint64_t seed = 0;
};

struct HcRunRecord {
    std::uint64_t seed = 0;
    std::size_t palette_size = 0;
    bool success = false;
    std::size_t evals_used = 0;
    std::size_t final_conflicts = 0;
    std::vector<std::size_t> last_success_eval;  ///< per node, 0 = never mutated successfully
    std::vector<std::size_t> success_count;      ///< per node
};

struct HcResult {
    Coloring coloring;
    HcRunRecord record;
};

/// Random-mutation hill climbing on a fixed palette.
///
/// Starts from a uniformly random assignment. Each evaluation mutates k
/// distinct nodes, k uniform in [1, max(1, floor(pm*n))], to uniformly drawn
/// palette colors; the offspring replaces the parent when its conflict count
/// is no worse. Stops at zero conflicts or after max_evals offspring.
HcResult hill_climb(const Graph& g, const HcConfig& config);

/// `runs` independent climbs with seeds derived from base_seed, run on up to
/// `threads` workers. Results come back in run order.
std::vector<HcResult> hill_climb_batch(const Graph& g, HcConfig config, std::size_t runs,
                                       std::uint64_t base_seed, unsigned threads = 1);

struct LadderRung {
    std::size_t palette_size = 0;
    std::size_t successes = 0;
    std::size_t runs = 0;
    double rate() const { return runs ? static_cast<double>(successes) / static_cast<double>(runs) : 0.0; }
};

struct PaletteSearchOptions {
    std::size_t runs_per_c = 10;
    double target_rate = 0.925;
    std::size_t step = 2;
    std::size_t max_palette = 0;  ///< 0 means max degree + 1 over the graphs
    double pm = 0.0625;
    std::size_t max_evals = 2'000'000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct PaletteSearch {
    std::size_t palette_size = 0;  ///< first rung meeting target_rate (or the last rung tried)
    bool reached = false;
    std::vector<LadderRung> ladder;
    std::vector<HcResult> final_runs;  ///< runs at palette_size, graph-major order
};

/// Raise the palette from start_c in `step` increments until the hill
/// climber's success rate over runs_per_c runs on every graph reaches
/// target_rate.
PaletteSearch find_hc_palette(std::span<const Graph> graphs, std::size_t start_c,
                              const PaletteSearchOptions& options);
PaletteSearch find_hc_palette(const Graph& g, std::size_t start_c,
                              const PaletteSearchOptions& options);

struct ColorStats {
    double mean = 0.0;
    double sd = 0.0;  ///< population standard deviation
};

/// Color mean and spread over the k highest-degree nodes (ties: lowest id).
ColorStats top_k_color_stats(const Graph& g, std::span<const Color> colors, std::size_t k);

// Coloring file: one "node<TAB>color" line per node, in node order.
void write_coloring(std::ostream& out, std::span<const Color> colors);
/// Node ids must be 0..n-1, each exactly once. Throws ParseError.
std::vector<Color> read_coloring(std::istream& in);
std::vector<Color> read_coloring_file(const std::string& path);

} // namespace colornet
