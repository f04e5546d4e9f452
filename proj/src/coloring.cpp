#include "colornet/coloring.hpp"

#include "colornet/error.hpp"
#include "colornet/parallel.hpp"
#include "colornet/random.hpp"
#include "colornet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <numeric>
#include <set>
#include <tuple>

namespace colornet {

std::size_t verify_coloring(const Graph& g, std::span<const Color> colors,
                            std::size_t palette_size) {
    if (colors.size() != g.node_count()) {
        throw InvalidColor("coloring has " + std::to_string(colors.size()) + " entries for " +
                           std::to_string(g.node_count()) + " nodes");
    }
    for (NodeId v = 0; v < colors.size(); ++v) {
        if (colors[v] >= palette_size) {
            throw InvalidColor("node " + std::to_string(v) + " has color " +
                               std::to_string(colors[v]) + " outside a palette of " +
                               std::to_string(palette_size));
        }
    }
    std::size_t conflicts = 0;
    for (const Edge& e : g.edges()) {
        if (colors[e.u] == colors[e.v]) ++conflicts;
    }
    return conflicts;
}

Coloring dsatur(const Graph& g) {
    const std::size_t n = g.node_count();
    Coloring out;
    out.colors.assign(n, 0);
    if (n == 0) {
        out.proper = true;
        return out;
    }

    constexpr Color kUncolored = ~Color{0};
    std::vector<Color> color(n, kUncolored);
    std::vector<std::vector<Color>> seen(n);  // sorted distinct neighbor colors

    // Ordered so that begin() is the next node to color.
    using Key = std::tuple<std::size_t, std::size_t, NodeId>;  // -sat, -deg, id
    auto key = [&](NodeId v) {
        return Key{n - seen[v].size(), n - g.degree(v), v};
    };
    std::set<Key> queue;
    for (NodeId v = 0; v < n; ++v) queue.insert(key(v));

    std::size_t used = 0;
    while (!queue.empty()) {
        const NodeId v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());

        Color c = 0;
        for (Color s : seen[v]) {
            if (s != c) break;
            ++c;
        }
        color[v] = c;
        used = std::max<std::size_t>(used, c + 1);

        for (NodeId w : g.neighbors(v)) {
            if (color[w] != kUncolored) continue;
            auto& sw = seen[w];
            auto it = std::lower_bound(sw.begin(), sw.end(), c);
            if (it != sw.end() && *it == c) continue;
            queue.erase(key(w));
            sw.insert(it, c);
            queue.insert(key(w));
        }
    }
    out.colors = std::move(color);
    out.palette_size = used;
    out.proper = true;
    return out;
}

HcResult hill_climb(const Graph& g, const HcConfig& config) {
    if (config.palette_size < 1) throw InvalidColor("palette must hold at least one color");
    if (!(config.pm > 0.0 && config.pm <= 1.0)) throw InvalidColor("mutation rate must lie in (0,1]");

    const std::size_t n = g.node_count();
    Rng rng(config.seed);
    HcResult result;
    HcRunRecord& rec = result.record;
    rec.seed = config.seed;
    rec.palette_size = config.palette_size;
    rec.last_success_eval.assign(n, 0);
    rec.success_count.assign(n, 0);

    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(uniform_index(rng, config.palette_size));
    std::size_t conflicts = 0;
    for (const Edge& e : g.edges()) conflicts += colors[e.u] == colors[e.v];

    const std::size_t max_k = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(config.pm * static_cast<double>(n))));
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    struct Change {
        NodeId node;
        Color old_color;
    };
    std::vector<Change> changes;
    changes.reserve(max_k);

    std::size_t evals = 0;
    while (conflicts > 0 && evals < config.max_evals && n > 0) {
        ++evals;
        const std::size_t k = std::min(n, 1 + uniform_index(rng, max_k));
        std::ptrdiff_t delta = 0;
        changes.clear();
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(perm[i], perm[i + uniform_index(rng, n - i)]);
            const NodeId v = perm[i];
            const auto next = static_cast<Color>(uniform_index(rng, config.palette_size));
            const Color prev = colors[v];
            if (next == prev) continue;
            for (NodeId w : g.neighbors(v)) {
                const Color cw = colors[w];
                delta -= cw == prev;
                delta += cw == next;
            }
            colors[v] = next;
            changes.push_back({v, prev});
        }
        if (delta <= 0) {
            conflicts = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(conflicts) + delta);
            for (const Change& ch : changes) {
                rec.last_success_eval[ch.node] = evals;
                ++rec.success_count[ch.node];
            }
        } else {
            for (auto it = changes.rbegin(); it != changes.rend(); ++it) {
                colors[it->node] = it->old_color;
            }
        }
    }

    rec.success = conflicts == 0;
    rec.evals_used = evals;
    rec.final_conflicts = conflicts;
    result.coloring.colors = std::move(colors);
    result.coloring.palette_size = config.palette_size;
    result.coloring.proper = rec.success;
    return result;
}

std::vector<HcResult> hill_climb_batch(const Graph& g, HcConfig config, std::size_t runs,
                                       std::uint64_t base_seed, unsigned threads) {
    std::vector<HcResult> out(runs);
    parallel_for(runs, threads, [&](std::size_t r) {
        HcConfig cfg = config;
        cfg.seed = derive_seed(base_seed, {r});
        out[r] = hill_climb(g, cfg);
    });
    return out;
}

PaletteSearch find_hc_palette(std::span<const Graph> graphs, std::size_t start_c,
                              const PaletteSearchOptions& options) {
    if (options.runs_per_c < 1) throw InvalidColor("palette search needs at least one run per palette");
    std::size_t max_palette = options.max_palette;
    if (max_palette == 0) {
        for (const Graph& g : graphs) {
            for (NodeId v = 0; v < g.node_count(); ++v) {
                max_palette = std::max(max_palette, g.degree(v) + 1);
            }
        }
    }
    start_c = std::max<std::size_t>(1, start_c);
    max_palette = std::max(max_palette, start_c);
    const std::size_t step = std::max<std::size_t>(1, options.step);

    PaletteSearch search;
    for (std::size_t c = start_c;; c += step) {
        const std::size_t per_graph = options.runs_per_c;
        std::vector<HcResult> runs(graphs.size() * per_graph);
        parallel_for(runs.size(), options.threads, [&](std::size_t i) {
            const std::size_t gi = i / per_graph;
            const std::size_t r = i % per_graph;
            HcConfig cfg;
            cfg.palette_size = c;
            cfg.pm = options.pm;
            cfg.max_evals = options.max_evals;
            cfg.seed = derive_seed(options.seed, {gi, c, r});
            runs[i] = hill_climb(graphs[gi], cfg);
        });
        LadderRung rung{c, 0, runs.size()};
        for (const auto& r : runs) rung.successes += r.record.success;
        search.ladder.push_back(rung);
        search.palette_size = c;
        search.final_runs = std::move(runs);
        if (rung.rate() >= options.target_rate) {
            search.reached = true;
            break;
        }
        if (c + step > max_palette) break;
    }
    return search;
}

PaletteSearch find_hc_palette(const Graph& g, std::size_t start_c,
                              const PaletteSearchOptions& options) {
    return find_hc_palette(std::span<const Graph>(&g, 1), start_c, options);
}

ColorStats top_k_color_stats(const Graph& g, std::span<const Color> colors, std::size_t k) {
    if (colors.size() != g.node_count()) throw InvalidColor("coloring size does not match graph");
    const auto top = top_degree_nodes(degree_sequence(g), k);
    std::vector<double> xs;
    xs.reserve(top.size());
    for (NodeId v : top) xs.push_back(static_cast<double>(colors[v]));
    return {stats::mean(xs), stats::population_sd(xs)};
}

void write_coloring(std::ostream& out, std::span<const Color> colors) {
    for (std::size_t v = 0; v < colors.size(); ++v) out << v << '\t' << colors[v] << '\n';
}

std::vector<Color> read_coloring(std::istream& in) {
    std::vector<std::optional<Color>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        long long v = -1, c = -1;
        std::string rest;
        if (!(ss >> v >> c) || (ss >> rest) || v < 0 || c < 0 || c > 0xffffffffLL) {
            throw ParseError(lineno, "expected 'node<TAB>color', got '" + line + "'");
        }
        const auto node = static_cast<std::size_t>(v);
        if (node >= seen.size()) seen.resize(node + 1);
        if (seen[node]) throw ParseError(lineno, "node " + std::to_string(node) + " colored twice");
        seen[node] = static_cast<Color>(c);
    }
    std::vector<Color> colors(seen.size());
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v]) throw ParseError(lineno, "node " + std::to_string(v) + " has no color");
        colors[v] = *seen[v];
    }
    return colors;
}

std::vector<Color> read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open coloring: " + path);
    return read_coloring(in);
}

} // namespace colornet
