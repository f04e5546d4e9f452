#include "colornet/generators.hpp"

#include "colornet/error.hpp"
#include "colornet/random.hpp"
#include "edge_store.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace colornet {

using detail::EdgeStore;

Graph preferential_attachment(const PreferentialAttachmentConfig& config) {
    const std::size_t n = config.n;
    if (n < 2) throw GeneratorInfeasible("preferential attachment needs n >= 2");
    const auto m = static_cast<std::size_t>(
        std::llround(static_cast<double>(config.m_target) / static_cast<double>(n)));
    if (m < 1 || m + 1 > n) {
        throw GeneratorInfeasible("per-step attachment count round(m/n) = " + std::to_string(m) +
                                  " is infeasible for n = " + std::to_string(n));
    }
    if (config.m_target > n * (n - 1) / 2 || config.m_target < n - 1) {
        throw GeneratorInfeasible("link target " + std::to_string(config.m_target) +
                                  " cannot give a connected simple graph on " +
                                  std::to_string(n) + " nodes");
    }

    Rng rng(config.seed);
    EdgeStore store(n);
    std::vector<NodeId> endpoints;  // node v appears deg(v) times
    endpoints.reserve(2 * (m * n + m * m));
    for (NodeId u = 0; u <= m; ++u) {
        for (NodeId v = u + 1; v <= m; ++v) {
            store.add(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<NodeId> chosen;
    for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            const NodeId t = endpoints[uniform_index(rng, endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            store.add(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }

    // Trim to the exact link target without disconnecting anything.
    std::size_t guard = 0;
    while (store.edge_count() > config.m_target) {
        if (++guard > 1000 * (store.edge_count() + 1)) {
            throw GeneratorInfeasible("could not trim to link target while staying connected");
        }
        const std::size_t i = uniform_index(rng, store.edge_count());
        const Edge e = store.edge(i);
        if (store.degree(e.u) < 2 || store.degree(e.v) < 2) continue;
        store.remove_at(i);
        if (!store.connected()) store.add(e.u, e.v);
    }
    while (store.edge_count() < config.m_target) {
        const auto u = static_cast<NodeId>(uniform_index(rng, n));
        const auto v = static_cast<NodeId>(uniform_index(rng, n));
        if (u != v && !store.has(u, v)) store.add(u, v);
    }
    return store.to_graph();
}

namespace {

// Endpoints ranked by degree, highest first; ties by node id.
std::array<NodeId, 4> rank_endpoints(std::array<NodeId, 4> xs,
                                     const std::vector<std::size_t>& degree) {
    std::sort(xs.begin(), xs.end(), [&](NodeId a, NodeId b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });
    return xs;
}

bool same_pair(const Edge& a, NodeId x, NodeId y) {
    return (a.u == x && a.v == y) || (a.u == y && a.v == x);
}

} // namespace

RewireResult assortativity_rewire(const Graph& g, const RewireOptions& options) {
    RewireResult result;
    if (g.edge_count() < 2 || options.steps == 0) {
        result.graph = g;
        return result;
    }
    Rng rng(options.seed);
    EdgeStore store(g);
    const auto degree = degree_sequence(g).degrees;
    const std::size_t m = store.edge_count();
    const std::size_t interval = std::max<std::size_t>(1, options.check_interval);
    const std::size_t window =
        options.saturation_window ? options.saturation_window : 10 * m;

    struct Undo {
        std::size_t i, j;
        Edge old_i, old_j;
    };
    std::vector<Undo> batch;
    batch.reserve(interval);

    auto settle_batch = [&] {
        if (batch.empty()) return;
        if (options.keep_connected && !store.connected()) {
            for (auto it = batch.rbegin(); it != batch.rend(); ++it) {
                store.replace(it->j, it->old_j);
                store.replace(it->i, it->old_i);
            }
            result.rolled_back += batch.size();
        } else {
            result.accepted += batch.size();
        }
        batch.clear();
    };

    std::size_t window_attempts = 0;
    std::size_t window_swaps = 0;
    for (std::size_t step = 0; step < options.steps; ++step) {
        ++result.attempted;
        if (options.saturation_rate > 0.0 && ++window_attempts >= window) {
            const double rate =
                static_cast<double>(window_swaps) / static_cast<double>(window_attempts);
            if (rate < options.saturation_rate) break;
            window_attempts = 0;
            window_swaps = 0;
        }
        const std::size_t i = uniform_index(rng, m);
        const std::size_t j = uniform_index(rng, m);
        if (i == j) continue;
        const Edge a = store.edge(i);
        const Edge b = store.edge(j);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;

        const bool ordered = options.ordered_probability >= 1.0 ||
                             uniform01(rng) < options.ordered_probability;
        const auto x = rank_endpoints({a.u, a.v, b.u, b.v}, degree);
        Edge first, second;
        if (!ordered) {
            // Random re-pairing: one of the two alternatives to the current pairing.
            if (uniform_index(rng, 2) == 0) {
                first = {a.u, b.u};
                second = {a.v, b.v};
            } else {
                first = {a.u, b.v};
                second = {a.v, b.u};
            }
        } else if (options.direction == MixingDirection::Assortative) {
            first = {x[0], x[1]};
            second = {x[2], x[3]};
        } else {
            first = {x[0], x[3]};
            second = {x[1], x[2]};
        }
        if (same_pair(a, first.u, first.v) || same_pair(b, first.u, first.v)) continue;
        if (ordered) {
            // Ordered swaps must strictly move the degree-product sum; swaps
            // among equal degrees change nothing measurable and are skipped.
            const auto before = degree[a.u] * degree[a.v] + degree[b.u] * degree[b.v];
            const auto after = degree[first.u] * degree[first.v] + degree[second.u] * degree[second.v];
            const bool improves = options.direction == MixingDirection::Assortative ? after > before
                                                                                    : after < before;
            if (!improves) continue;
        }
        if (store.has(first.u, first.v) || store.has(second.u, second.v)) continue;

        store.replace(i, first);
        store.replace(j, second);
        batch.push_back({i, j, a, b});
        ++window_swaps;
        if (batch.size() == interval) settle_batch();
    }
    settle_batch();
    result.graph = store.to_graph();
    return result;
}

RewireResult saturate_mixing(const Graph& g, MixingDirection direction, std::uint64_t seed,
                             std::size_t max_attempts) {
    RewireOptions options;
    options.direction = direction;
    options.seed = seed;
    options.steps = max_attempts ? max_attempts : 1000 * std::max<std::size_t>(1, g.edge_count());
    options.saturation_rate = 0.001;
    return assortativity_rewire(g, options);
}

bool is_graphical(const DegreeSequence& ds) {
    std::vector<std::size_t> d = ds.degrees;
    const std::size_t n = d.size();
    std::size_t total = 0;
    for (auto x : d) {
        if (n > 0 && x > n - 1) return false;
        total += x;
    }
    if (total % 2 != 0) return false;
    std::sort(d.begin(), d.end(), std::greater<>());
    // Erdős–Gallai: for every k, sum of the k largest <= k(k-1) + sum min(d_i, k).
    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t rhs = k * (k - 1);
        for (std::size_t i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (prefix[k] > rhs) return false;
    }
    return true;
}

namespace {

// Pool of free stubs; node v is drawn with probability proportional to its
// remaining stub count. Uses lazy deletion with periodic compaction.
class StubPool {
public:
    explicit StubPool(const std::vector<std::size_t>& remaining) : remaining_(remaining) {
        rebuild();
    }

    std::size_t free_stubs() const { return free_; }
    std::size_t remaining(NodeId v) const { return remaining_[v]; }

    NodeId draw(Rng& rng) {
        if (2 * free_ < entries_.size()) rebuild();
        for (;;) {
            const std::size_t pos = uniform_index(rng, entries_.size());
            const NodeId v = entries_[pos];
            if (remaining_[v] == 0) continue;
            // Entries of v may outnumber its remaining stubs; thin them.
            if (uniform_index(rng, entry_count_[v]) < remaining_[v]) return v;
        }
    }

    void consume(NodeId v) {
        --remaining_[v];
        --free_;
    }

    void drop_all(NodeId v) {
        free_ -= remaining_[v];
        remaining_[v] = 0;
    }

    std::vector<NodeId> nodes_with_stubs() const {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < remaining_.size(); ++v) {
            if (remaining_[v] > 0) out.push_back(v);
        }
        return out;
    }

private:
    void rebuild() {
        entries_.clear();
        entry_count_.assign(remaining_.size(), 0);
        free_ = 0;
        for (NodeId v = 0; v < remaining_.size(); ++v) {
            for (std::size_t k = 0; k < remaining_[v]; ++k) entries_.push_back(v);
            entry_count_[v] = remaining_[v];
            free_ += remaining_[v];
        }
    }

    std::vector<std::size_t> remaining_;
    std::vector<NodeId> entries_;
    std::vector<std::size_t> entry_count_;
    std::size_t free_ = 0;
};


} // namespace

ClusteredResult clustered_from_degree_list(const DegreeSequence& degrees,
                                           const ClusteredConfig& config) {
    const std::size_t n = degrees.size();
    if (!is_graphical(degrees)) {
        throw DegreeSequenceInfeasible("degree sequence is not graphical");
    }
    if (config.p_hub && (*config.p_hub < 0.0 || *config.p_hub > 1.0)) {
        throw GeneratorInfeasible("hub link probability must lie in [0,1]");
    }
    const auto hub_count =
        static_cast<std::size_t>(std::ceil(config.hub_fraction * static_cast<double>(n) - 1e-9));
    if (n > 0 && hub_count < 1) throw GeneratorInfeasible("hub fraction selects no nodes");

    ClusteredResult result;
    result.hubs = top_degree_nodes(degrees, hub_count);
    std::vector<char> is_hub(n, 0);
    for (NodeId h : result.hubs) is_hub[h] = 1;
    const bool hubs_closed = config.p_hub.has_value();

    Rng rng(config.seed);
    EdgeStore store(n);
    std::vector<std::size_t> remaining = degrees.degrees;

    if (hubs_closed) {
        std::vector<Edge> pairs;
        for (std::size_t a = 0; a < result.hubs.size(); ++a) {
            for (std::size_t b = a + 1; b < result.hubs.size(); ++b) {
                pairs.push_back({result.hubs[a], result.hubs[b]});
            }
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (const Edge& e : pairs) {
            // One draw per pair regardless of outcome keeps the random stream
            // aligned across p_hub values.
            const double u = uniform01(rng);
            if (u < *config.p_hub && remaining[e.u] > 0 && remaining[e.v] > 0) {
                store.add(e.u, e.v);
                --remaining[e.u];
                --remaining[e.v];
            }
        }
    }

    auto allowed = [&](NodeId u, NodeId w) {
        return u != w && !store.has(u, w) && !(hubs_closed && is_hub[u] && is_hub[w]);
    };

    StubPool pool(remaining);
    std::vector<std::size_t> residual(n, 0);
    constexpr int kTries = 32;
    while (pool.free_stubs() > 0) {
        const NodeId u = pool.draw(rng);
        std::optional<NodeId> partner;
        const auto& nbrs = store.neighbors(u);
        if (!nbrs.empty() && uniform01(rng) < config.closure_probability) {
            for (int t = 0; t < kTries && !partner; ++t) {
                const NodeId x = nbrs[uniform_index(rng, nbrs.size())];
                const auto& second = store.neighbors(x);
                const NodeId w = second[uniform_index(rng, second.size())];
                if (pool.remaining(w) > 0 && allowed(u, w)) partner = w;
            }
        }
        for (int t = 0; t < kTries && !partner; ++t) {
            const NodeId w = pool.draw(rng);
            if (allowed(u, w)) partner = w;
        }
        if (!partner) {
            std::vector<NodeId> options;
            for (NodeId w : pool.nodes_with_stubs()) {
                if (allowed(u, w)) options.push_back(w);
            }
            if (!options.empty()) partner = options[uniform_index(rng, options.size())];
        }
        if (!partner) {
            residual[u] += pool.remaining(u);
            pool.drop_all(u);
            continue;
        }
        store.add(u, *partner);
        pool.consume(u);
        pool.consume(*partner);
    }

    // Repair: split an existing edge (x,y) into (u,x),(v,y); u == v is allowed
    // when u still needs two stubs. Degrees of x and y are unchanged.
    constexpr std::size_t kRepairTries = 20000;
    for (NodeId u = 0; u < n; ++u) {
        std::size_t tries = 0;
        while (residual[u] > 0 && tries < kRepairTries && store.edge_count() > 0) {
            std::optional<NodeId> other;
            if (residual[u] >= 2) {
                other = u;
            } else {
                for (NodeId v = u + 1; v < n; ++v) {
                    if (residual[v] > 0) {
                        other = v;
                        break;
                    }
                }
            }
            if (!other) break;
            const NodeId v = *other;
            for (; tries < kRepairTries; ++tries) {
                const std::size_t i = uniform_index(rng, store.edge_count());
                Edge e = store.edge(i);
                if (uniform_index(rng, 2) == 1) std::swap(e.u, e.v);
                if (e.u == u || e.v == u || e.u == v || e.v == v) continue;
                if (!allowed(u, e.u) || !allowed(v, e.v)) continue;
                if (u == v && e.u == e.v) continue;
                store.remove_at(i);
                store.add(u, e.u);
                store.add(v, e.v);
                --residual[u];
                --residual[v];
                break;
            }
        }
    }
    for (auto r : residual) result.residual_stubs += r;
    result.graph = store.to_graph();
    return result;
}

Graph noise_rewire(const Graph& g, double pr, std::uint64_t seed) {
    if (!(pr >= 0.0 && pr <= 1.0)) throw GeneratorInfeasible("rewire fraction must lie in [0,1]");
    const std::size_t m = g.edge_count();
    const auto k = static_cast<std::size_t>(std::llround(pr * static_cast<double>(m)));
    if (k == 0) return g;

    Rng rng(seed);
    EdgeStore store(g);
    const std::size_t n = g.node_count();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(order[i], order[i + uniform_index(rng, m - i)]);
    }
    for (std::size_t s = 0; s < k; ++s) {
        const std::size_t idx = order[s];
        const Edge e = store.edge(idx);
        const bool keep_first = uniform_index(rng, 2) == 0;
        const NodeId keep = keep_first ? e.u : e.v;
        const NodeId drop = keep_first ? e.v : e.u;
        auto valid = [&](NodeId w) {
            return w != keep && w != drop && !store.has(keep, w) && !g.has_edge(keep, w);
        };
        std::optional<NodeId> target;
        for (int t = 0; t < 64 && !target; ++t) {
            const auto w = static_cast<NodeId>(uniform_index(rng, n));
            if (valid(w)) target = w;
        }
        if (!target) {
            std::vector<NodeId> options;
            for (NodeId w = 0; w < n; ++w) {
                if (valid(w)) options.push_back(w);
            }
            if (options.empty()) {
                throw RewireExhausted("node " + std::to_string(keep) +
                                      " has no free partner for a replacement link");
            }
            target = options[uniform_index(rng, options.size())];
        }
        store.replace(idx, {keep, *target});
    }
    return store.to_graph();
}

Graph noise_to_level(const Graph& g, double pr, std::uint64_t seed) {
    static constexpr std::array<double, 3> kSteps{0.02, 0.02, 0.06};
    static constexpr std::array<double, 3> kLevels{0.02, 0.04, 0.10};
    if (pr == 0.0) return g;
    for (std::size_t level = 0; level < kLevels.size(); ++level) {
        if (std::abs(pr - kLevels[level]) < 1e-9) {
            Graph current = g;
            for (std::size_t s = 0; s <= level; ++s) {
                current = noise_rewire(current, kSteps[s], derive_seed(seed, {s}));
            }
            return current;
        }
    }
    return noise_rewire(g, pr, seed);
}

} // namespace colornet
