#include "colornet/metrics.hpp"

#include "colornet/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace colornet {

std::vector<double> local_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const std::size_t d = nb.size();
        if (d < 2) continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < d; ++i) {
            // Sorted lists: count neighbors of nb[i] that are in nb and > nb[i].
            const auto other = g.neighbors(nb[i]);
            auto a = std::upper_bound(nb.begin(), nb.end(), nb[i]);
            auto b = std::upper_bound(other.begin(), other.end(), nb[i]);
            while (a != nb.end() && b != other.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++links;
                    ++a;
                    ++b;
                }
            }
        }
        out[v] = static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    }
    return out;
}

double clustering_coefficient(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    double sum = 0.0;
    for (double c : local_clustering(g)) sum += c;
    return sum / static_cast<double>(g.node_count());
}

double assortativity(const Graph& g) {
    const double m = static_cast<double>(g.edge_count());
    if (m == 0) throw UndefinedAssortativity("graph has no edges");
    double prod = 0.0, half_sum = 0.0, half_sq = 0.0;
    for (const Edge& e : g.edges()) {
        const auto j = static_cast<double>(g.degree(e.u));
        const auto k = static_cast<double>(g.degree(e.v));
        prod += j * k;
        half_sum += (j + k) / 2.0;
        half_sq += (j * j + k * k) / 2.0;
    }
    const double mean = half_sum / m;
    const double num = prod / m - mean * mean;
    const double den = half_sq / m - mean * mean;
    if (std::abs(den) < 1e-12 * std::max(1.0, half_sq / m)) {
        throw UndefinedAssortativity("edge-end degrees have zero variance");
    }
    return num / den;
}

QuartileSpec quartile_spec(const Graph& g) {
    std::vector<std::size_t> unique;
    unique.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) unique.push_back(g.degree(v));
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    if (unique.empty()) return {};
    const std::size_t len = unique.size();
    auto at = [&](std::size_t num) {
        const std::size_t idx = (num * len + 3) / 4;  // ceil(num*L/4)
        return unique[std::min(idx, len - 1)];
    };
    return {at(3), at(2), at(1)};
}

std::vector<NodeId> quartile_nodes(const Graph& g, const QuartileSpec& spec, int k) {
    std::size_t threshold = 0;
    switch (k) {
        case 1: threshold = spec.q1; break;
        case 2: threshold = spec.q2; break;
        case 3: threshold = spec.q3; break;
        default: threshold = 0; break;
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) >= threshold) out.push_back(v);
    }
    return out;
}

namespace {

// Median of a distance histogram (counts[d] = number of pairs at distance d).
double histogram_median(const std::vector<std::size_t>& counts) {
    std::size_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) return 0.0;
    auto value_at = [&](std::size_t rank) {  // 0-based rank in sorted order
        std::size_t seen = 0;
        for (std::size_t d = 0; d < counts.size(); ++d) {
            seen += counts[d];
            if (rank < seen) return static_cast<double>(d);
        }
        return static_cast<double>(counts.size() - 1);
    };
    if (total % 2 == 1) return value_at(total / 2);
    return (value_at(total / 2 - 1) + value_at(total / 2)) / 2.0;
}

} // namespace

QuartileMpl mpl_by_quartile(const Graph& g, const QuartileSpec& spec) {
    QuartileMpl out;
    const auto comps = connected_components(g);
    const std::vector<NodeId>* largest = nullptr;
    for (const auto& c : comps) {
        if (!largest || c.size() > largest->size()) largest = &c;
    }
    if (!largest) throw QuartileTooSmall("graph has no nodes");
    out.component_nodes = largest->size();
    out.whole_graph = comps.size() == 1;

    std::vector<char> in_comp(g.node_count(), 0);
    for (NodeId v : *largest) in_comp[v] = 1;

    // Quartile membership per node: node is in quartile k iff degree >= threshold_k.
    const std::array<std::size_t, 4> thresholds{spec.q1, spec.q2, spec.q3, 0};
    std::array<std::vector<NodeId>, 4> members;
    for (NodeId v : *largest) {
        for (int k = 0; k < 4; ++k) {
            if (g.degree(v) >= thresholds[k]) members[k].push_back(v);
        }
    }
    for (int k = 0; k < 4; ++k) {
        out.sizes[k] = members[k].size();
        if (members[k].size() < 2) {
            throw QuartileTooSmall("quartile " + std::to_string(k + 1) + " has " +
                                   std::to_string(members[k].size()) + " node(s)");
        }
    }

    std::array<std::vector<std::size_t>, 4> hist;
    for (NodeId s : *largest) {
        const auto dist = bfs_distances(g, s);
        for (NodeId t : *largest) {
            if (t == s) continue;
            const auto d = dist[t];
            out.max_pl = std::max(out.max_pl, d);
            for (int k = 0; k < 4; ++k) {
                if (g.degree(s) >= thresholds[k] && g.degree(t) >= thresholds[k]) {
                    if (hist[k].size() <= d) hist[k].resize(d + 1, 0);
                    ++hist[k][d];
                }
            }
        }
    }
    for (int k = 0; k < 4; ++k) out.mpl[k] = histogram_median(hist[k]);
    return out;
}

std::vector<std::pair<std::size_t, double>> reversed_cumulative_degree_distribution(const Graph& g) {
    std::map<std::size_t, std::size_t> counts;
    for (NodeId v = 0; v < g.node_count(); ++v) ++counts[g.degree(v)];
    std::vector<std::pair<std::size_t, double>> out;
    const auto n = static_cast<double>(g.node_count());
    std::size_t at_least = g.node_count();
    for (const auto& [d, c] : counts) {
        out.emplace_back(d, static_cast<double>(at_least) / n);
        at_least -= c;
    }
    return out;
}

} // namespace colornet
