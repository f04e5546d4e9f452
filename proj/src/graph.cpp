#include "colornet/graph.hpp"

#include "colornet/error.hpp"
#include "colornet/stats.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace colornet {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> input, SelfLoopPolicy policy) {
    Graph g;
    g.node_count_ = n;
    g.edges_.reserve(input.size());
    for (const Edge& e : input) {
        if (e.u >= n || e.v >= n) {
            throw InvalidNodeId("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") references a node outside [0," + std::to_string(n) + ")");
        }
        if (e.u == e.v) {
            if (policy == SelfLoopPolicy::Reject) {
                throw SelfLoopRejected("self-loop on node " + std::to_string(e.u));
            }
            continue;
        }
        g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted, so each list fills in ascending order except for the
    // "lower" endpoints, which are sorted afterwards.
    for (const Edge& e : g.edges_) {
        g.targets_[cursor[e.u]++] = e.v;
        g.targets_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
                        SelfLoopPolicy policy) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v});
    return from_edges(n, edges, policy);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= node_count_ || v >= node_count_) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t DegreeSequence::total() const {
    std::size_t s = 0;
    for (auto d : degrees) s += d;
    return s;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence ds;
    ds.degrees.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) ds.degrees[v] = g.degree(v);
    return ds;
}

DegreeSummary summarize_degrees(const DegreeSequence& ds) {
    DegreeSummary s;
    if (ds.degrees.empty()) return s;
    std::vector<double> xs(ds.degrees.begin(), ds.degrees.end());
    s.min = *std::min_element(ds.degrees.begin(), ds.degrees.end());
    s.max = *std::max_element(ds.degrees.begin(), ds.degrees.end());
    s.mean = stats::mean(xs);
    s.stdev = stats::sample_sd(xs);
    s.median = stats::median(xs);
    std::map<std::size_t, std::size_t> counts;
    for (auto d : ds.degrees) ++counts[d];
    std::size_t best = 0;
    for (const auto& [d, c] : counts) {
        if (c > best) {
            best = c;
            s.mode = d;
        }
    }
    return s;
}

std::vector<NodeId> top_degree_nodes(const DegreeSequence& ds, std::size_t k) {
    std::vector<NodeId> order(ds.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return ds.degrees[a] > ds.degrees[b]; });
    order.resize(std::min(k, order.size()));
    return order;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
    if (source >= g.node_count()) {
        throw InvalidNodeId("bfs source " + std::to_string(source) + " out of range");
    }
    std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
    std::vector<NodeId> frontier{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const NodeId u = frontier[head];
        for (NodeId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeId>> out;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](auto x) { return x == kUnreachable; });
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    NodeId max_id = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("nodes=");
            if (pos != std::string::npos && !n) {
                try {
                    n = std::stoull(line.substr(pos + 6));
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad node count in header");
                }
            }
            continue;
        }
        std::istringstream ss(line);
        long long u = -1, v = -1;
        std::string rest;
        if (!(ss >> u >> v) || (ss >> rest) || u < 0 || v < 0) {
            throw ParseError(lineno, "expected 'u<TAB>v', got '" + line + "'");
        }
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
        max_id = std::max({max_id, static_cast<NodeId>(u), static_cast<NodeId>(v)});
        any = true;
    }
    const std::size_t count = n ? *n : (any ? static_cast<std::size_t>(max_id) + 1 : 0);
    return Graph::from_edges(count, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes=" << g.node_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << '\t' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write edge list: " + path);
    write_edge_list(out, g);
}

} // namespace colornet
