#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colornet {

using NodeId = std::uint32_t;

/// Unordered node pair, stored with u < v once inside a Graph.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class SelfLoopPolicy { Filter, Reject };

/// Immutable undirected simple graph on dense node ids 0..n-1.
///
/// Adjacency is kept in compressed (CSR) form with each neighbor list sorted,
/// so neighbor scans are contiguous and edge lookups are a binary search.
/// Duplicate input pairs collapse to one edge; the result is independent of
/// the order in which the pairs were supplied.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidNodeId for ids >= n, SelfLoopRejected for u == v under
    /// SelfLoopPolicy::Reject.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            SelfLoopPolicy policy = SelfLoopPolicy::Filter);
    static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
                            SelfLoopPolicy policy = SelfLoopPolicy::Filter);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    /// Edges with u < v in lexicographic order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
};

/// Node degrees in node-id order.
struct DegreeSequence {
    std::vector<std::size_t> degrees;

    std::size_t size() const noexcept { return degrees.size(); }
    std::size_t total() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Min/max/mean/sample-sd/mode/median of a degree sequence.
struct DegreeSummary {
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
    double stdev = 0.0;
    std::size_t mode = 0;
    double median = 0.0;
};

DegreeSequence degree_sequence(const Graph& g);
DegreeSummary summarize_degrees(const DegreeSequence& degrees);

/// The k highest-degree nodes, ties broken by lowest id.
std::vector<NodeId> top_degree_nodes(const DegreeSequence& degrees, std::size_t k);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Hop distances from source; kUnreachable for nodes in other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

/// Components as sorted node lists, ordered by their smallest node id.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Edge-list interchange format: "# nodes=N" header, then "u<TAB>v" lines.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace colornet
