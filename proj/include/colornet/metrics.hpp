#pragma once

#include "colornet/graph.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace colornet {

/// Per-node triangle density; nodes of degree < 2 get 0.
std::vector<double> local_clustering(const Graph& g);
/// Mean of local_clustering over all nodes.
double clustering_coefficient(const Graph& g);

/// Newman degree-correlation coefficient: Pearson correlation of the degrees
/// at the two ends of every edge, each edge counted in both orientations.
/// Throws UndefinedAssortativity when all edge-end degrees are equal.
double assortativity(const Graph& g);

/// Degree thresholds for the nested high-degree quartiles. Unique degree
/// values are sorted ascending and split at ceil(L/4), ceil(L/2), ceil(3L/4);
/// quartile k holds the nodes with degree >= its threshold, and quartile 4
/// is every node.
struct QuartileSpec {
    std::size_t q1 = 0;
    std::size_t q2 = 0;
    std::size_t q3 = 0;
};

QuartileSpec quartile_spec(const Graph& g);

/// Nodes of quartile k (1..4), ascending.
std::vector<NodeId> quartile_nodes(const Graph& g, const QuartileSpec& spec, int k);

struct QuartileMpl {
    std::array<double, 4> mpl{};           ///< q1..q4 median path length
    std::array<std::size_t, 4> sizes{};    ///< nodes per quartile inside the measured component
    std::uint32_t max_pl = 0;              ///< diameter of the measured component
    std::size_t component_nodes = 0;       ///< size of the component measured
    bool whole_graph = true;               ///< false when only the largest component was used
};

/// Median hop distance over ordered pairs of distinct nodes within each
/// quartile, restricted to the largest connected component. Throws
/// QuartileTooSmall when a quartile has fewer than two nodes there.
QuartileMpl mpl_by_quartile(const Graph& g, const QuartileSpec& spec);

/// (d, fraction of nodes with degree >= d) for each distinct degree d, ascending.
std::vector<std::pair<std::size_t, double>> reversed_cumulative_degree_distribution(const Graph& g);

} // namespace colornet
