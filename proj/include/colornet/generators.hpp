#pragma once

#include "colornet/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace colornet {

struct PreferentialAttachmentConfig {
    std::size_t n = 1000;
    std::size_t m_target = 4960;
    std::uint64_t seed = 0;
};

/// Scale-free graph by preferential attachment.
///
/// Starts from a clique on m+1 nodes with m = round(m_target / n); every new
/// node links to m distinct existing nodes chosen proportionally to degree.
/// Random edges are then removed (never disconnecting the graph) or added
/// until exactly m_target links remain. Output is always connected.
Graph preferential_attachment(const PreferentialAttachmentConfig& config);

enum class MixingDirection { Assortative, Disassortative };

struct RewireOptions {
    MixingDirection direction = MixingDirection::Disassortative;
    std::size_t steps = 0;  ///< swap attempts
    /// Probability that a swap uses the degree-ordered pairing; otherwise
    /// the four endpoints are re-paired at random.
    double ordered_probability = 1.0;
    std::uint64_t seed = 0;
    bool keep_connected = true;
    std::size_t check_interval = 100;  ///< accepted swaps per connectivity check
    /// Stop early once the fraction of accepted swaps over a window of
    /// attempts falls below this rate. 0 disables.
    double saturation_rate = 0.0;
    std::size_t saturation_window = 0;  ///< 0 means 10 x edge count
};

struct RewireResult {
    Graph graph;
    std::size_t attempted = 0;
    std::size_t accepted = 0;     ///< swaps committed to the output
    std::size_t rolled_back = 0;  ///< swaps undone because a batch disconnected the graph
    bool changed() const noexcept { return accepted > 0; }
};

/// Degree-preserving two-edge swaps that push degree correlation in one
/// direction. The four endpoints are ranked by degree (ties by id);
/// assortative pairs the top two and the bottom two, disassortative pairs
/// highest with lowest. Ordered swaps that do not strictly move the sum of
/// endpoint degree products in that direction, and swaps that would
/// duplicate an edge, are rejected.
RewireResult assortativity_rewire(const Graph& g, const RewireOptions& options);

/// Rewire to saturation: run until fewer than 0.1% of attempts are accepted
/// over a window of 10*M attempts (capped at max_attempts).
RewireResult saturate_mixing(const Graph& g, MixingDirection direction, std::uint64_t seed,
                             std::size_t max_attempts = 0);

struct ClusteredConfig {
    double hub_fraction = 0.05;
    /// Link probability inside the hub set. nullopt leaves hub links
    /// uncontrolled (the baseline construction).
    std::optional<double> p_hub;
    double closure_probability = 0.6;
    std::uint64_t seed = 0;
};

struct ClusteredResult {
    Graph graph;
    std::vector<NodeId> hubs;
    std::size_t residual_stubs = 0;  ///< stubs left unmatched after repair
};

/// Erdős–Gallai test.
bool is_graphical(const DegreeSequence& degrees);

/// Clustered graph realizing a degree sequence.
///
/// Hub pairs (the top hub_fraction of nodes by degree) are linked first,
/// each with probability p_hub while both ends have free stubs; the hub set
/// is then closed. Remaining stubs are matched one at a time: with
/// probability closure_probability the partner is sought at distance two
/// (closing a triangle), otherwise it is drawn proportionally to free stubs.
/// Stubs that cannot be matched are repaired by splitting existing edges.
/// Throws DegreeSequenceInfeasible for non-graphical input.
ClusteredResult clustered_from_degree_list(const DegreeSequence& degrees,
                                           const ClusteredConfig& config);

/// Replaces exactly round(pr * M) distinct links (u,v) by (u,w), keeping a
/// random endpoint u and drawing w uniformly among nodes that yield a
/// simple edge absent from g. Link count is unchanged. Throws RewireExhausted when no
/// replacement exists.
Graph noise_rewire(const Graph& g, double pr, std::uint64_t seed);

/// Noise schedule: 2%, then another 2%, then 6%, cumulative 0.02/0.04/0.10.
/// Returns the network at the requested cumulative level; levels off the
/// schedule are applied as a single noise_rewire step.
Graph noise_to_level(const Graph& g, double pr, std::uint64_t seed);

} // namespace colornet
