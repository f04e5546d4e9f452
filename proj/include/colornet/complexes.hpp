#pragma once

#include "colornet/coloring.hpp"
#include "colornet/graph.hpp"
#include "colornet/ppi.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colornet {

enum class Stage { Before, After };

struct Candidate {
    std::vector<NodeId> members;  ///< sorted, always contains seed
    NodeId seed = 0;
    Stage stage = Stage::Before;
};

struct CandidateSet {
    std::vector<Candidate> candidates;
    std::vector<std::size_t> skipped;  ///< indices of complexes with no member in the graph
};

/// One candidate per complex: the member of highest degree (ties: lowest id)
/// and its neighbors. Throws EmptyInput for an empty complex set.
CandidateSet generate_candidates(const Graph& g, const ComplexSet& cs);

struct RefineOptions {
    double tolerance = 1.0;
    bool admit = true;  ///< also admit boundary nodes; disabled only in tests
};

/// Attribute-homogeneity refinement shared by the color and degree variants.
///
/// Each round first peels, one at a time, the non-seed member whose
/// attribute lies furthest from the current member mean while that distance
/// exceeds the tolerance, then admits every outside node adjacent to at
/// least two members whose attribute lies within the tolerance of the mean.
/// Rounds repeat until nothing changes, at most |V| times.
Candidate refine_by_attribute(const Graph& g, const Candidate& cand,
                              std::span<const double> attribute, const RefineOptions& options);

/// Refinement on node colors ("C").
Candidate refine_candidate_color(const Graph& g, const Candidate& cand, const Coloring& coloring,
                                 double tau, bool admit = true);

/// Refinement on node degrees ("D"). Without tau_d the tolerance is twice
/// the median degree of the candidate's members.
Candidate refine_candidate_degree(const Graph& g, const Candidate& cand,
                                  std::optional<double> tau_d = std::nullopt, bool admit = true);

struct QualityReport {
    double avg_cov = 0.0;
    double median_cov = 0.0;
    double acc = 0.0;
    double sepa = 0.0;
};

QualityReport operator-(const QualityReport& a, const QualityReport& b);

/// Scores candidates against annotated complexes.
///
///  - cov of a complex: best Jaccard overlap with any candidate; averaged
///    and medianed over complexes.
///  - acc: geometric mean of sensitivity (sum over complexes of the best
///    overlap count / sum of complex sizes) and positive predictive value
///    (sum over candidates of the best overlap count / sum of column totals)
///    of the complex x candidate overlap table.
///  - sepa: geometric mean of the complex-wise and candidate-wise averages
///    of sum_j (T_ij / row_i) * (T_ij / col_j).
///
/// Throws EmptyInput when either side is empty.
QualityReport score(std::span<const Candidate> candidates, const ComplexSet& cs);

enum class RefineAlgo { Color, Degree };

struct RefineSettings {
    RefineAlgo algo = RefineAlgo::Color;
    double tau = 1.0;
    std::optional<double> tau_d;
    bool admit = true;
};

/// One network of a before/after comparison. Coloring may be null for the
/// degree algorithm.
struct NetworkVariant {
    NetworkId nid;
    const Graph* graph = nullptr;
    const ComplexSet* complexes = nullptr;
    const Coloring* coloring = nullptr;
};

struct ReportRow {
    std::string nid;    ///< "4.02", or "Avg." for group averages
    std::string group;  ///< ODID + Pe key; set on every row
    bool average = false;
    QualityReport before;
    QualityReport after;
    QualityReport delta;
};

/// Refines every candidate of every variant and scores both stages. Rows
/// are ordered by NID; each ODID + Pe group is followed by an average row
/// whose fields are the arithmetic means of the group's rows.
std::vector<ReportRow> before_after_report(std::span<const NetworkVariant> variants,
                                           const RefineSettings& settings,
                                           unsigned threads = 1);

/// Long layout: NID,stage,avg_cov,median_cov,acc,sepa with stages
/// before/after/delta. Average rows use "Avg:<group>" as NID.
std::string report_csv_long(std::span<const ReportRow> rows);
/// Wide layout: before/after/delta blocks per row and an ODID+Pe column
/// filled on average rows.
std::string report_csv_wide(std::span<const ReportRow> rows);

struct PlantedConfig {
    std::size_t complexes = 20;
    std::size_t min_size = 3;
    std::size_t max_size = 8;
    std::size_t background_nodes = 200;
    double background_mean_degree = 3.0;
    double intra_probability = 0.5;   ///< extra pair probability on top of a spanning tree
    double noise_edges_per_member = 1.0;  ///< uniformly random links added per complex node
    std::uint64_t seed = 0;
};

struct PlantedNetwork {
    Graph graph;
    ComplexSet complexes;
};

/// Disjoint planted complexes in a sparse random background with uniformly
/// placed noise links.
PlantedNetwork planted_complex_network(const PlantedConfig& config);

} // namespace colornet
