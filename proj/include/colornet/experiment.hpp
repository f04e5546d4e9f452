#pragma once

#include "colornet/coloring.hpp"
#include "colornet/complexes.hpp"
#include "colornet/graph.hpp"
#include "colornet/metrics.hpp"
#include "colornet/ppi.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace colornet {

enum class ExperimentKind { E1, E2, Ppi };

std::string to_string(ExperimentKind kind);

struct ExperimentSpec {
    ExperimentKind experiment = ExperimentKind::E1;
    std::vector<std::uint64_t> seeds{15, 16};
    /// Network types to produce; empty means every type of the experiment.
    /// E1: disassortative, null, assortative. E2: 0.00, null, 0.25, 0.75.
    std::vector<std::string> types;

    std::size_t nodes = 1000;
    std::size_t links = 4960;
    /// E1 swap attempts per link; 0 rewires until acceptance starves.
    double rewire_steps_per_link = 15.0;
    std::size_t replicates = 2;  ///< E2 clustered networks per degree list
    double hub_fraction = 0.05;
    double closure_probability = 0.6;

    std::size_t hc_runs = 10;  ///< per network and palette; 0 skips HC
    double pm = 0.0625;
    std::size_t max_evals = 2'000'000;
    double target_rate = 0.925;
    std::size_t palette_step = 2;
    std::size_t max_palette = 0;
    std::size_t top_k = 50;
    unsigned threads = 0;  ///< 0 uses the hardware concurrency

    std::vector<std::string> datasets;
    std::vector<double> pe{0.0};
    std::vector<double> pr{0.0, 0.02, 0.04, 0.10};
    std::vector<RefineAlgo> algorithms{RefineAlgo::Color, RefineAlgo::Degree};
    double tau = 1.0;
    std::optional<double> tau_d;
};

/// Flat "key = value" document; '#' starts a comment, lists are comma
/// separated. Unknown keys and bad values throw ConfigError.
ExperimentSpec parse_experiment_spec(std::string_view text);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

/// Types allowed for an experiment, in report order.
std::vector<std::string> experiment_types(ExperimentKind kind);

struct NetworkResult {
    std::string type;
    std::string label;
    Graph graph;
    Coloring dsatur;
    ColorStats dsatur_top;
    double assortativity = 0.0;
    double clustering = 0.0;
    QuartileMpl mpl;
};

struct TypeResult {
    std::string type;
    std::vector<std::size_t> networks;  ///< indices into ExperimentReport::networks
    double dsatur_avg = 0.0;
    PaletteSearch hc;                   ///< empty ladder when HC is skipped
    std::vector<double> hc_top_mean;    ///< top-k color mean of each run at the final palette
    std::vector<double> hc_top_sd;      ///< top-k color sd of each run at the final palette
};

struct PpiNetworkRecord {
    NetworkId nid;
    PpiNetwork network;
    Coloring coloring;
    DatasetStats stats;
};

struct PpiAlgorithmReport {
    RefineAlgo algo = RefineAlgo::Color;
    std::vector<ReportRow> rows;
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::E1;
    std::vector<NetworkResult> networks;  ///< ordered by type, then label
    std::vector<TypeResult> types;

    std::vector<PpiNetworkRecord> ppi_networks;  ///< ordered by NID
    std::vector<PpiAlgorithmReport> ppi;
    std::vector<std::string> errors;             ///< per-file failures of a PPI run
};

ExperimentReport run_e1(const ExperimentSpec& spec);
ExperimentReport run_e2(const ExperimentSpec& spec);
/// Datasets come from spec.datasets. Throws EmptyInput when there are none;
/// a file that fails to load is recorded in errors and skipped.
ExperimentReport run_ppi(const ExperimentSpec& spec);
ExperimentReport run_experiment(const ExperimentSpec& spec);

std::string summary_csv(const ExperimentReport& report);
std::string ladder_csv(const ExperimentReport& report);
std::string colors_top_csv(const ExperimentReport& report);
std::string mpl_quartiles_csv(const ExperimentReport& report);

/// Writes the CSV files and one edge list per network into out_dir.
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

} // namespace colornet
