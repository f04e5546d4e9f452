#include "colornet/coloring.hpp"
#include "colornet/complexes.hpp"
#include "colornet/error.hpp"
#include "colornet/experiment.hpp"
#include "colornet/format.hpp"
#include "colornet/generators.hpp"
#include "colornet/graph.hpp"
#include "colornet/metrics.hpp"
#include "colornet/ppi.hpp"
#include "colornet/random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace colornet;

// Writes to the named file, or to stdout when the name is empty.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw Error("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

MixingDirection parse_direction(const std::string& s) {
    if (s == "assortative") return MixingDirection::Assortative;
    if (s == "disassortative") return MixingDirection::Disassortative;
    throw ConfigError("direction must be assortative or disassortative");
}

nlohmann::json record_json(const HcRunRecord& r) {
    return {{"seed", r.seed},
            {"palette_size", r.palette_size},
            {"success", r.success},
            {"evals_used", r.evals_used},
            {"final_conflicts", r.final_conflicts},
            {"last_success_eval", r.last_success_eval},
            {"success_count", r.success_count}};
}

void emit_metric(std::ostream& out, const std::string& metric, const std::string& key,
                 const std::string& value) {
    out << metric << ',' << key << ',' << value << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph coloring and network analysis toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate or rewire a network");
    generate->require_subcommand(1);
    std::size_t n = 1000, m = 4960;
    std::uint64_t seed = 0;
    std::string in_path, out_path;

    auto* gen_pa = generate->add_subcommand("pa", "Preferential attachment graph");
    gen_pa->add_option("--n", n, "Node count")->capture_default_str();
    gen_pa->add_option("--m", m, "Target link count")->capture_default_str();
    gen_pa->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen_pa->add_option("--out", out_path, "Edge list output (default stdout)");

    std::optional<double> p_hub;
    double closure = ClusteredConfig{}.closure_probability;
    double hub_fraction = ClusteredConfig{}.hub_fraction;
    auto* gen_cl = generate->add_subcommand("clustered", "Clustered graph with controlled hub links");
    gen_cl->add_option("--in", in_path, "Take the degree list of this edge list instead of a fresh PA graph");
    gen_cl->add_option("--n", n, "Node count of the PA degree source")->capture_default_str();
    gen_cl->add_option("--m", m, "Link count of the PA degree source")->capture_default_str();
    gen_cl->add_option("--p-hub", p_hub, "Hub link probability; omit for the uncontrolled baseline")
        ->check(CLI::Range(0.0, 1.0));
    gen_cl->add_option("--hub-fraction", hub_fraction)->capture_default_str()->check(CLI::Range(0.0, 1.0));
    gen_cl->add_option("--closure", closure, "Triangle closure probability")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    gen_cl->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen_cl->add_option("--out", out_path, "Edge list output (default stdout)");

    std::string direction;
    std::size_t steps = 0;
    bool saturate = false;
    std::optional<double> pr;
    auto* gen_rw = generate->add_subcommand("rewire", "Assortativity rewiring or noise rewiring");
    gen_rw->add_option("--in", in_path, "Input edge list")->required();
    gen_rw->add_option("--direction", direction, "assortative or disassortative");
    gen_rw->add_option("--steps", steps, "Swap attempts");
    gen_rw->add_flag("--saturate", saturate, "Rewire until swap acceptance starves");
    gen_rw->add_option("--pr", pr, "Noise level on the cumulative schedule")->check(CLI::Range(0.0, 1.0));
    gen_rw->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen_rw->add_option("--out", out_path, "Edge list output (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "Color a network");
    color->require_subcommand(1);
    auto* col_ds = color->add_subcommand("dsatur", "DSATUR coloring");
    col_ds->add_option("--in", in_path, "Input edge list")->required();
    col_ds->add_option("--out", out_path, "Coloring output (default stdout)");

    HcConfig hc;
    std::size_t runs = 1;
    std::string record_path;
    auto* col_hc = color->add_subcommand("hc", "Hill-climbing coloring with a fixed palette");
    col_hc->add_option("--in", in_path, "Input edge list")->required();
    col_hc->add_option("--c", hc.palette_size, "Palette size")->required();
    col_hc->add_option("--pm", hc.pm, "Mutation rate")->capture_default_str();
    col_hc->add_option("--max-evals", hc.max_evals, "Evaluation budget per run")->capture_default_str();
    col_hc->add_option("--seed", seed, "Base seed")->capture_default_str();
    col_hc->add_option("--runs", runs, "Independent runs")->capture_default_str()->check(CLI::PositiveNumber);
    col_hc->add_option("--out", out_path, "Coloring of the first successful run (default stdout)");
    col_hc->add_option("--record", record_path, "JSON-lines run records");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Topology statistics as metric,key,value rows");
    bool all = false, want_cc = false, want_r = false, want_mpl = false, want_rcdd = false;
    metrics->add_option("--in", in_path, "Input edge list")->required();
    metrics->add_flag("--all", all);
    metrics->add_flag("--clustering", want_cc);
    metrics->add_flag("--assortativity", want_r);
    metrics->add_flag("--mpl", want_mpl);
    metrics->add_flag("--rcdd", want_rcdd);
    metrics->add_option("--out", out_path, "Output (default stdout)");

    // ppi
    auto* ppi = app.add_subcommand("ppi", "PPI network construction");
    ppi->require_subcommand(1);
    double pe = 0.0, pr_level = 0.0;
    std::string complexes_path, names_path, stats_path;
    auto* ppi_build = ppi->add_subcommand("build", "Build a network from a normalized datafile");
    ppi_build->add_option("--in", in_path, "Dataset file")->required();
    ppi_build->add_option("--pe", pe, "Complex expansion probability")->capture_default_str();
    ppi_build->add_option("--pr", pr_level, "Noise level")->capture_default_str();
    ppi_build->add_option("--seed", seed, "RNG seed")->capture_default_str();
    ppi_build->add_option("--out", out_path, "Edge list output")->required();
    ppi_build->add_option("--complexes", complexes_path, "Complexes output");
    ppi_build->add_option("--names", names_path, "Node id to interactor id output");
    ppi_build->add_option("--stats", stats_path, "Network characteristics CSV (default stdout)");

    // complexes
    auto* complexes = app.add_subcommand("complexes", "Protein complex candidates");
    complexes->require_subcommand(1);
    std::string graph_path, coloring_path, algo = "c", report_path, nid_text;
    double tau = 1.0;
    std::optional<double> tau_d;
    auto* refine = complexes->add_subcommand("refine", "Refine candidates and score before/after");
    refine->add_option("--graph", graph_path, "Edge list")->required();
    refine->add_option("--complexes", complexes_path, "Annotated complexes")->required();
    refine->add_option("--coloring", coloring_path, "Coloring file; DSATUR when omitted");
    refine->add_option("--algo", algo, "c (color) or d (degree)")->check(CLI::IsMember({"c", "d", "C", "D"}));
    refine->add_option("--tau", tau, "Color tolerance")->capture_default_str();
    refine->add_option("--tau-d", tau_d, "Degree tolerance; twice the member median when omitted");
    refine->add_option("--nid", nid_text, "Network label, e.g. 4.29");
    refine->add_option("--report", report_path, "CSV output (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run an experiment from a config file");
    experiment->require_subcommand(1);
    std::string config_path, out_dir;
    for (const char* kind : {"e1", "e2", "ppi"}) {
        auto* sub = experiment->add_subcommand(kind, std::string("Experiment ") + kind);
        sub->add_option("--config", config_path, "Flat key = value config")->required();
        sub->add_option("--out-dir", out_dir, "Output directory")->required();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_pa->parsed()) {
            Output out(out_path);
            write_edge_list(out.stream(), preferential_attachment({n, m, seed}));
        } else if (gen_cl->parsed()) {
            const DegreeSequence ds = in_path.empty()
                                          ? degree_sequence(preferential_attachment({n, m, seed}))
                                          : degree_sequence(read_edge_list_file(in_path));
            ClusteredConfig cfg;
            cfg.hub_fraction = hub_fraction;
            cfg.p_hub = p_hub;
            cfg.closure_probability = closure;
            cfg.seed = seed;
            const auto res = clustered_from_degree_list(ds, cfg);
            if (res.residual_stubs > 0) {
                std::cerr << "warning: " << res.residual_stubs << " stubs left unmatched\n";
            }
            Output out(out_path);
            write_edge_list(out.stream(), res.graph);
        } else if (gen_rw->parsed()) {
            Graph g = read_edge_list_file(in_path);
            if (!direction.empty()) {
                const auto dir = parse_direction(direction);
                if (saturate) {
                    g = saturate_mixing(g, dir, seed).graph;
                } else {
                    RewireOptions opt;
                    opt.direction = dir;
                    opt.steps = steps;
                    opt.seed = seed;
                    g = assortativity_rewire(g, opt).graph;
                }
            } else if (!pr) {
                throw ConfigError("rewire needs --direction or --pr");
            }
            if (pr) g = noise_to_level(g, *pr, seed);
            Output out(out_path);
            write_edge_list(out.stream(), g);
        } else if (col_ds->parsed()) {
            const Graph g = read_edge_list_file(in_path);
            Output out(out_path);
            write_coloring(out.stream(), dsatur(g).colors);
        } else if (col_hc->parsed()) {
            const Graph g = read_edge_list_file(in_path);
            const auto results = hill_climb_batch(g, hc, runs, seed, 1);
            const HcResult* chosen = &results.front();
            for (const auto& r : results) {
                if (r.record.success) {
                    chosen = &r;
                    break;
                }
            }
            {
                Output out(out_path);
                write_coloring(out.stream(), chosen->coloring.colors);
            }
            if (!record_path.empty()) {
                Output rec(record_path);
                for (const auto& r : results) rec.stream() << record_json(r.record).dump() << '\n';
            }
        } else if (metrics->parsed()) {
            const Graph g = read_edge_list_file(in_path);
            if (!(want_cc || want_r || want_mpl || want_rcdd)) all = true;
            Output out(out_path);
            auto& os = out.stream();
            os << "metric,key,value\n";
            emit_metric(os, "nodes", "", std::to_string(g.node_count()));
            emit_metric(os, "links", "", std::to_string(g.edge_count()));
            if (all || want_cc) emit_metric(os, "clustering", "", fixed(clustering_coefficient(g), 6));
            if (all || want_r) {
                try {
                    emit_metric(os, "assortativity", "", fixed(assortativity(g), 6));
                } catch (const UndefinedAssortativity&) {
                    emit_metric(os, "assortativity", "", "undefined");
                }
            }
            if (all || want_mpl) {
                const auto spec = quartile_spec(g);
                const auto q = mpl_by_quartile(g, spec);
                for (int k = 0; k < 4; ++k) {
                    emit_metric(os, "mpl", "q" + std::to_string(k + 1), fixed(q.mpl[k], 1));
                }
                emit_metric(os, "mpl", "max_pl", std::to_string(q.max_pl));
                emit_metric(os, "mpl", "component_nodes", std::to_string(q.component_nodes));
            }
            if (all || want_rcdd) {
                for (const auto& [d, frac] : reversed_cumulative_degree_distribution(g)) {
                    emit_metric(os, "rcdd", std::to_string(d), fixed(frac, 6));
                }
            }
        } else if (ppi_build->parsed()) {
            const PpiDataset ds = parse_dataset_file(in_path);
            PpiNetwork net = build_network(ds, pe, seed);
            net.graph = noise_to_level(net.graph, pr_level, derive_seed(seed, {1}));
            write_edge_list_file(out_path, net.graph);
            if (!complexes_path.empty()) write_complexes_file(complexes_path, net.complexes);
            if (!names_path.empty()) {
                Output names(names_path);
                for (std::size_t v = 0; v < net.names.size(); ++v) {
                    names.stream() << v << '\t' << net.names[v] << '\n';
                }
            }
            std::string label = ds.did;
            if (const auto odid = odid_for_did(ds.did)) label = NetworkId::make(*odid, pe, pr_level).to_string();
            Output stats(stats_path);
            stats.stream() << dataset_stats_header() << '\n'
                           << dataset_stats_row(label, dataset_stats(net.graph, net.complexes)) << '\n';
        } else if (refine->parsed()) {
            const Graph g = read_edge_list_file(graph_path);
            const ComplexSet cs = read_complexes_file(complexes_path);
            Coloring coloring;
            if (!coloring_path.empty()) {
                coloring.colors = read_coloring_file(coloring_path);
                std::size_t palette = 0;
                for (Color c : coloring.colors) palette = std::max<std::size_t>(palette, c + 1);
                coloring.palette_size = palette;
                coloring.proper = verify_coloring(g, coloring.colors, palette) == 0;
            } else {
                coloring = dsatur(g);
            }
            const NetworkId nid = nid_text.empty() ? NetworkId::make(1, 0.0, 0.0) : NetworkId::parse(nid_text);
            const NetworkVariant variant{nid, &g, &cs, &coloring};
            RefineSettings settings;
            settings.algo = (algo == "d" || algo == "D") ? RefineAlgo::Degree : RefineAlgo::Color;
            settings.tau = tau;
            settings.tau_d = tau_d;
            const auto rows = before_after_report(std::span<const NetworkVariant>(&variant, 1), settings);
            Output out(report_path);
            out.stream() << report_csv_long(rows);
        } else if (experiment->parsed()) {
            ExperimentSpec spec = load_experiment_spec(config_path);
            for (auto* sub : experiment->get_subcommands()) {
                if (sub->get_name() == "e1") spec.experiment = ExperimentKind::E1;
                if (sub->get_name() == "e2") spec.experiment = ExperimentKind::E2;
                if (sub->get_name() == "ppi") spec.experiment = ExperimentKind::Ppi;
            }
            const auto report = run_experiment(spec);
            write_report(report, out_dir);
            for (const auto& e : report.errors) std::cerr << "warning: " << e << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
