#include "colornet/experiment.hpp"

#include "colornet/error.hpp"
#include "colornet/format.hpp"
#include "colornet/generators.hpp"
#include "colornet/parallel.hpp"
#include "colornet/random.hpp"
#include "colornet/stats.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace colornet {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
    }
    return value;
}

double parse_probability(std::string_view key, std::string_view text) {
    const double p = parse_number<double>(key, text);
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(key) + " must lie in [0,1]");
    return p;
}

ExperimentKind parse_kind(std::string_view text) {
    if (text == "e1") return ExperimentKind::E1;
    if (text == "e2") return ExperimentKind::E2;
    if (text == "ppi") return ExperimentKind::Ppi;
    throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

unsigned thread_count(const ExperimentSpec& spec) {
    return spec.threads ? spec.threads : default_threads();
}

std::vector<std::string> selected_types(const ExperimentSpec& spec) {
    const auto allowed = experiment_types(spec.experiment);
    if (spec.types.empty()) return allowed;
    std::vector<std::string> out;
    for (const auto& t : allowed) {
        if (std::find(spec.types.begin(), spec.types.end(), t) != spec.types.end()) out.push_back(t);
    }
    return out;
}

void validate(const ExperimentSpec& spec) {
    if (spec.experiment != ExperimentKind::Ppi && spec.seeds.empty()) {
        throw ConfigError("seed list is empty");
    }
    const auto allowed = experiment_types(spec.experiment);
    for (const auto& t : spec.types) {
        if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) {
            throw ConfigError("type '" + t + "' is not part of experiment " + to_string(spec.experiment));
        }
    }
    if (spec.hc_runs > 0 && !(spec.target_rate > 0.0 && spec.target_rate <= 1.0)) {
        throw ConfigError("target_rate must lie in (0,1]");
    }
}

NetworkResult measure(std::string type, std::string label, Graph g, std::size_t top_k) {
    NetworkResult r;
    r.type = std::move(type);
    r.label = std::move(label);
    r.dsatur = dsatur(g);
    r.dsatur_top = top_k_color_stats(g, r.dsatur.colors, std::min(top_k, g.node_count()));
    try {
        r.assortativity = assortativity(g);
    } catch (const UndefinedAssortativity&) {
        r.assortativity = std::numeric_limits<double>::quiet_NaN();
    }
    r.clustering = clustering_coefficient(g);
    r.mpl = mpl_by_quartile(g, quartile_spec(g));
    r.graph = std::move(g);
    return r;
}

// Groups the networks by type, averages DSATUR and runs the HC ladder of
// each type over all of its networks.
void summarize(ExperimentReport& report, const std::vector<std::string>& types,
               const ExperimentSpec& spec) {
    for (std::size_t ti = 0; ti < types.size(); ++ti) {
        TypeResult tr;
        tr.type = types[ti];
        std::vector<Graph> graphs;
        std::vector<double> colors;
        std::size_t start_c = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < report.networks.size(); ++i) {
            const auto& net = report.networks[i];
            if (net.type != tr.type) continue;
            tr.networks.push_back(i);
            graphs.push_back(net.graph);
            colors.push_back(static_cast<double>(net.dsatur.palette_size));
            start_c = std::min(start_c, net.dsatur.palette_size);
        }
        if (graphs.empty()) continue;
        tr.dsatur_avg = stats::mean(colors);

        if (spec.hc_runs > 0) {
            PaletteSearchOptions opt;
            opt.runs_per_c = spec.hc_runs;
            opt.target_rate = spec.target_rate;
            opt.step = spec.palette_step;
            opt.max_palette = spec.max_palette;
            opt.pm = spec.pm;
            opt.max_evals = spec.max_evals;
            opt.seed = derive_seed(spec.seeds.front(),
                                   {static_cast<std::uint64_t>(spec.experiment), 100 + ti});
            opt.threads = thread_count(spec);
            tr.hc = find_hc_palette(graphs, start_c, opt);
            for (std::size_t i = 0; i < tr.hc.final_runs.size(); ++i) {
                const Graph& g = graphs[i / spec.hc_runs];
                const auto& run = tr.hc.final_runs[i];
                const auto top = top_k_color_stats(g, run.coloring.colors, std::min(spec.top_k, g.node_count()));
                tr.hc_top_mean.push_back(top.mean);
                tr.hc_top_sd.push_back(top.sd);
            }
        }
        report.types.push_back(std::move(tr));
    }
}

std::string number(double x, int decimals = 4) {
    if (std::isnan(x)) return "";
    return fixed(x, decimals);
}

std::string algo_code(RefineAlgo a) { return a == RefineAlgo::Color ? "C" : "D"; }

} // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::E1: return "e1";
    case ExperimentKind::E2: return "e2";
    case ExperimentKind::Ppi: return "ppi";
    }
    return "";
}

std::vector<std::string> experiment_types(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::E1: return {"disassortative", "null", "assortative"};
    case ExperimentKind::E2: return {"0.00", "null", "0.25", "0.75"};
    case ExperimentKind::Ppi: return {};
    }
    return {};
}

ExperimentSpec parse_experiment_spec(std::string_view text) {
    ExperimentSpec spec;
    bool seeds_set = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "experiment") {
            spec.experiment = parse_kind(value);
        } else if (key == "seeds") {
            spec.seeds.clear();
            for (auto s : split_list(value)) spec.seeds.push_back(parse_number<std::uint64_t>(key, s));
            seeds_set = true;
        } else if (key == "types") {
            spec.types.clear();
            for (auto s : split_list(value)) spec.types.emplace_back(s);
        } else if (key == "nodes") {
            spec.nodes = parse_number<std::size_t>(key, value);
        } else if (key == "links") {
            spec.links = parse_number<std::size_t>(key, value);
        } else if (key == "rewire_steps_per_link") {
            spec.rewire_steps_per_link = parse_number<double>(key, value);
            if (spec.rewire_steps_per_link < 0) throw ConfigError("rewire_steps_per_link must be >= 0");
        } else if (key == "replicates") {
            spec.replicates = parse_number<std::size_t>(key, value);
        } else if (key == "hub_fraction") {
            spec.hub_fraction = parse_probability(key, value);
        } else if (key == "closure_probability") {
            spec.closure_probability = parse_probability(key, value);
        } else if (key == "hc_runs") {
            spec.hc_runs = parse_number<std::size_t>(key, value);
        } else if (key == "pm") {
            spec.pm = parse_probability(key, value);
        } else if (key == "max_evals") {
            spec.max_evals = parse_number<std::size_t>(key, value);
        } else if (key == "target_rate") {
            spec.target_rate = parse_probability(key, value);
        } else if (key == "palette_step") {
            spec.palette_step = parse_number<std::size_t>(key, value);
        } else if (key == "max_palette") {
            spec.max_palette = parse_number<std::size_t>(key, value);
        } else if (key == "top_k") {
            spec.top_k = parse_number<std::size_t>(key, value);
        } else if (key == "threads") {
            spec.threads = parse_number<unsigned>(key, value);
        } else if (key == "datasets") {
            spec.datasets.clear();
            for (auto s : split_list(value)) spec.datasets.emplace_back(s);
        } else if (key == "pe") {
            spec.pe.clear();
            for (auto s : split_list(value)) spec.pe.push_back(parse_probability(key, s));
        } else if (key == "pr") {
            spec.pr.clear();
            for (auto s : split_list(value)) spec.pr.push_back(parse_probability(key, s));
        } else if (key == "algorithms") {
            spec.algorithms.clear();
            for (auto s : split_list(value)) {
                if (s == "C" || s == "c") spec.algorithms.push_back(RefineAlgo::Color);
                else if (s == "D" || s == "d") spec.algorithms.push_back(RefineAlgo::Degree);
                else throw ConfigError("unknown algorithm '" + std::string(s) + "'");
            }
        } else if (key == "tau") {
            spec.tau = parse_number<double>(key, value);
        } else if (key == "tau_d") {
            spec.tau_d = parse_number<double>(key, value);
        } else {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                              std::string(key) + "'");
        }
    }
    if (seeds_set && spec.seeds.empty()) throw ConfigError("seed list is empty");
    validate(spec);
    return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_experiment_spec(text.str());
}

ExperimentReport run_e1(const ExperimentSpec& spec) {
    validate(spec);
    const auto types = selected_types(spec);
    ExperimentReport report;
    report.kind = ExperimentKind::E1;

    struct Job {
        std::string type;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& t : types) {
        for (auto s : spec.seeds) jobs.push_back({t, s});
    }
    std::vector<Graph> bases(spec.seeds.size());
    parallel_for(spec.seeds.size(), thread_count(spec), [&](std::size_t i) {
        bases[i] = preferential_attachment({spec.nodes, spec.links, spec.seeds[i]});
    });

    report.networks.resize(jobs.size());
    parallel_for(jobs.size(), thread_count(spec), [&](std::size_t j) {
        const auto& job = jobs[j];
        const auto si = static_cast<std::size_t>(
            std::find(spec.seeds.begin(), spec.seeds.end(), job.seed) - spec.seeds.begin());
        Graph g = bases[si];
        if (job.type != "null") {
            const auto dir = job.type == "assortative" ? MixingDirection::Assortative
                                                       : MixingDirection::Disassortative;
            const std::uint64_t seed = derive_seed(job.seed, {dir == MixingDirection::Assortative ? 2u : 1u});
            if (spec.rewire_steps_per_link > 0) {
                RewireOptions opt;
                opt.direction = dir;
                opt.seed = seed;
                opt.steps = static_cast<std::size_t>(
                    std::llround(spec.rewire_steps_per_link * static_cast<double>(g.edge_count())));
                g = assortativity_rewire(g, opt).graph;
            } else {
                g = saturate_mixing(g, dir, seed).graph;
            }
        }
        report.networks[j] = measure(job.type, std::to_string(job.seed), std::move(g), spec.top_k);
    });
    summarize(report, types, spec);
    return report;
}

ExperimentReport run_e2(const ExperimentSpec& spec) {
    validate(spec);
    const auto types = selected_types(spec);
    ExperimentReport report;
    report.kind = ExperimentKind::E2;

    std::vector<DegreeSequence> lists(spec.seeds.size());
    parallel_for(spec.seeds.size(), thread_count(spec), [&](std::size_t i) {
        lists[i] = degree_sequence(preferential_attachment({spec.nodes, spec.links, spec.seeds[i]}));
    });

    struct Job {
        std::string type;
        std::size_t list;
        std::size_t rep;
    };
    std::vector<Job> jobs;
    for (const auto& t : types) {
        for (std::size_t i = 0; i < spec.seeds.size(); ++i) {
            for (std::size_t r = 0; r < spec.replicates; ++r) jobs.push_back({t, i, r});
        }
    }
    report.networks.resize(jobs.size());
    parallel_for(jobs.size(), thread_count(spec), [&](std::size_t j) {
        const auto& job = jobs[j];
        ClusteredConfig cfg;
        cfg.hub_fraction = spec.hub_fraction;
        cfg.closure_probability = spec.closure_probability;
        // The same seed for every type, so the p_hub variants of a
        // replicate share their random stream with the baseline.
        cfg.seed = derive_seed(spec.seeds[job.list], {10 + job.rep});
        if (job.type != "null") cfg.p_hub = std::stod(job.type);
        auto built = clustered_from_degree_list(lists[job.list], cfg);
        const std::string label = std::to_string(spec.seeds[job.list]) + "." + std::to_string(job.rep);
        report.networks[j] = measure(job.type, label, std::move(built.graph), spec.top_k);
    });
    summarize(report, types, spec);
    return report;
}

ExperimentReport run_ppi(const ExperimentSpec& spec) {
    if (spec.datasets.empty()) throw EmptyInput("no datasets to run");
    const std::uint64_t base_seed = spec.seeds.empty() ? 0 : spec.seeds.front();
    ExperimentReport report;
    report.kind = ExperimentKind::Ppi;

    for (std::size_t fi = 0; fi < spec.datasets.size(); ++fi) {
        const auto& path = spec.datasets[fi];
        try {
            const PpiDataset ds = parse_dataset_file(path);
            const auto odid = odid_for_did(ds.did);
            if (!odid) throw InvalidNid("dataset label '" + ds.did + "' has no ODID");
            for (double pe : spec.pe) {
                const auto pe_key = static_cast<std::uint64_t>(std::llround(pe * 100));
                PpiNetwork base = build_network(ds, pe, derive_seed(base_seed, {fi, pe_key}));
                for (double pr : spec.pr) {
                    const auto nid = NetworkId::make(*odid, pe, pr);
                    PpiNetwork net = base;
                    net.graph = noise_to_level(base.graph, pr, derive_seed(base_seed, {fi, pe_key, 1}));
                    PpiNetworkRecord rec{nid, std::move(net), {}, {}};
                    rec.coloring = dsatur(rec.network.graph);
                    rec.stats = dataset_stats(rec.network.graph, rec.network.complexes);
                    report.ppi_networks.push_back(std::move(rec));
                }
            }
        } catch (const Error& e) {
            report.errors.push_back(path + ": " + e.what());
        }
    }
    std::stable_sort(report.ppi_networks.begin(), report.ppi_networks.end(),
                     [](const auto& a, const auto& b) { return a.nid.hundredths() < b.nid.hundredths(); });

    std::vector<NetworkVariant> variants;
    for (const auto& rec : report.ppi_networks) {
        variants.push_back({rec.nid, &rec.network.graph, &rec.network.complexes, &rec.coloring});
    }
    if (variants.empty()) return report;
    for (RefineAlgo algo : spec.algorithms) {
        RefineSettings settings;
        settings.algo = algo;
        settings.tau = spec.tau;
        settings.tau_d = spec.tau_d;
        report.ppi.push_back({algo, before_after_report(variants, settings, thread_count(spec))});
    }
    return report;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    switch (spec.experiment) {
    case ExperimentKind::E1: return run_e1(spec);
    case ExperimentKind::E2: return run_e2(spec);
    case ExperimentKind::Ppi: return run_ppi(spec);
    }
    throw ConfigError("unknown experiment");
}

std::string summary_csv(const ExperimentReport& report) {
    std::ostringstream out;
    if (report.kind == ExperimentKind::Ppi) {
        out << "algorithm,NID,stage,avg_cov,median_cov,acc,sepa\n";
        for (const auto& block : report.ppi) {
            std::istringstream body(report_csv_long(block.rows));
            std::string line;
            std::getline(body, line);  // header
            while (std::getline(body, line)) out << algo_code(block.algo) << ',' << line << '\n';
        }
        return out.str();
    }
    out << "type,network,nodes,links,assortativity,clustering,dsatur_colors,hc_colors,hc_reached\n";
    for (const auto& tr : report.types) {
        std::vector<double> r, cc;
        for (std::size_t i : tr.networks) {
            const auto& n = report.networks[i];
            out << n.type << ',' << n.label << ',' << n.graph.node_count() << ',' << n.graph.edge_count()
                << ',' << number(n.assortativity) << ',' << number(n.clustering) << ','
                << n.dsatur.palette_size << ",,\n";
            r.push_back(n.assortativity);
            cc.push_back(n.clustering);
        }
        const bool hc = !tr.hc.ladder.empty();
        out << tr.type << ",Avg.,,," << number(stats::mean(r)) << ',' << number(stats::mean(cc)) << ','
            << fixed(tr.dsatur_avg, 2) << ',' << (hc ? std::to_string(tr.hc.palette_size) : "") << ','
            << (hc ? (tr.hc.reached ? "yes" : "no") : "") << '\n';
    }
    return out.str();
}

std::string ladder_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "type,palette,result,successes,runs\n";
    for (const auto& tr : report.types) {
        for (const auto& rung : tr.hc.ladder) {
            out << tr.type << ',' << rung.palette_size << ',' << rung.successes << '/' << rung.runs << ','
                << rung.successes << ',' << rung.runs << '\n';
        }
    }
    return out.str();
}

std::string colors_top_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "type,algorithm,samples,avg,avg_ci99,sd,sd_ci99\n";
    for (const auto& tr : report.types) {
        std::vector<double> avg, sd;
        for (std::size_t i : tr.networks) {
            avg.push_back(report.networks[i].dsatur_top.mean);
            sd.push_back(report.networks[i].dsatur_top.sd);
        }
        out << tr.type << ",dsatur," << avg.size() << ',' << number(stats::mean(avg)) << ','
            << number(stats::ci_half_width(avg)) << ',' << number(stats::mean(sd)) << ','
            << number(stats::ci_half_width(sd)) << '\n';
        if (tr.hc_top_sd.empty()) continue;
        out << tr.type << ",hc," << tr.hc_top_sd.size() << ',' << number(stats::mean(tr.hc_top_mean)) << ','
            << number(stats::ci_half_width(tr.hc_top_mean)) << ',' << number(stats::mean(tr.hc_top_sd)) << ','
            << number(stats::ci_half_width(tr.hc_top_sd)) << '\n';
    }
    return out.str();
}

std::string mpl_quartiles_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "type,network,q1,q2,q3,q4,max_pl\n";
    for (const auto& tr : report.types) {
        std::array<std::vector<double>, 5> cols;
        for (std::size_t i : tr.networks) {
            const auto& n = report.networks[i];
            out << n.type << ',' << n.label;
            for (int k = 0; k < 4; ++k) {
                out << ',' << number(n.mpl.mpl[k], 1);
                cols[k].push_back(n.mpl.mpl[k]);
            }
            out << ',' << n.mpl.max_pl << '\n';
            cols[4].push_back(n.mpl.max_pl);
        }
        out << tr.type << ",mean";
        for (const auto& c : cols) out << ',' << number(stats::mean(c));
        out << '\n' << tr.type << ",sd";
        for (const auto& c : cols) out << ',' << (c.size() > 1 ? number(stats::sample_sd(c)) : "");
        out << '\n';
    }
    return out.str();
}

void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir / "networks");
    auto write = [&](const fs::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + p.string());
        out << text;
    };
    write(out_dir / "summary.csv", summary_csv(report));
    if (report.kind == ExperimentKind::Ppi) {
        for (const auto& block : report.ppi) {
            write(out_dir / ("report_" + algo_code(block.algo) + ".csv"), report_csv_wide(block.rows));
        }
        std::string stats = dataset_stats_header() + "\n";
        for (const auto& rec : report.ppi_networks) {
            const auto name = rec.nid.to_string();
            stats += dataset_stats_row(name, rec.stats) + "\n";
            write_edge_list_file((out_dir / "networks" / (name + ".edges")).string(), rec.network.graph);
            write_complexes_file((out_dir / "networks" / (name + ".complexes")).string(),
                                 rec.network.complexes);
        }
        write(out_dir / "stats.csv", stats);
        std::string errors;
        for (const auto& e : report.errors) errors += e + "\n";
        if (!errors.empty()) write(out_dir / "errors.txt", errors);
        return;
    }
    write(out_dir / "ladder.csv", ladder_csv(report));
    write(out_dir / "colors_top50.csv", colors_top_csv(report));
    write(out_dir / "mpl_quartiles.csv", mpl_quartiles_csv(report));
    for (const auto& n : report.networks) {
        write_edge_list_file((out_dir / "networks" / (n.type + "_" + n.label + ".edges")).string(), n.graph);
    }
}

} // namespace colornet
