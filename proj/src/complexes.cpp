#include "colornet/complexes.hpp"

#include "colornet/error.hpp"
#include "colornet/format.hpp"
#include "colornet/parallel.hpp"
#include "colornet/random.hpp"
#include "colornet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

namespace colornet {

CandidateSet generate_candidates(const Graph& g, const ComplexSet& cs) {
    if (cs.empty()) throw EmptyInput("no complexes to seed candidates from");
    CandidateSet out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::optional<NodeId> seed;
        for (NodeId v : cs.complexes[i]) {
            if (v >= g.node_count()) continue;
            if (!seed || g.degree(v) > g.degree(*seed) ||
                (g.degree(v) == g.degree(*seed) && v < *seed)) {
                seed = v;
            }
        }
        if (!seed) {
            out.skipped.push_back(i);
            continue;
        }
        Candidate c;
        c.seed = *seed;
        c.members.assign(g.neighbors(*seed).begin(), g.neighbors(*seed).end());
        c.members.insert(std::lower_bound(c.members.begin(), c.members.end(), *seed), *seed);
        out.candidates.push_back(std::move(c));
    }
    return out;
}

namespace {

double member_mean(const std::vector<NodeId>& members, std::span<const double> attr) {
    double s = 0.0;
    for (NodeId v : members) s += attr[v];
    return s / static_cast<double>(members.size());
}

} // namespace

Candidate refine_by_attribute(const Graph& g, const Candidate& cand,
                              std::span<const double> attr, const RefineOptions& options) {
    Candidate out = cand;
    out.stage = Stage::After;
    auto& members = out.members;
    const double tol = options.tolerance;

    for (std::size_t round = 0; round <= g.node_count(); ++round) {
        bool changed = false;
        for (;;) {
            const double mu = member_mean(members, attr);
            std::optional<std::size_t> worst;
            double worst_dev = tol;
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (members[i] == out.seed) continue;
                const double dev = std::abs(attr[members[i]] - mu);
                if (dev > worst_dev) {
                    worst_dev = dev;
                    worst = i;
                }
            }
            if (!worst) break;
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(*worst));
            changed = true;
        }

        if (options.admit) {
            const double mu = member_mean(members, attr);
            std::map<NodeId, std::size_t> touching;
            for (NodeId v : members) {
                for (NodeId w : g.neighbors(v)) {
                    if (!std::binary_search(members.begin(), members.end(), w)) ++touching[w];
                }
            }
            std::vector<NodeId> admitted;
            for (const auto& [w, links] : touching) {
                if (links >= 2 && std::abs(attr[w] - mu) <= tol) admitted.push_back(w);
            }
            if (!admitted.empty()) {
                std::vector<NodeId> merged;
                std::merge(members.begin(), members.end(), admitted.begin(), admitted.end(),
                           std::back_inserter(merged));
                members = std::move(merged);
                changed = true;
            }
        }
        if (!changed) break;
    }
    return out;
}

Candidate refine_candidate_color(const Graph& g, const Candidate& cand, const Coloring& coloring,
                                 double tau, bool admit) {
    if (coloring.colors.size() != g.node_count()) {
        throw InvalidColor("coloring size does not match graph");
    }
    std::vector<double> attr(coloring.colors.begin(), coloring.colors.end());
    return refine_by_attribute(g, cand, attr, {tau, admit});
}

Candidate refine_candidate_degree(const Graph& g, const Candidate& cand,
                                  std::optional<double> tau_d, bool admit) {
    std::vector<double> attr(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) attr[v] = static_cast<double>(g.degree(v));
    double tol = 0.0;
    if (tau_d) {
        tol = *tau_d;
    } else {
        std::vector<double> ds;
        for (NodeId v : cand.members) ds.push_back(attr[v]);
        tol = 2.0 * stats::median(ds);
    }
    return refine_by_attribute(g, cand, attr, {tol, admit});
}

QualityReport operator-(const QualityReport& a, const QualityReport& b) {
    return {a.avg_cov - b.avg_cov, a.median_cov - b.median_cov, a.acc - b.acc, a.sepa - b.sepa};
}

QualityReport score(std::span<const Candidate> candidates, const ComplexSet& cs) {
    if (candidates.empty()) throw EmptyInput("no candidates to score");
    if (cs.empty()) throw EmptyInput("no complexes to score against");

    std::unordered_map<NodeId, std::vector<std::size_t>> complexes_of;
    double complex_mass = 0.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (NodeId v : cs.complexes[i]) complexes_of[v].push_back(i);
        complex_mass += static_cast<double>(cs.complexes[i].size());
    }

    // Sparse overlap table: per candidate, complex index -> |K_i ∩ C_j|.
    std::vector<std::map<std::size_t, std::size_t>> overlap(candidates.size());
    std::vector<double> row_total(cs.size(), 0.0);
    std::vector<double> col_total(candidates.size(), 0.0);
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        for (NodeId v : candidates[j].members) {
            auto it = complexes_of.find(v);
            if (it == complexes_of.end()) continue;
            for (auto i : it->second) ++overlap[j][i];
        }
        for (const auto& [i, t] : overlap[j]) {
            row_total[i] += static_cast<double>(t);
            col_total[j] += static_cast<double>(t);
        }
    }

    std::vector<double> cov(cs.size(), 0.0);
    std::vector<double> row_best(cs.size(), 0.0);
    std::vector<double> row_sep(cs.size(), 0.0);
    double ppv_num = 0.0, ppv_den = 0.0, col_sep_sum = 0.0;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        double col_best = 0.0, col_sep = 0.0;
        const auto cand_size = static_cast<double>(candidates[j].members.size());
        for (const auto& [i, t] : overlap[j]) {
            const auto tij = static_cast<double>(t);
            const double uni = static_cast<double>(cs.complexes[i].size()) + cand_size - tij;
            cov[i] = std::max(cov[i], tij / uni);
            row_best[i] = std::max(row_best[i], tij);
            col_best = std::max(col_best, tij);
            const double s = (tij / row_total[i]) * (tij / col_total[j]);
            row_sep[i] += s;
            col_sep += s;
        }
        ppv_num += col_best;
        ppv_den += col_total[j];
        col_sep_sum += col_sep;
    }

    QualityReport r;
    r.avg_cov = stats::mean(cov);
    r.median_cov = stats::median(cov);
    double sn_num = 0.0;
    for (double b : row_best) sn_num += b;
    const double sn = sn_num / complex_mass;
    const double ppv = ppv_den > 0.0 ? ppv_num / ppv_den : 0.0;
    r.acc = std::sqrt(sn * ppv);
    const double sep_co = stats::mean(row_sep);
    const double sep_cl = col_sep_sum / static_cast<double>(candidates.size());
    r.sepa = std::sqrt(sep_co * sep_cl);
    return r;
}

namespace {

QualityReport mean_of(const std::vector<QualityReport>& xs) {
    QualityReport m;
    for (const auto& x : xs) {
        m.avg_cov += x.avg_cov;
        m.median_cov += x.median_cov;
        m.acc += x.acc;
        m.sepa += x.sepa;
    }
    const auto n = static_cast<double>(xs.size());
    return {m.avg_cov / n, m.median_cov / n, m.acc / n, m.sepa / n};
}

} // namespace

std::vector<ReportRow> before_after_report(std::span<const NetworkVariant> variants,
                                           const RefineSettings& settings, unsigned threads) {
    if (variants.empty()) throw EmptyInput("no network variants to report on");
    std::vector<std::size_t> order(variants.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return variants[a].nid.hundredths() < variants[b].nid.hundredths();
    });

    std::vector<ReportRow> rows(variants.size());
    parallel_for(order.size(), threads, [&](std::size_t k) {
        const NetworkVariant& var = variants[order[k]];
        const Graph& g = *var.graph;
        const auto before = generate_candidates(g, *var.complexes).candidates;
        std::vector<Candidate> after;
        after.reserve(before.size());
        for (const Candidate& c : before) {
            if (settings.algo == RefineAlgo::Color) {
                if (!var.coloring) throw InvalidColor("color refinement needs a coloring");
                after.push_back(refine_candidate_color(g, c, *var.coloring, settings.tau, settings.admit));
            } else {
                after.push_back(refine_candidate_degree(g, c, settings.tau_d, settings.admit));
            }
        }
        ReportRow& row = rows[k];
        row.nid = var.nid.to_string();
        row.group = var.nid.group();
        row.before = score(before, *var.complexes);
        row.after = score(after, *var.complexes);
        row.delta = row.after - row.before;
    });

    std::vector<ReportRow> out;
    for (std::size_t k = 0; k < rows.size();) {
        std::size_t end = k;
        std::vector<QualityReport> b, a, d;
        while (end < rows.size() && rows[end].group == rows[k].group) {
            b.push_back(rows[end].before);
            a.push_back(rows[end].after);
            d.push_back(rows[end].delta);
            out.push_back(rows[end]);
            ++end;
        }
        ReportRow avg;
        avg.nid = "Avg.";
        avg.group = rows[k].group;
        avg.average = true;
        avg.before = mean_of(b);
        avg.after = mean_of(a);
        avg.delta = mean_of(d);
        out.push_back(avg);
        k = end;
    }
    return out;
}

namespace {

void put(std::ostream& os, const QualityReport& q) {
    os << fixed(q.avg_cov, 4) << ',' << fixed(q.median_cov, 4) << ',' << fixed(q.acc, 4) << ','
       << fixed(q.sepa, 4);
}

} // namespace

std::string report_csv_long(std::span<const ReportRow> rows) {
    std::ostringstream os;
    os << "NID,stage,avg_cov,median_cov,acc,sepa\n";
    for (const auto& r : rows) {
        const std::string nid = r.average ? "Avg:" + r.group : r.nid;
        os << nid << ",before,";
        put(os, r.before);
        os << '\n' << nid << ",after,";
        put(os, r.after);
        os << '\n' << nid << ",delta,";
        put(os, r.delta);
        os << '\n';
    }
    return os.str();
}

std::string report_csv_wide(std::span<const ReportRow> rows) {
    std::ostringstream os;
    os << "NID";
    for (const char* stage : {"before", "after", "delta"}) {
        for (const char* m : {"avg_cov", "median_cov", "acc", "sepa"}) os << ',' << stage << '_' << m;
    }
    os << ",ODID+Pe\n";
    for (const auto& r : rows) {
        os << r.nid << ',';
        put(os, r.before);
        os << ',';
        put(os, r.after);
        os << ',';
        put(os, r.delta);
        os << ',' << (r.average ? r.group : std::string()) << '\n';
    }
    return os.str();
}

PlantedNetwork planted_complex_network(const PlantedConfig& config) {
    if (config.min_size < 3 || config.max_size < config.min_size) {
        throw GeneratorInfeasible("planted complex sizes must satisfy 3 <= min <= max");
    }
    Rng rng(config.seed);
    PlantedNetwork out;
    std::vector<Edge> edges;
    NodeId next = 0;
    for (std::size_t c = 0; c < config.complexes; ++c) {
        const std::size_t size =
            config.min_size + uniform_index(rng, config.max_size - config.min_size + 1);
        std::vector<NodeId> members(size);
        for (auto& v : members) v = next++;
        for (std::size_t a = 1; a < size; ++a) {
            edges.push_back({members[a], members[uniform_index(rng, a)]});
        }
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = a + 1; b < size; ++b) {
                if (uniform01(rng) < config.intra_probability) edges.push_back({members[a], members[b]});
            }
        }
        out.complexes.complexes.push_back(std::move(members));
    }
    const NodeId complex_nodes = next;
    const std::size_t n = complex_nodes + config.background_nodes;
    if (config.background_nodes > 1) {
        const auto bg = config.background_nodes;
        const auto bg_links = static_cast<std::size_t>(
            std::llround(config.background_mean_degree * static_cast<double>(bg) / 2.0));
        for (std::size_t e = 0; e < bg_links; ++e) {
            edges.push_back({static_cast<NodeId>(complex_nodes + uniform_index(rng, bg)),
                             static_cast<NodeId>(complex_nodes + uniform_index(rng, bg))});
        }
    }
    const auto noise = static_cast<std::size_t>(
        std::llround(config.noise_edges_per_member * static_cast<double>(complex_nodes)));
    for (std::size_t e = 0; e < noise && n > 1; ++e) {
        edges.push_back({static_cast<NodeId>(uniform_index(rng, n)),
                         static_cast<NodeId>(uniform_index(rng, n))});
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
}

} // namespace colornet
