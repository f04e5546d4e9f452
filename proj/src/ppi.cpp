#include "colornet/ppi.hpp"

#include "colornet/error.hpp"
#include "colornet/format.hpp"
#include "colornet/random.hpp"
#include "colornet/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace colornet {

InteractionClass classify(std::size_t distinct) {
    if (distinct <= 1) return InteractionClass::Self;
    if (distinct == 2) return InteractionClass::Binary;
    return InteractionClass::Complex;
}

PpiDataset::Counts PpiDataset::counts() const {
    Counts c;
    for (const auto& members : interactions) {
        switch (classify(members.size())) {
            case InteractionClass::Self: ++c.self; break;
            case InteractionClass::Binary: ++c.binary; break;
            case InteractionClass::Complex: ++c.complex; break;
        }
    }
    return c;
}

std::vector<std::size_t> PpiDataset::orphan_interactors() const {
    std::vector<char> used(interactors.size(), 0);
    for (const auto& members : interactions) {
        for (auto i : members) used[i] = 1;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) out.push_back(i);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ids(const std::string& field, std::size_t lineno) {
    std::vector<std::string> ids;
    std::stringstream ss(field);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) throw ParseError(lineno, "empty interactor id in member list");
        ids.push_back(item);
    }
    if (ids.empty()) throw ParseError(lineno, "member list is empty");
    return ids;
}

} // namespace

PpiDataset parse_dataset(std::istream& in) {
    PpiDataset ds;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::vector<std::string>> clusters;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("did=");
            if (pos != std::string::npos && ds.did.empty()) ds.did = trim(line.substr(pos + 4));
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(lineno, "expected '<KIND><TAB><value>'");
        const std::string kind = line.substr(0, tab);
        const std::string value = line.substr(tab + 1);
        if (kind == "INTERACTOR") {
            const std::string id = trim(value);
            if (id.empty() || id.find(';') != std::string::npos) {
                throw ParseError(lineno, "bad interactor id '" + value + "'");
            }
            if (index.emplace(id, ds.interactors.size()).second) ds.interactors.push_back(id);
        } else if (kind == "INTERACTION") {
            std::vector<std::size_t> members;
            for (const auto& id : split_ids(value, lineno)) {
                auto it = index.find(id);
                if (it == index.end()) {
                    throw UnknownInteractor("line " + std::to_string(lineno) +
                                            ": undeclared interactor '" + id + "'");
                }
                members.push_back(it->second);
            }
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            ds.interactions.push_back(std::move(members));
        } else if (kind == "CLUSTER") {
            clusters.push_back(split_ids(value, lineno));
        } else {
            throw ParseError(lineno, "unknown row kind '" + kind + "'");
        }
    }

    if (!clusters.empty()) {
        std::vector<char> in_core(ds.interactors.size(), 0);
        for (const auto& members : ds.interactions) {
            for (auto i : members) in_core[i] = 1;
        }
        for (const auto& ids : clusters) {
            std::vector<std::size_t> members;
            for (const auto& id : ids) {
                auto it = index.find(id);
                if (it != index.end() && in_core[it->second]) members.push_back(it->second);
            }
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            if (members.size() > 2) ds.interactions.push_back(std::move(members));
        }
    }
    return ds;
}

PpiDataset parse_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset: " + path);
    return parse_dataset(in);
}

PpiNetwork build_network(const PpiDataset& ds, double pe, std::uint64_t seed) {
    if (!(pe >= 0.0 && pe <= 1.0)) throw Error("pe must lie in [0,1]");
    PpiNetwork net;
    constexpr auto kAbsent = static_cast<NodeId>(-1);
    std::vector<NodeId> node_of(ds.interactors.size(), kAbsent);
    for (const auto& members : ds.interactions) {
        for (auto i : members) node_of[i] = 0;
    }
    NodeId next = 0;
    for (std::size_t i = 0; i < node_of.size(); ++i) {
        if (node_of[i] != kAbsent) {
            node_of[i] = next++;
            net.names.push_back(ds.interactors[i]);
        }
    }

    Rng rng(seed);
    std::vector<Edge> edges;
    for (const auto& members : ds.interactions) {
        if (members.size() == 2) {
            edges.push_back({node_of[members[0]], node_of[members[1]]});
        } else if (members.size() > 2) {
            std::vector<NodeId> nodes;
            for (auto i : members) nodes.push_back(node_of[i]);
            std::sort(nodes.begin(), nodes.end());
            net.complexes.complexes.push_back(nodes);

            // Grow the tree in a random order; each newcomer attaches to a
            // random node already in the tree.
            std::shuffle(nodes.begin(), nodes.end(), rng);
            std::set<std::pair<NodeId, NodeId>> tree;
            for (std::size_t a = 1; a < nodes.size(); ++a) {
                const NodeId anchor = nodes[uniform_index(rng, a)];
                edges.push_back({nodes[a], anchor});
                tree.insert(std::minmax(nodes[a], anchor));
            }
            std::sort(nodes.begin(), nodes.end());
            for (std::size_t a = 0; a < nodes.size(); ++a) {
                for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                    if (tree.count({nodes[a], nodes[b]})) continue;
                    if (uniform01(rng) < pe) edges.push_back({nodes[a], nodes[b]});
                }
            }
        }
    }
    net.graph = Graph::from_edges(next, edges);
    return net;
}

DatasetStats dataset_stats(const Graph& g, const ComplexSet& cs) {
    DatasetStats s;
    s.nodes = g.node_count();
    s.links = g.edge_count();
    s.degree = summarize_degrees(degree_sequence(g));
    s.complexes = cs.size();
    std::set<NodeId> members;
    std::vector<double> sizes;
    for (const auto& c : cs.complexes) {
        members.insert(c.begin(), c.end());
        sizes.push_back(static_cast<double>(c.size()));
    }
    s.complex_nodes = members.size();
    s.complex_node_pct =
        s.nodes ? 100.0 * static_cast<double>(s.complex_nodes) / static_cast<double>(s.nodes) : 0.0;
    if (!sizes.empty()) {
        s.size_min = static_cast<std::size_t>(*std::min_element(sizes.begin(), sizes.end()));
        s.size_max = static_cast<std::size_t>(*std::max_element(sizes.begin(), sizes.end()));
        s.size_avg = stats::mean(sizes);
        if (sizes.size() >= 2) s.size_sd = stats::sample_sd(sizes);
    }
    return s;
}

std::string dataset_stats_header() {
    return "label,nodes,complex_nodes,complex_node_pct,complexes,size_min,size_max,size_avg,size_sd,"
           "links,degree_min,degree_max,degree_avg,degree_sd";
}

std::string dataset_stats_row(const std::string& label, const DatasetStats& s) {
    std::ostringstream os;
    os << label << ',' << s.nodes << ',' << s.complex_nodes << ',' << fixed(s.complex_node_pct, 2)
       << ',' << s.complexes << ',' << s.size_min << ',' << s.size_max << ','
       << fixed(s.size_avg, 1) << ',' << (s.size_sd ? fixed(*s.size_sd, 1) : std::string("-"))
       << ',' << s.links << ',' << s.degree.min << ',' << s.degree.max << ','
       << fixed(s.degree.mean, 1) << ',' << fixed(s.degree.stdev, 1);
    return os.str();
}

namespace {

constexpr std::array<int, 3> kPe{0, 25, 50};
constexpr std::array<int, 4> kPr{0, 2, 4, 10};

std::optional<int> to_hundredths(double x, std::span<const int> allowed) {
    const auto h = static_cast<int>(std::lround(x * 100.0));
    if (std::abs(x * 100.0 - h) > 1e-6) return std::nullopt;
    if (std::find(allowed.begin(), allowed.end(), h) == allowed.end()) return std::nullopt;
    return h;
}

} // namespace

NetworkId NetworkId::make(int odid, double pe, double pr) {
    if (odid < 1 || odid > 18) throw InvalidNid("ODID " + std::to_string(odid) + " outside 1..18");
    const auto pe_h = to_hundredths(pe, kPe);
    if (!pe_h) throw InvalidNid("Pe " + fixed(pe, 4) + " not in {0.00, 0.25, 0.50}");
    const auto pr_h = to_hundredths(pr, kPr);
    if (!pr_h) throw InvalidNid("Pr " + fixed(pr, 4) + " not in {0.00, 0.02, 0.04, 0.10}");
    return NetworkId(odid, *pe_h, *pr_h);
}

NetworkId NetworkId::parse(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos || text.size() != dot + 3 ||
        text.find_first_not_of("0123456789.") != std::string::npos || dot == 0) {
        throw InvalidNid("malformed NID '" + text + "'");
    }
    const int odid = std::stoi(text.substr(0, dot));
    const int rest = std::stoi(text.substr(dot + 1));
    for (int pe : kPe) {
        for (int pr : kPr) {
            if (pe + pr == rest) return make(odid, pe / 100.0, pr / 100.0);
        }
    }
    throw InvalidNid("NID '" + text + "' does not decompose into Pe + Pr");
}

std::string NetworkId::group() const {
    return fixed((odid_ * 100 + pe_hundredths_) / 100.0, 2);
}

std::string NetworkId::to_string() const { return fixed(hundredths() / 100.0, 2); }

std::optional<int> odid_for_did(const std::string& did) {
    static const std::map<std::string, int> kOdid{
        {"1S", 1},  {"3S", 2},  {"4S", 3},  {"5S", 4},  {"1D", 5},  {"4D", 6},
        {"5D", 7},  {"1C", 8},  {"4C", 9},  {"5C", 10}, {"4E", 11}, {"5E", 12},
        {"4P", 13}, {"5P", 14}, {"4H", 15}, {"5H", 16}, {"7H", 17}, {"7X", 18}};
    auto it = kOdid.find(did);
    if (it == kOdid.end()) return std::nullopt;
    return it->second;
}

ComplexSet read_complexes(std::istream& in) {
    ComplexSet cs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<NodeId> members;
        for (const auto& id : split_ids(line, lineno)) {
            if (id.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(lineno, "complex member '" + id + "' is not a node id");
            }
            members.push_back(static_cast<NodeId>(std::stoul(id)));
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        cs.complexes.push_back(std::move(members));
    }
    return cs;
}

ComplexSet read_complexes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open complexes file: " + path);
    return read_complexes(in);
}

void write_complexes(std::ostream& out, const ComplexSet& cs) {
    for (const auto& c : cs.complexes) {
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ";" : "") << c[i];
        out << '\n';
    }
}

void write_complexes_file(const std::string& path, const ComplexSet& cs) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write complexes file: " + path);
    write_complexes(out, cs);
}

} // namespace colornet
