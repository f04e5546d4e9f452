#pragma once

#include "colornet/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace colornet {

enum class InteractionClass { Self, Binary, Complex };

InteractionClass classify(std::size_t distinct_participants);

/// Interactors and interactions of one normalized PPI datafile.
///
/// Interactions hold distinct interactor indices (sorted). Interactions
/// derived from cluster rows are appended after the listed interactions and
/// are always complexes.
struct PpiDataset {
    std::string did;
    std::vector<std::string> interactors;
    std::vector<std::vector<std::size_t>> interactions;

    struct Counts {
        std::size_t self = 0;
        std::size_t binary = 0;
        std::size_t complex = 0;
    };
    Counts counts() const;

    /// Declared interactors that take part in no interaction.
    std::vector<std::size_t> orphan_interactors() const;
};

/// Parses the normalized format:
///
///     # did=<label>
///     INTERACTOR<TAB><id>
///     INTERACTION<TAB><id>;<id>;...
///     CLUSTER<TAB><id>;<id>;...
///
/// Other '#' lines are comments. CLUSTER rows are filtered to interactors
/// that appear in some INTERACTION and kept as complexes only when more than
/// two members survive. Throws ParseError (with line number) on malformed
/// rows and UnknownInteractor when an INTERACTION names an undeclared id.
PpiDataset parse_dataset(std::istream& in);
PpiDataset parse_dataset_file(const std::string& path);

/// Annotated complexes as sorted node-id lists; may overlap.
struct ComplexSet {
    std::vector<std::vector<NodeId>> complexes;

    std::size_t size() const noexcept { return complexes.size(); }
    bool empty() const noexcept { return complexes.empty(); }
};

struct PpiNetwork {
    Graph graph;
    ComplexSet complexes;
    std::vector<std::string> names;  ///< node id -> interactor id
};

/// Builds the network: participating interactors become nodes (in
/// declaration order), binary interactions become links, and each complex
/// of size k is joined by a random spanning tree grown one node at a time
/// plus each remaining member pair with probability pe. Self interactions
/// add nothing. Duplicate links collapse.
///
/// One uniform draw is consumed per non-tree pair whatever pe is, so with a
/// fixed seed the link set grows monotonically in pe.
PpiNetwork build_network(const PpiDataset& ds, double pe, std::uint64_t seed);

struct DatasetStats {
    std::size_t nodes = 0;
    std::size_t complex_nodes = 0;
    double complex_node_pct = 0.0;
    std::size_t complexes = 0;
    std::size_t size_min = 0;
    std::size_t size_max = 0;
    double size_avg = 0.0;
    std::optional<double> size_sd;  ///< sample sd; absent with fewer than two complexes
    std::size_t links = 0;
    DegreeSummary degree;
};

DatasetStats dataset_stats(const Graph& g, const ComplexSet& cs);

/// CSV header and row matching the fixed/variable characteristics tables.
std::string dataset_stats_header();
std::string dataset_stats_row(const std::string& label, const DatasetStats& s);

/// Network label ODID + Pe + Pr, held exactly in hundredths.
class NetworkId {
public:
    /// Throws InvalidNid unless odid is 1..18, pe in {0, .25, .5} and
    /// pr in {0, .02, .04, .10}.
    static NetworkId make(int odid, double pe, double pr);
    /// Inverse of to_string(), e.g. "4.29".
    static NetworkId parse(const std::string& text);

    int odid() const noexcept { return odid_; }
    double pe() const noexcept { return pe_hundredths_ / 100.0; }
    double pr() const noexcept { return pr_hundredths_ / 100.0; }
    double value() const noexcept { return hundredths() / 100.0; }
    int hundredths() const noexcept { return odid_ * 100 + pe_hundredths_ + pr_hundredths_; }
    /// Group key ODID + Pe, as in the per-group average rows.
    std::string group() const;
    std::string to_string() const;

    friend bool operator==(const NetworkId&, const NetworkId&) = default;

private:
    NetworkId(int odid, int pe, int pr) : odid_(odid), pe_hundredths_(pe), pr_hundredths_(pr) {}
    int odid_;
    int pe_hundredths_;
    int pr_hundredths_;
};

inline NetworkId make_nid(int odid, double pe, double pr) { return NetworkId::make(odid, pe, pr); }

/// Ordinal of a dataset label (e.g. "5S" -> 4); nullopt for unknown labels.
std::optional<int> odid_for_did(const std::string& did);

// Complexes file: one complex per line, node ids separated by ';'.
ComplexSet read_complexes(std::istream& in);
ComplexSet read_complexes_file(const std::string& path);
void write_complexes(std::ostream& out, const ComplexSet& cs);
void write_complexes_file(const std::string& path, const ComplexSet& cs);

} // namespace colornet
