#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace grouptest {

// Undirected simple graph over dense node indices 0..node_count-1.
// Edges are stored canonically: first index < second, sorted, deduplicated.
class Network {
public:
    Network() = default;

    // Canonicalizes the edge list: orients pairs, drops self-loops and
    // duplicates. Throws ParameterError on out-of-range indices.
    Network(int node_count, std::vector<std::pair<int, int>> edges,
            std::vector<std::string> node_labels = {});

    int node_count() const { return node_count_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
    int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }

    bool has_labels() const { return !node_labels_.empty(); }
    // Original identifier when the graph was ingested, index as text otherwise.
    std::string display_label(int node) const;

private:
    int node_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::string> node_labels_;
};

struct EdgeListStats {
    std::size_t edge_rows = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

// Parses the edge-list format: one edge per line, two node-id tokens
// separated by commas, tabs or runs of spaces; extra trailing columns are
// ignored; lines starting with '#' or '%' and blank lines are skipped.
// Node indices follow first appearance; original ids become labels.
// Throws ParseError (with line number) on malformed rows and EmptyInput
// when no valid edge survives.
Network load_edge_list(std::istream& in, EdgeListStats* stats = nullptr);

// Writes the same format, one edge per line in canonical index order, so
// output is bit-stable for a given graph.
void save_edge_list(std::ostream& out, const Network& network);

}  // namespace grouptest
