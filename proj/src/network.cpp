#include "grouptest/network.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "grouptest/errors.hpp"

namespace grouptest {

Network::Network(int node_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> node_labels)
    : node_count_(node_count), node_labels_(std::move(node_labels)) {
    if (node_count_ < 0) throw ParameterError("Network: negative node count");
    if (!node_labels_.empty() &&
        node_labels_.size() != static_cast<std::size_t>(node_count_))
        throw ParameterError("Network: label count does not match node count");

    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_)
            throw ParameterError("Network: edge index out of range");
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.resize(node_count_);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::string Network::display_label(int node) const {
    return has_labels() ? node_labels_[node] : std::to_string(node);
}

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ','; }

// First two tokens of the row; extra columns are ignored.
int split_two(const std::string& line, std::string& a, std::string& b) {
    int found = 0;
    std::size_t i = 0;
    while (i < line.size() && found < 2) {
        while (i < line.size() && is_separator(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_separator(line[i])) ++i;
        if (i > start) {
            (found == 0 ? a : b) = line.substr(start, i - start);
            ++found;
        }
    }
    return found;
}

}  // namespace

Network load_edge_list(std::istream& in, EdgeListStats* stats) {
    std::unordered_map<std::string, int> index_of;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    EdgeListStats local;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = index_of.try_emplace(token, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t,");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::string a, b;
        if (split_two(line, a, b) < 2)
            throw ParseError(line_no, "expected two node ids, got '" + line + "'");
        const int u = intern(a);
        const int v = intern(b);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
        ++local.edge_rows;
    }
    if (edges.empty()) throw EmptyInput("edge list: no valid edges");

    std::sort(edges.begin(), edges.end());
    const auto unique_end = std::unique(edges.begin(), edges.end());
    local.duplicates_collapsed = static_cast<std::size_t>(edges.end() - unique_end);
    edges.erase(unique_end, edges.end());

    if (stats) *stats = local;
    return Network(static_cast<int>(labels.size()), std::move(edges), std::move(labels));
}

void save_edge_list(std::ostream& out, const Network& network) {
    for (const auto& [u, v] : network.edges())
        out << network.display_label(u) << ' ' << network.display_label(v) << '\n';
}

}  // namespace grouptest
