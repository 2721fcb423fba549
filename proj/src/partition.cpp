#include "grouptest/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "grouptest/errors.hpp"

namespace grouptest {

double modularity(const Network& network, const std::vector<int>& community_of,
                  double resolution) {
    if (community_of.size() != static_cast<std::size_t>(network.node_count()))
        throw ParameterError("modularity: labeling does not cover the network");
    const double total_edges = static_cast<double>(network.edge_count());
    if (total_edges == 0.0) return 0.0;

    int communities = 0;
    for (const int c : community_of) {
        if (c < 0) throw ParameterError("modularity: negative community id");
        communities = std::max(communities, c + 1);
    }
    std::vector<double> intra(communities, 0.0);
    std::vector<double> degree_sum(communities, 0.0);
    for (const auto& [u, v] : network.edges())
        if (community_of[u] == community_of[v]) intra[community_of[u]] += 1.0;
    for (int node = 0; node < network.node_count(); ++node)
        degree_sum[community_of[node]] += network.degree(node);

    double q = 0.0;
    for (int c = 0; c < communities; ++c) {
        const double share = degree_sum[c] / (2.0 * total_edges);
        q += intra[c] / total_edges - resolution * share * share;
    }
    return q;
}

Partition make_partition(const Network& network, std::vector<int> community_of) {
    if (community_of.size() != static_cast<std::size_t>(network.node_count()))
        throw ParameterError("make_partition: labeling does not cover the network");

    Partition partition;
    std::unordered_map<int, int> dense;
    partition.community_of.resize(community_of.size());
    for (std::size_t node = 0; node < community_of.size(); ++node) {
        auto [it, inserted] =
            dense.try_emplace(community_of[node], static_cast<int>(dense.size()));
        const int id = it->second;
        partition.community_of[node] = id;
        if (inserted) partition.community_sizes.push_back(0);
        ++partition.community_sizes[id];
    }
    partition.modularity = modularity(network, partition.community_of);
    return partition;
}

PartitionStats partition_stats(const Partition& partition) {
    PartitionStats stats;
    stats.communities = partition.community_count();
    if (stats.communities == 0) return stats;
    const auto [lo, hi] = std::minmax_element(partition.community_sizes.begin(),
                                              partition.community_sizes.end());
    stats.min_size = *lo;
    stats.max_size = *hi;
    stats.mean_size =
        static_cast<double>(partition.node_count()) / stats.communities;
    return stats;
}

PQEstimate estimate_pq(const Network& network, const Partition& partition) {
    if (partition.node_count() != network.node_count())
        throw ParameterError("estimate_pq: partition does not cover the network");

    PQEstimate est;
    for (const int size : partition.community_sizes)
        est.within_pairs += static_cast<std::int64_t>(size) * (size - 1) / 2;
    const std::int64_t nodes = network.node_count();
    est.between_pairs = nodes * (nodes - 1) / 2 - est.within_pairs;

    for (const auto& [u, v] : network.edges()) {
        if (partition.community_of[u] == partition.community_of[v])
            ++est.within_edges;
        else
            ++est.between_edges;
    }
    if (est.within_pairs > 0)
        est.p_hat = static_cast<double>(est.within_edges) / est.within_pairs;
    if (est.between_pairs > 0)
        est.q_hat = static_cast<double>(est.between_edges) / est.between_pairs;
    return est;
}

Partition load_partition_csv(std::istream& in, const Network& network) {
    std::unordered_map<std::string, int> node_index;
    for (int node = 0; node < network.node_count(); ++node)
        node_index.emplace(network.display_label(node), node);

    std::vector<int> community_of(network.node_count(), -1);
    std::unordered_map<std::string, int> community_ids;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t assigned = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "node,community")
                throw ParseError(line_no, "expected header 'node,community'");
            header_seen = true;
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(line_no, "expected 'node,community' row");
        const std::string node_token = line.substr(0, comma);
        const std::string community_token = line.substr(comma + 1);

        const auto node_it = node_index.find(node_token);
        if (node_it == node_index.end())
            throw ParseError(line_no, "unknown node '" + node_token + "'");
        if (community_of[node_it->second] != -1)
            throw ParseError(line_no, "node '" + node_token + "' assigned twice");

        const auto [cid_it, inserted] = community_ids.try_emplace(
            community_token, static_cast<int>(community_ids.size()));
        community_of[node_it->second] = cid_it->second;
        ++assigned;
    }
    if (!header_seen) throw EmptyInput("partition file: missing header");
    if (assigned != static_cast<std::size_t>(network.node_count()))
        throw ParseError(line_no, "partition does not cover every node");
    return make_partition(network, std::move(community_of));
}

void save_partition_csv(std::ostream& out, const Network& network,
                        const Partition& partition) {
    out << "node,community\n";
    for (int node = 0; node < network.node_count(); ++node)
        out << network.display_label(node) << ',' << partition.community_of[node]
            << '\n';
}

}  // namespace grouptest
