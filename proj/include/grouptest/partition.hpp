#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "grouptest/network.hpp"

namespace grouptest {

// Node -> community labeling with dense community ids 0..C-1.
struct Partition {
    std::vector<int> community_of;
    std::vector<int> community_sizes;
    // Standard (resolution 1) modularity of this labeling on the network
    // it was built from.
    double modularity = 0.0;

    int community_count() const { return static_cast<int>(community_sizes.size()); }
    int node_count() const { return static_cast<int>(community_of.size()); }
};

// Newman modularity of a labeling: sum over communities of
// L_c / M - resolution * (d_c / 2M)^2. Zero for an edgeless graph.
double modularity(const Network& network, const std::vector<int>& community_of,
                  double resolution = 1.0);

// Renumbers labels densely (first appearance by node index), tallies sizes
// and computes the resolution-1 modularity.
Partition make_partition(const Network& network, std::vector<int> community_of);

struct PartitionStats {
    int communities = 0;
    int min_size = 0;
    int max_size = 0;
    double mean_size = 0.0;
};

PartitionStats partition_stats(const Partition& partition);

// Maximum-likelihood block-density estimates: edges observed over pairs
// available, within and between communities. A side with no pairs (e.g.
// q_hat under a single community) is reported absent.
struct PQEstimate {
    std::optional<double> p_hat;
    std::optional<double> q_hat;
    std::int64_t within_edges = 0;
    std::int64_t within_pairs = 0;
    std::int64_t between_edges = 0;
    std::int64_t between_pairs = 0;
};

PQEstimate estimate_pq(const Network& network, const Partition& partition);

// CSV with header "node,community"; node column carries the display label.
// '#'-prefixed lines before the header are skipped on load.
Partition load_partition_csv(std::istream& in, const Network& network);
void save_partition_csv(std::ostream& out, const Network& network,
                        const Partition& partition);

}  // namespace grouptest
