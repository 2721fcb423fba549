#pragma once

#include <cstdint>

#include "grouptest/network.hpp"
#include "grouptest/partition.hpp"

namespace grouptest {

// Greedy modularity maximization (local node moves followed by community
// aggregation, repeated until no gain). Deterministic for a given seed:
// node visit order is a seeded shuffle per pass and equal-gain moves go to
// the lowest community id. Isolated nodes end up as singleton communities.
// The returned Partition carries resolution-1 modularity even when the
// optimization ran at a different resolution.
Partition louvain(const Network& network, std::uint64_t seed, double resolution = 1.0);

}  // namespace grouptest
