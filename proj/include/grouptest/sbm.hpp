#pragma once

#include <cstdint>

#include "grouptest/network.hpp"
#include "grouptest/partition.hpp"

namespace grouptest {

struct SbmResult {
    Network network;
    // Ground-truth block structure, modularity computed on the drawn graph.
    Partition partition;
    // False when m does not divide N and the last community holds the
    // remainder.
    bool uniform_communities = true;
};

// Stochastic block model: N nodes in communities of size m; node pairs are
// joined independently with probability p inside a community and q across
// communities. Deterministic for a given seed.
SbmResult generate_sbm(int N, int m, double p, double q, std::uint64_t seed);

}  // namespace grouptest
