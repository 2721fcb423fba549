#pragma once

#include <random>
#include <vector>

#include "grouptest/network.hpp"
#include "grouptest/partition.hpp"

namespace grouptest {

// Outcome of a single-generation epidemic: the seed plus the subset of its
// neighbors it infected.
struct InfectionState {
    int seed_node = -1;
    std::vector<char> infected;
    int infected_count = 0;
};

// Draws a uniform seed, then infects each of its neighbors independently
// with probability alpha. Consumes the stream in a fixed order (seed draw,
// then neighbors ascending).
InfectionState seed_epidemic(const Network& network, double alpha,
                             std::mt19937_64& eng);

// Node -> test-group mapping. All groups have the nominal size except
// possibly one remainder group of size N mod n.
struct GroupAssignment {
    std::vector<int> group_of;
    std::vector<int> group_sizes;
    int nominal_size = 0;

    int group_count() const { return static_cast<int>(group_sizes.size()); }
};

// Uniform random permutation chunked into consecutive blocks of n.
GroupAssignment group_random(int node_count, int group_size, std::mt19937_64& eng);

// Deterministic community grouping: communities in descending size (ties by
// id) each emit floor(size/n) whole groups from their own members; all
// community remainders, kept contiguous in that order, are concatenated and
// chunked into the final groups. Members are taken in ascending node index.
GroupAssignment group_by_community(const Partition& partition, int group_size);

// Same rule with an explicit member order (must be a permutation of all
// nodes); members of each community keep their relative order.
GroupAssignment group_by_community(const Partition& partition, int group_size,
                                   const std::vector<int>& node_order);

// Oracle grouping: infected nodes are packed first, so exactly
// max(1, ceil(I/n)) groups test positive.
GroupAssignment group_perfect(const InfectionState& state, int group_size);

struct TwoStageOutcome {
    int total_tests = 0;
    int positive_groups = 0;
};

// Stage 1 tests every group; stage 2 retests each member of every positive
// group individually. Tests are perfect.
TwoStageOutcome run_two_stage_detail(const InfectionState& state,
                                     const GroupAssignment& assignment);
int run_two_stage(const InfectionState& state, const GroupAssignment& assignment);

}  // namespace grouptest
