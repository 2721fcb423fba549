#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "grouptest/epidemic.hpp"
#include "grouptest/network.hpp"
#include "grouptest/partition.hpp"

namespace grouptest {

enum class SimStrategy { dorfman, network, perfect };

const char* to_string(SimStrategy strategy);

struct ReplicateOutcome {
    int replicate = 0;
    int seed_node = 0;
    int infected = 0;
    int positive_groups = 0;
    int tests = 0;
};

struct SimStats {
    SimStrategy strategy = SimStrategy::dorfman;
    int group_size = 0;
    int replicates = 0;
    std::uint64_t master_seed = 0;
    std::vector<ReplicateOutcome> records;
    double mean = 0.0;
    double std_error = 0.0;

    std::vector<int> replicate_tests() const;
};

// Runs `replicates` independent epidemics and two-stage test counts.
// Replicate r draws from a stream derived from (master_seed, r), so the
// result is bit-identical for any thread count. Community grouping is a
// fixed function of the partition and is built once; Dorfman grouping is
// re-randomized per replicate; perfect grouping depends on the realized
// infections. The partition may be null for the dorfman/perfect strategies.
SimStats monte_carlo(const Network& network, const Partition* partition, double alpha,
                     int group_size, SimStrategy strategy, int replicates,
                     std::uint64_t master_seed, int threads = 1);

// One row per replicate: replicate,seed_node,infected,positive_groups,tests.
void save_replicates_csv(std::ostream& out, const SimStats& stats);

}  // namespace grouptest
