#include "grouptest/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "grouptest/errors.hpp"
#include "grouptest/rng.hpp"

namespace grouptest {

const char* to_string(SimStrategy strategy) {
    switch (strategy) {
        case SimStrategy::dorfman: return "dorfman";
        case SimStrategy::network: return "network";
        case SimStrategy::perfect: return "perfect";
    }
    return "?";
}

std::vector<int> SimStats::replicate_tests() const {
    std::vector<int> tests(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) tests[r] = records[r].tests;
    return tests;
}

SimStats monte_carlo(const Network& network, const Partition* partition, double alpha,
                     int group_size, SimStrategy strategy, int replicates,
                     std::uint64_t master_seed, int threads) {
    if (replicates < 1) throw ParameterError("monte_carlo: replicates >= 1");
    if (!(group_size >= 1 && group_size <= network.node_count()))
        throw ParameterError("monte_carlo: requires 1 <= n <= N");
    if (strategy == SimStrategy::network && partition == nullptr)
        throw ParameterError("monte_carlo: network strategy requires a partition");
    if (strategy == SimStrategy::network &&
        partition->node_count() != network.node_count())
        throw ParameterError("monte_carlo: partition does not cover the network");

    SimStats stats;
    stats.strategy = strategy;
    stats.group_size = group_size;
    stats.replicates = replicates;
    stats.master_seed = master_seed;
    stats.records.resize(replicates);

    GroupAssignment fixed_assignment;
    if (strategy == SimStrategy::network)
        fixed_assignment = group_by_community(*partition, group_size);

    auto run_range = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r) {
            std::mt19937_64 eng = substream(master_seed, static_cast<std::uint64_t>(r));
            const InfectionState state = seed_epidemic(network, alpha, eng);

            TwoStageOutcome outcome;
            switch (strategy) {
                case SimStrategy::dorfman:
                    outcome = run_two_stage_detail(
                        state, group_random(network.node_count(), group_size, eng));
                    break;
                case SimStrategy::network:
                    outcome = run_two_stage_detail(state, fixed_assignment);
                    break;
                case SimStrategy::perfect:
                    outcome = run_two_stage_detail(state, group_perfect(state, group_size));
                    break;
            }
            stats.records[r] = {r, state.seed_node, state.infected_count,
                                outcome.positive_groups, outcome.total_tests};
        }
    };

    threads = std::clamp(threads, 1, replicates);
    if (threads == 1) {
        run_range(0, replicates);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const int chunk = (replicates + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(replicates, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& worker : pool) worker.join();
    }

    // Aggregate in replicate order, independent of execution order.
    double sum = 0.0;
    for (const auto& record : stats.records) sum += record.tests;
    stats.mean = sum / replicates;
    if (replicates > 1) {
        double ss = 0.0;
        for (const auto& record : stats.records) {
            const double d = record.tests - stats.mean;
            ss += d * d;
        }
        stats.std_error = std::sqrt(ss / (static_cast<double>(replicates) *
                                          (replicates - 1)));
    }
    return stats;
}

void save_replicates_csv(std::ostream& out, const SimStats& stats) {
    out << "replicate,seed_node,infected,positive_groups,tests\n";
    for (const auto& record : stats.records)
        out << record.replicate << ',' << record.seed_node << ',' << record.infected
            << ',' << record.positive_groups << ',' << record.tests << '\n';
}

}  // namespace grouptest
