#include "grouptest/epidemic.hpp"

#include <algorithm>
#include <numeric>

#include "grouptest/errors.hpp"
#include "grouptest/rng.hpp"

namespace grouptest {

InfectionState seed_epidemic(const Network& network, double alpha,
                             std::mt19937_64& eng) {
    if (network.node_count() == 0) throw ParameterError("seed_epidemic: empty network");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ParameterError("seed_epidemic: alpha in [0,1]");

    InfectionState state;
    state.infected.assign(network.node_count(), 0);
    state.seed_node = static_cast<int>(uniform_index(eng, network.node_count()));
    state.infected[state.seed_node] = 1;
    state.infected_count = 1;
    for (const int neighbor : network.neighbors(state.seed_node)) {
        if (bernoulli(eng, alpha)) {
            state.infected[neighbor] = 1;
            ++state.infected_count;
        }
    }
    return state;
}

namespace {

// Chunks an ordered node sequence into consecutive groups of n.
GroupAssignment chunk_sequence(const std::vector<int>& sequence, int group_size) {
    const int node_count = static_cast<int>(sequence.size());
    GroupAssignment assignment;
    assignment.nominal_size = group_size;
    assignment.group_of.assign(node_count, -1);
    const int groups = (node_count + group_size - 1) / group_size;
    assignment.group_sizes.assign(groups, 0);
    for (int position = 0; position < node_count; ++position) {
        const int group = position / group_size;
        assignment.group_of[sequence[position]] = group;
        ++assignment.group_sizes[group];
    }
    return assignment;
}

void check_group_size(int node_count, int group_size, const char* where) {
    if (!(group_size >= 1 && group_size <= node_count))
        throw ParameterError(std::string(where) + ": requires 1 <= n <= N");
}

}  // namespace

GroupAssignment group_random(int node_count, int group_size, std::mt19937_64& eng) {
    check_group_size(node_count, group_size, "group_random");
    std::vector<int> order(node_count);
    std::iota(order.begin(), order.end(), 0);
    shuffle_vector(order, eng);
    return chunk_sequence(order, group_size);
}

GroupAssignment group_by_community(const Partition& partition, int group_size) {
    std::vector<int> order(partition.node_count());
    std::iota(order.begin(), order.end(), 0);
    return group_by_community(partition, group_size, order);
}

GroupAssignment group_by_community(const Partition& partition, int group_size,
                                   const std::vector<int>& node_order) {
    check_group_size(partition.node_count(), group_size, "group_by_community");
    if (node_order.size() != static_cast<std::size_t>(partition.node_count()))
        throw ParameterError("group_by_community: node order must cover every node");

    // Members per community, keeping node_order's relative order.
    std::vector<std::vector<int>> members(partition.community_count());
    for (const int node : node_order)
        members[partition.community_of[node]].push_back(node);

    std::vector<int> by_size(partition.community_count());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        return partition.community_sizes[a] > partition.community_sizes[b] ||
               (partition.community_sizes[a] == partition.community_sizes[b] && a < b);
    });

    std::vector<int> sequence;
    std::vector<int> leftovers;
    sequence.reserve(partition.node_count());
    for (const int community : by_size) {
        const auto& list = members[community];
        const std::size_t whole = list.size() / group_size * group_size;
        sequence.insert(sequence.end(), list.begin(), list.begin() + whole);
        leftovers.insert(leftovers.end(), list.begin() + whole, list.end());
    }
    sequence.insert(sequence.end(), leftovers.begin(), leftovers.end());
    return chunk_sequence(sequence, group_size);
}

GroupAssignment group_perfect(const InfectionState& state, int group_size) {
    const int node_count = static_cast<int>(state.infected.size());
    check_group_size(node_count, group_size, "group_perfect");

    std::vector<int> sequence;
    sequence.reserve(node_count);
    for (int node = 0; node < node_count; ++node)
        if (state.infected[node]) sequence.push_back(node);
    for (int node = 0; node < node_count; ++node)
        if (!state.infected[node]) sequence.push_back(node);
    return chunk_sequence(sequence, group_size);
}

TwoStageOutcome run_two_stage_detail(const InfectionState& state,
                                     const GroupAssignment& assignment) {
    if (assignment.group_of.size() != state.infected.size())
        throw ParameterError("run_two_stage: assignment covers a different node set");

    std::vector<char> positive(assignment.group_count(), 0);
    for (std::size_t node = 0; node < state.infected.size(); ++node)
        if (state.infected[node]) positive[assignment.group_of[node]] = 1;

    TwoStageOutcome outcome;
    outcome.total_tests = assignment.group_count();
    for (int group = 0; group < assignment.group_count(); ++group) {
        if (positive[group]) {
            ++outcome.positive_groups;
            outcome.total_tests += assignment.group_sizes[group];
        }
    }
    return outcome;
}

int run_two_stage(const InfectionState& state, const GroupAssignment& assignment) {
    return run_two_stage_detail(state, assignment).total_tests;
}

}  // namespace grouptest
