#include "grouptest/louvain.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "grouptest/errors.hpp"
#include "grouptest/rng.hpp"

namespace grouptest {

namespace {

// Weighted multigraph view used across aggregation levels.
struct LevelGraph {
    std::vector<std::vector<std::pair<int, double>>> adjacency;
    std::vector<double> self_loop;  // weight of edges internal to the meta-node
    std::vector<double> strength;   // sum of incident weights, self-loops twice
    double total_weight = 0.0;

    int size() const { return static_cast<int>(adjacency.size()); }
};

LevelGraph level_from_network(const Network& network) {
    LevelGraph graph;
    graph.adjacency.resize(network.node_count());
    graph.self_loop.assign(network.node_count(), 0.0);
    graph.strength.assign(network.node_count(), 0.0);
    for (const auto& [u, v] : network.edges()) {
        graph.adjacency[u].emplace_back(v, 1.0);
        graph.adjacency[v].emplace_back(u, 1.0);
        graph.strength[u] += 1.0;
        graph.strength[v] += 1.0;
    }
    graph.total_weight = static_cast<double>(network.edge_count());
    return graph;
}

// One sweep over all nodes in shuffled order; returns the number of moves.
int local_move_pass(const LevelGraph& graph, std::vector<int>& community,
                    std::vector<double>& community_strength, double resolution,
                    std::mt19937_64& eng) {
    std::vector<int> order(graph.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle_vector(order, eng);

    const double two_w = 2.0 * graph.total_weight;
    std::vector<double> weight_to(graph.size(), 0.0);
    std::vector<int> touched;
    int moves = 0;

    for (const int node : order) {
        const int old_community = community[node];
        touched.clear();
        for (const auto& [neighbor, weight] : graph.adjacency[node]) {
            const int c = community[neighbor];
            if (weight_to[c] == 0.0) touched.push_back(c);
            weight_to[c] += weight;
        }
        community_strength[old_community] -= graph.strength[node];

        auto gain = [&](int c) {
            return weight_to[c] -
                   resolution * graph.strength[node] * community_strength[c] / two_w;
        };
        int best = old_community;
        double best_gain = gain(old_community);
        for (const int c : touched) {
            const double g = gain(c);
            if (g > best_gain || (g == best_gain && c < best)) {
                best = c;
                best_gain = g;
            }
        }
        // Only strict improvements move; equal-gain alternatives with a
        // lower id already won the comparison above.
        if (best != old_community && best_gain > gain(old_community)) {
            community[node] = best;
            ++moves;
        }
        community_strength[community[node]] += graph.strength[node];
        for (const int c : touched) weight_to[c] = 0.0;
    }
    return moves;
}

// Collapses communities into meta-nodes; ids renumbered by first appearance
// over ascending node index.
LevelGraph aggregate(const LevelGraph& graph, std::vector<int>& community) {
    std::vector<int> dense(graph.size(), -1);
    int next = 0;
    for (int node = 0; node < graph.size(); ++node) {
        int& id = dense[community[node]];
        if (id == -1) id = next++;
        community[node] = id;
    }

    LevelGraph coarse;
    coarse.adjacency.resize(next);
    coarse.self_loop.assign(next, 0.0);
    coarse.strength.assign(next, 0.0);
    coarse.total_weight = graph.total_weight;

    std::vector<std::vector<double>> weight(next);
    for (int c = 0; c < next; ++c) weight[c].assign(next, 0.0);
    for (int node = 0; node < graph.size(); ++node) {
        const int cu = community[node];
        coarse.self_loop[cu] += graph.self_loop[node];
        for (const auto& [neighbor, w] : graph.adjacency[node]) {
            const int cv = community[neighbor];
            if (cu == cv) {
                if (node < neighbor) coarse.self_loop[cu] += w;
            } else {
                weight[cu][cv] += w;
            }
        }
    }
    for (int cu = 0; cu < next; ++cu) {
        for (int cv = 0; cv < next; ++cv)
            if (weight[cu][cv] > 0.0) coarse.adjacency[cu].emplace_back(cv, weight[cu][cv]);
        coarse.strength[cu] = 2.0 * coarse.self_loop[cu];
        for (const auto& [neighbor, w] : coarse.adjacency[cu]) {
            (void)neighbor;
            coarse.strength[cu] += w;
        }
    }
    return coarse;
}

}  // namespace

Partition louvain(const Network& network, std::uint64_t seed, double resolution) {
    if (network.node_count() == 0) throw ParameterError("louvain: empty network");

    std::mt19937_64 eng = substream(seed, 0);
    LevelGraph graph = level_from_network(network);

    // node -> community of the current level, composed across levels
    std::vector<int> assignment(network.node_count());
    std::iota(assignment.begin(), assignment.end(), 0);

    constexpr int kMaxPasses = 100;
    while (true) {
        std::vector<int> community(graph.size());
        std::iota(community.begin(), community.end(), 0);
        std::vector<double> community_strength = graph.strength;

        bool moved = false;
        for (int pass = 0; pass < kMaxPasses; ++pass) {
            if (local_move_pass(graph, community, community_strength, resolution, eng) == 0)
                break;
            moved = true;
        }
        if (!moved) break;

        LevelGraph coarse = aggregate(graph, community);
        for (int node = 0; node < network.node_count(); ++node)
            assignment[node] = community[assignment[node]];
        if (coarse.size() == graph.size()) break;
        graph = std::move(coarse);
    }
    return make_partition(network, std::move(assignment));
}

}  // namespace grouptest
