#include "grouptest/sbm.hpp"

#include <utility>
#include <vector>

#include "grouptest/errors.hpp"
#include "grouptest/rng.hpp"

namespace grouptest {

SbmResult generate_sbm(int N, int m, double p, double q, std::uint64_t seed) {
    if (N < 1) throw ParameterError("generate_sbm: N >= 1");
    if (m < 1 || m > N) throw ParameterError("generate_sbm: 1 <= m <= N");
    if (!(q >= 0.0 && q <= p && p <= 1.0))
        throw ParameterError("generate_sbm: 0 <= q <= p <= 1");

    std::vector<int> community(N);
    for (int node = 0; node < N; ++node) community[node] = node / m;

    std::mt19937_64 eng = substream(seed, 0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if (bernoulli(eng, community[u] == community[v] ? p : q))
                edges.emplace_back(u, v);

    SbmResult result;
    result.network = Network(N, std::move(edges));
    result.partition = make_partition(result.network, std::move(community));
    result.uniform_communities = N % m == 0;
    return result;
}

}  // namespace grouptest
