#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouptest/model.hpp"

namespace grouptest {

// Exact distribution of the total number of tests used by a two-stage
// procedure. Support values are N/n + n*(1+g) for g positive groups beyond
// the seed's.
struct TestCountDistribution {
    std::vector<std::int64_t> support;
    std::vector<double> probabilities;
    double mean = 0.0;
    double variance = 0.0;
};

// E[T_D] = N/n + n[1 + (N/n - 1)v'] with v' = 1-(1-v)^n. Exact when n | N,
// evaluated with real-valued N/n otherwise.
double expected_tests_dorfman(const ModelParams& params);

// T_LB = N/n + max(n, 1 + (N-1)v): the cost when all infected individuals
// are packed into the fewest possible groups.
double lower_bound(const ModelParams& params);

// E[T_NG] = N/n + n[1 + (m/n - 1)+ p' + (N/n - 1 - (m/n - 1)+) q'] with
// p' = 1-(1-p*alpha)^n and q' = 1-(1-q*alpha)^n. Exact when n | N and
// (n | m or m | n); a strong approximation otherwise.
double expected_tests_network(const ModelParams& params);

bool dorfman_exact(const ModelParams& params);
bool network_exact(const ModelParams& params);

// Total tests ~ N/n + n[1 + Bin(N/n - 1, v')]. Requires n | N.
TestCountDistribution dorfman_distribution(const ModelParams& params);

// Total tests ~ N/n + n[1 + Bin((m/n-1)+, p') + Bin(N/n-1-(m/n-1)+, q')],
// computed by exact convolution. Requires the exact divisibility regime.
TestCountDistribution network_distribution(const ModelParams& params);

// Binomial pmf over k = 0..trials, ascending, each mass computed in log
// space so no term depends on its predecessors.
std::vector<double> binomial_pmf(int trials, double prob);

enum class AnalyticStrategy { dorfman, network, lower_bound };

const char* to_string(AnalyticStrategy strategy);

struct OptimumResult {
    int group_size = 0;
    double expected_tests = 0.0;
};

// Minimizes the strategy's expected tests over n in [n_lo, n_hi];
// ties break toward the smaller group size.
OptimumResult optimal_group_size(ModelParams base, AnalyticStrategy strategy, int n_lo,
                                 int n_hi);

// --- Theorem-style property harness -----------------------------------------

struct TheoremGridSpec {
    int tuples = 1000;       // random Assumption-1-valid parameter tuples
    int q_sweeps = 20;       // monotonicity sweeps in q
    int q_points = 50;       // points per sweep
    int boundary_points = 0; // forced q=p and (q=0, n>=m) points, split evenly
    std::uint64_t seed = 0;
    int max_population = 2000;
    double sandwich_slack = 1e-9;    // absolute
    double monotonic_slack = 1e-12;  // relative to the running value
    double boundary_tol = 1e-10;     // absolute
};

struct TheoremGridPoint {
    ModelParams params;
    double t_lb = 0.0;
    double e_tng = 0.0;
    double e_td = 0.0;
    // "ok", "ok-eq-dorfman", "ok-eq-lower-bound" or "violation:<what>"
    std::string status;
    bool ok = true;
};

struct TheoremReport {
    std::vector<TheoremGridPoint> points;
    int violations = 0;
    bool ok() const { return violations == 0; }
};

// Checks T_LB <= E[T_NG] <= E[T_D] on every grid point (alpha recalibrated
// per point) and that E[T_NG] is nondecreasing along each q-sweep.
// Violations are reported, never thrown.
TheoremReport verify_theorem1(const TheoremGridSpec& spec);

}  // namespace grouptest
