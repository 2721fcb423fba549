#pragma once

#include <string>
#include <vector>

namespace grouptest {

// Full parameter tuple for the two-stage testing models.
//
//   N      population size
//   n      group (pool) size
//   m      community size
//   p      within-community edge probability
//   q      between-community edge probability, q <= p
//   v      baseline infection prevalence of the N-1 non-seed individuals
//   alpha  probability the seed infects a given neighbor
struct ModelParams {
    int N = 0;
    int n = 0;
    int m = 0;
    double p = 0.0;
    double q = 0.0;
    double v = 0.0;
    double alpha = 0.0;
};

struct ValidationReport {
    bool pass = false;
    std::vector<std::string> violations;

    // Divisibility of N/n, m/n and n/m. The closed forms are exact only
    // under divisibility and a strong approximation otherwise.
    bool n_divides_population = false;
    bool n_divides_community = false;
    bool community_divides_group = false;
    bool dorfman_exact = false;
    bool network_exact = false;

    // Prevalence implied by alpha (inverse of the calibration).
    double implied_v = 0.0;
    // Whether E[I_NG] matches E[I_D] to 1e-12 relative error.
    bool calibration_consistent = false;
};

// alpha such that the single-seed network epidemic infects, in expectation,
// as many individuals as the baseline model: alpha = (N-1)v / [(m-1)p + (N-m)q].
// Throws DegenerateModel when p = q = 0 with v > 0 and AlphaOutOfRange when
// the formula exceeds 1 (never clamps).
double calibrate_alpha(int N, int m, double p, double q, double v);

// Inverse calibration: the prevalence implied by a given alpha.
double implied_prevalence(int N, int m, double p, double q, double alpha);

// E[I_D] = 1 + (N-1)v.
double expected_infected_dorfman(const ModelParams& params);

// E[I_NG] = 1 + (m-1)p*alpha + (N-m)q*alpha.
double expected_infected_network(const ModelParams& params);

// Reports every violated constraint instead of throwing.
ValidationReport validate(const ModelParams& params);

// Throwing validators used by the closed-form operations. The Dorfman-side
// forms only read (N, n, v); the network-side forms read the full tuple.
void require_dorfman_params(const ModelParams& params);
void require_network_params(const ModelParams& params);

}  // namespace grouptest
