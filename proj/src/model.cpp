#include "grouptest/model.hpp"

#include <cmath>
#include <sstream>

#include "grouptest/errors.hpp"

namespace grouptest {

namespace {

void check_probability(double value, const char* name, std::vector<std::string>& out) {
    if (!(value >= 0.0 && value <= 1.0)) out.push_back(std::string(name) + " in [0,1]");
}

[[noreturn]] void throw_violations(const char* where, const std::vector<std::string>& violations) {
    std::ostringstream msg;
    msg << where << ": violated";
    for (const auto& v : violations) msg << " [" << v << "]";
    throw ParameterError(msg.str());
}

}  // namespace

double calibrate_alpha(int N, int m, double p, double q, double v) {
    std::vector<std::string> bad;
    if (!(m > 1 && m < N)) bad.push_back("1 < m < N");
    if (!(q >= 0.0 && q <= p && p <= 1.0)) bad.push_back("0 <= q <= p <= 1");
    check_probability(v, "v", bad);
    if (!bad.empty()) throw_violations("calibrate_alpha", bad);

    const double denom = (m - 1) * p + (N - m) * q;
    if (denom <= 0.0) {
        if (v == 0.0) return 0.0;  // nothing to transmit, any alpha is consistent
        throw DegenerateModel("calibrate_alpha: p = q = 0 cannot support prevalence v > 0");
    }
    const double alpha = (N - 1) * v / denom;
    if (alpha > 1.0) {
        std::ostringstream msg;
        msg << "calibrate_alpha: alpha = " << alpha << " > 1; prevalence v = " << v
            << " exceeds the maximum " << denom / (N - 1) << " this network supports";
        throw AlphaOutOfRange(msg.str());
    }
    return alpha;
}

double implied_prevalence(int N, int m, double p, double q, double alpha) {
    std::vector<std::string> bad;
    if (!(m > 1 && m < N)) bad.push_back("1 < m < N");
    if (!(q >= 0.0 && q <= p && p <= 1.0)) bad.push_back("0 <= q <= p <= 1");
    check_probability(alpha, "alpha", bad);
    if (!bad.empty()) throw_violations("implied_prevalence", bad);

    return alpha * ((m - 1) * p + (N - m) * q) / (N - 1);
}

double expected_infected_dorfman(const ModelParams& params) {
    std::vector<std::string> bad;
    if (params.N < 1) bad.push_back("N >= 1");
    check_probability(params.v, "v", bad);
    if (!bad.empty()) throw_violations("expected_infected_dorfman", bad);

    return 1.0 + (params.N - 1) * params.v;
}

double expected_infected_network(const ModelParams& params) {
    std::vector<std::string> bad;
    if (!(params.m > 1 && params.m < params.N)) bad.push_back("1 < m < N");
    if (!(params.q >= 0.0 && params.q <= params.p && params.p <= 1.0))
        bad.push_back("0 <= q <= p <= 1");
    check_probability(params.alpha, "alpha", bad);
    if (!bad.empty()) throw_violations("expected_infected_network", bad);

    return 1.0 + (params.m - 1) * params.p * params.alpha +
           (params.N - params.m) * params.q * params.alpha;
}

ValidationReport validate(const ModelParams& params) {
    ValidationReport report;
    auto& bad = report.violations;

    if (!(params.n >= 1 && params.n <= params.N)) bad.push_back("1 <= n <= N");
    if (!(params.m > 1 && params.m < params.N)) bad.push_back("1 < m < N");
    if (!(params.q >= 0.0 && params.q <= params.p && params.p <= 1.0))
        bad.push_back("0 <= q <= p <= 1");
    check_probability(params.v, "v", bad);
    check_probability(params.alpha, "alpha", bad);

    report.pass = bad.empty();

    if (params.n >= 1) {
        report.n_divides_population = params.N % params.n == 0;
        if (params.m >= 1) {
            report.n_divides_community = params.m % params.n == 0;
            report.community_divides_group = params.n % params.m == 0;
        }
    }
    report.dorfman_exact = report.n_divides_population;
    report.network_exact = report.n_divides_population &&
                           (report.n_divides_community || report.community_divides_group);

    if (report.pass) {
        report.implied_v =
            implied_prevalence(params.N, params.m, params.p, params.q, params.alpha);
        const double e_d = expected_infected_dorfman(params);
        const double e_ng = expected_infected_network(params);
        report.calibration_consistent = std::abs(e_ng - e_d) <= 1e-12 * e_d;
    }
    return report;
}

void require_dorfman_params(const ModelParams& params) {
    std::vector<std::string> bad;
    if (!(params.n >= 1 && params.n <= params.N)) bad.push_back("1 <= n <= N");
    check_probability(params.v, "v", bad);
    if (!bad.empty()) throw_violations("dorfman params", bad);
}

void require_network_params(const ModelParams& params) {
    std::vector<std::string> bad;
    if (!(params.n >= 1 && params.n <= params.N)) bad.push_back("1 <= n <= N");
    if (!(params.m > 1 && params.m < params.N)) bad.push_back("1 < m < N");
    if (!(params.q >= 0.0 && params.q <= params.p && params.p <= 1.0))
        bad.push_back("0 <= q <= p <= 1");
    check_probability(params.alpha, "alpha", bad);
    if (!bad.empty()) throw_violations("network params", bad);
}

}  // namespace grouptest
