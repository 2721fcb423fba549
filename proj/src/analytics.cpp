#include "grouptest/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grouptest/errors.hpp"
#include "grouptest/rng.hpp"

namespace grouptest {

namespace {

// 1 - (1 - per_member)^n, the probability a group of n such members holds
// at least one infection.
double prob_any(double per_member, int n) {
    if (per_member <= 0.0) return 0.0;
    if (per_member >= 1.0) return 1.0;
    return -std::expm1(static_cast<double>(n) * std::log1p(-per_member));
}

double lchoose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// (m/n - 1)+ with real-valued ratio.
double extra_community_groups(const ModelParams& mp) {
    return std::max(static_cast<double>(mp.m) / mp.n - 1.0, 0.0);
}

TestCountDistribution finalize(int groups, int n, std::vector<double> pmf) {
    TestCountDistribution dist;
    dist.support.resize(pmf.size());
    for (std::size_t k = 0; k < pmf.size(); ++k)
        dist.support[k] = groups + static_cast<std::int64_t>(n) * (1 + static_cast<int>(k));
    dist.probabilities = std::move(pmf);
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k)
        dist.mean += static_cast<double>(dist.support[k]) * dist.probabilities[k];
    for (std::size_t k = 0; k < dist.probabilities.size(); ++k) {
        const double d = static_cast<double>(dist.support[k]) - dist.mean;
        dist.variance += dist.probabilities[k] * d * d;
    }
    return dist;
}

}  // namespace

double expected_tests_dorfman(const ModelParams& mp) {
    require_dorfman_params(mp);
    const double groups = static_cast<double>(mp.N) / mp.n;
    const double vp = prob_any(mp.v, mp.n);
    return groups + mp.n * (1.0 + (groups - 1.0) * vp);
}

double lower_bound(const ModelParams& mp) {
    require_dorfman_params(mp);
    const double groups = static_cast<double>(mp.N) / mp.n;
    return groups + std::max(static_cast<double>(mp.n), 1.0 + (mp.N - 1) * mp.v);
}

double expected_tests_network(const ModelParams& mp) {
    require_network_params(mp);
    const double groups = static_cast<double>(mp.N) / mp.n;
    const double kp = extra_community_groups(mp);
    const double pp = prob_any(mp.p * mp.alpha, mp.n);
    const double qp = prob_any(mp.q * mp.alpha, mp.n);
    return groups + mp.n * (1.0 + kp * pp + (groups - 1.0 - kp) * qp);
}

bool dorfman_exact(const ModelParams& mp) {
    return mp.n >= 1 && mp.N % mp.n == 0;
}

bool network_exact(const ModelParams& mp) {
    return dorfman_exact(mp) && mp.m >= 1 &&
           (mp.m % mp.n == 0 || mp.n % mp.m == 0);
}

std::vector<double> binomial_pmf(int trials, double prob) {
    std::vector<double> pmf(static_cast<std::size_t>(trials) + 1, 0.0);
    if (prob <= 0.0) {
        pmf.front() = 1.0;
    } else if (prob >= 1.0) {
        pmf.back() = 1.0;
    } else {
        const double lp = std::log(prob);
        const double lq = std::log1p(-prob);
        for (int k = 0; k <= trials; ++k)
            pmf[k] = std::exp(lchoose(trials, k) + k * lp + (trials - k) * lq);
    }
    return pmf;
}

TestCountDistribution dorfman_distribution(const ModelParams& mp) {
    require_dorfman_params(mp);
    if (!dorfman_exact(mp))
        throw DivisibilityError("dorfman_distribution: requires N divisible by n");
    const int groups = mp.N / mp.n;
    return finalize(groups, mp.n, binomial_pmf(groups - 1, prob_any(mp.v, mp.n)));
}

TestCountDistribution network_distribution(const ModelParams& mp) {
    require_network_params(mp);
    if (!network_exact(mp))
        throw DivisibilityError(
            "network_distribution: requires N divisible by n and m divisible by n "
            "or n divisible by m");
    const int groups = mp.N / mp.n;
    const int kp = mp.m > mp.n ? mp.m / mp.n - 1 : 0;
    const int kq = groups - 1 - kp;
    const auto pmf_p = binomial_pmf(kp, prob_any(mp.p * mp.alpha, mp.n));
    const auto pmf_q = binomial_pmf(kq, prob_any(mp.q * mp.alpha, mp.n));

    std::vector<double> conv(pmf_p.size() + pmf_q.size() - 1, 0.0);
    for (std::size_t j = 0; j < conv.size(); ++j)
        for (std::size_t x = j >= pmf_q.size() ? j - pmf_q.size() + 1 : 0;
             x < pmf_p.size() && x <= j; ++x)
            conv[j] += pmf_p[x] * pmf_q[j - x];
    return finalize(groups, mp.n, std::move(conv));
}

const char* to_string(AnalyticStrategy strategy) {
    switch (strategy) {
        case AnalyticStrategy::dorfman: return "dorfman";
        case AnalyticStrategy::network: return "network";
        case AnalyticStrategy::lower_bound: return "lower-bound";
    }
    return "?";
}

OptimumResult optimal_group_size(ModelParams base, AnalyticStrategy strategy, int n_lo,
                                 int n_hi) {
    if (n_lo > n_hi) throw EmptyRange("optimal_group_size: empty range");
    if (n_lo < 1 || n_hi > base.N)
        throw ParameterError("optimal_group_size: range must lie within [1, N]");

    OptimumResult best;
    for (int n = n_lo; n <= n_hi; ++n) {
        base.n = n;
        double value = 0.0;
        switch (strategy) {
            case AnalyticStrategy::dorfman: value = expected_tests_dorfman(base); break;
            case AnalyticStrategy::network: value = expected_tests_network(base); break;
            case AnalyticStrategy::lower_bound: value = lower_bound(base); break;
        }
        if (n == n_lo || value < best.expected_tests) best = {n, value};
    }
    return best;
}

namespace {

struct TupleDraw {
    ModelParams params;
    bool degenerate = false;  // p = q = 0
};

// Assumption-1-valid tuple with alpha calibrated from v. v is drawn inside
// the feasible band so the calibration never rejects.
TupleDraw draw_tuple(std::mt19937_64& eng, int max_population, bool positive_p) {
    TupleDraw draw;
    ModelParams& mp = draw.params;
    mp.N = 20 + static_cast<int>(uniform_index(eng, max_population - 19));
    mp.n = 1 + static_cast<int>(uniform_index(eng, mp.N));
    mp.m = 2 + static_cast<int>(uniform_index(eng, mp.N - 2));
    mp.p = positive_p ? 0.05 + 0.95 * uniform01(eng) : uniform01(eng);
    mp.q = mp.p * uniform01(eng);

    const double denom = (mp.m - 1) * mp.p + (mp.N - mp.m) * mp.q;
    if (denom <= 0.0) {
        draw.degenerate = true;
        mp.v = 0.0;
        mp.alpha = 0.0;
        return draw;
    }
    // Keep v feasible for the whole q in [0, p] band so sweeps stay valid.
    // The margin keeps rounding from pushing the calibrated alpha above 1.
    const double margin = 1.0 - 1e-9;
    const double v_cap = std::min(1.0, (mp.m - 1) * mp.p / (mp.N - 1.0));
    mp.v = (positive_p ? v_cap : std::min(1.0, denom / (mp.N - 1.0))) * margin *
           uniform01(eng);
    mp.alpha = calibrate_alpha(mp.N, mp.m, mp.p, mp.q, mp.v);
    return draw;
}

TheoremGridPoint evaluate_point(const ModelParams& mp, double sandwich_slack,
                                double boundary_tol) {
    TheoremGridPoint point;
    point.params = mp;
    point.t_lb = lower_bound(mp);
    point.e_tng = expected_tests_network(mp);
    point.e_td = expected_tests_dorfman(mp);
    point.status = "ok";
    if (point.e_tng < point.t_lb - sandwich_slack) {
        point.ok = false;
        point.status = "violation:lower-bound";
    } else if (point.e_tng > point.e_td + sandwich_slack) {
        point.ok = false;
        point.status = "violation:upper-bound";
    } else if (std::abs(point.e_tng - point.e_td) <= boundary_tol) {
        point.status = "ok-eq-dorfman";
    } else if (std::abs(point.e_tng - point.t_lb) <= boundary_tol) {
        point.status = "ok-eq-lower-bound";
    }
    return point;
}

}  // namespace

TheoremReport verify_theorem1(const TheoremGridSpec& spec) {
    TheoremReport report;
    std::mt19937_64 eng = substream(spec.seed, 0);

    auto push = [&report](TheoremGridPoint point) {
        if (!point.ok) ++report.violations;
        report.points.push_back(std::move(point));
    };

    for (int i = 0; i < spec.tuples; ++i) {
        const TupleDraw draw = draw_tuple(eng, spec.max_population, false);
        push(evaluate_point(draw.params, spec.sandwich_slack, spec.boundary_tol));
    }

    for (int s = 0; s < spec.q_sweeps; ++s) {
        TupleDraw draw = draw_tuple(eng, spec.max_population, true);
        ModelParams mp = draw.params;
        double previous = 0.0;
        for (int j = 0; j < spec.q_points; ++j) {
            mp.q = mp.p * j / (spec.q_points - 1);
            mp.alpha = calibrate_alpha(mp.N, mp.m, mp.p, mp.q, mp.v);
            TheoremGridPoint point =
                evaluate_point(mp, spec.sandwich_slack, spec.boundary_tol);
            if (j > 0 &&
                point.e_tng < previous - spec.monotonic_slack * std::max(1.0, previous)) {
                point.ok = false;
                point.status = "violation:monotonic-q";
            }
            previous = point.e_tng;
            push(std::move(point));
        }
    }

    for (int b = 0; b < spec.boundary_points; ++b) {
        TupleDraw draw = draw_tuple(eng, spec.max_population, true);
        ModelParams mp = draw.params;
        if (b % 2 == 0) {
            mp.q = mp.p;
            mp.alpha = calibrate_alpha(mp.N, mp.m, mp.p, mp.q, mp.v);
            TheoremGridPoint point =
                evaluate_point(mp, spec.sandwich_slack, spec.boundary_tol);
            if (std::abs(point.e_tng - point.e_td) > spec.boundary_tol) {
                point.ok = false;
                point.status = "violation:eq-dorfman";
            }
            push(std::move(point));
        } else {
            mp.q = 0.0;
            if (mp.n < 2) mp.n = 2;  // keep m <= n satisfiable with m > 1
            if (mp.m > mp.n) mp.m = 2 + static_cast<int>(uniform_index(eng, mp.n - 1));
            mp.v = std::min(1.0, (mp.m - 1) * mp.p / (mp.N - 1.0)) * (1.0 - 1e-9) *
                   uniform01(eng);
            mp.alpha = calibrate_alpha(mp.N, mp.m, mp.p, mp.q, mp.v);
            TheoremGridPoint point =
                evaluate_point(mp, spec.sandwich_slack, spec.boundary_tol);
            const double baseline = static_cast<double>(mp.N) / mp.n + mp.n;
            if (std::abs(point.e_tng - baseline) > spec.boundary_tol) {
                point.ok = false;
                point.status = "violation:eq-lower-bound";
            }
            push(std::move(point));
        }
    }
    return report;
}

}  // namespace grouptest
