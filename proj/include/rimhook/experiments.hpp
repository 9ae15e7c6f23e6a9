#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rimhook/plancherel.hpp"

namespace rimhook {

/// Limit law of the scaled colored LIS under `scaling`:
/// F(x)^m for kAbstract, F(m^{-2/3} x)^m for kTheorem.
double scaled_limit_cdf(double x, int m, Scaling scaling);

struct GridSpec {
    double x0 = -6.0;
    double x1 = 4.0;
    int steps = 41;

    std::vector<double> points() const;
    /// Parses "x0:x1:steps".
    static GridSpec parse(const std::string& text);
};

struct LimitComparisonConfig {
    int n = 2000;
    int m = 2;
    std::int64_t samples = 10'000;
    std::uint64_t seed = 1;
    int threads = 1;
    Scaling scaling = Scaling::kAbstract;
    /// Limit law to compare against; 0 means the sample's own m.
    int limit_m = 0;
    GridSpec grid;
    double threshold = 0.08;
};

struct LimitComparisonRow {
    double x;
    double empirical;
    double limit;
};

struct LimitComparison {
    LimitComparisonConfig config;
    EmpiricalDistribution sample;
    double ks = 0.0;
    std::vector<LimitComparisonRow> rows;

    bool within_threshold() const { return ks <= config.threshold; }
    /// `#` metadata lines, then x,empirical_cdf,limit_cdf,ks.
    std::string to_csv(const std::string& command) const;
};

/// Samples the scaled colored LIS and compares it with the limit law.
LimitComparison compare_with_limit(const LimitComparisonConfig& config);

struct IndependenceConfig {
    int n = 2000;
    int m = 2;
    std::int64_t samples = 10'000;
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<double> grid{-3.0, -1.8, -0.6};
    double threshold = 0.08;
};

struct IndependenceRow {
    double x1, x2, joint, product;
};

struct IndependenceResult {
    IndependenceConfig config;
    std::vector<IndependenceRow> rows;
    std::vector<double> marginal_ks;  // per component, against F
    double max_gap = 0.0;

    bool within_threshold() const { return max_gap <= config.threshold; }
    std::string to_csv() const;
};

/// Joint CDF of the first two scaled per-color LIS components against the
/// product of their marginals on grid x grid.
IndependenceResult check_independence(const IndependenceConfig& config);

std::string scaling_name(Scaling scaling);

}  // namespace rimhook
