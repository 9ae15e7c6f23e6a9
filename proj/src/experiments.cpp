#include "rimhook/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "rimhook/tracy_widom.hpp"

namespace rimhook {

double scaled_limit_cdf(double x, int m, Scaling scaling) {
    if (scaling == Scaling::kTheorem) return limit_cdf(x, m);
    return std::pow(tw_cdf(x).value, m);
}

std::vector<double> GridSpec::points() const {
    if (steps < 1) throw std::invalid_argument("grid: steps must be >= 1");
    std::vector<double> xs;
    for (int i = 0; i < steps; ++i)
        xs.push_back(steps == 1 ? x0 : x0 + (x1 - x0) * i / (steps - 1));
    return xs;
}

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec spec;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &spec.x0, &spec.x1, &spec.steps, &tail) != 3 ||
        spec.steps < 1 || !(spec.x1 >= spec.x0))
        throw std::invalid_argument("grid must look like x0:x1:steps, got '" + text + "'");
    return spec;
}

std::string scaling_name(Scaling scaling) {
    return scaling == Scaling::kAbstract ? "abstract" : "theorem";
}

namespace {

std::string fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

}  // namespace

LimitComparison compare_with_limit(const LimitComparisonConfig& config) {
    LimitComparison result;
    result.config = config;
    const int limit_m = config.limit_m > 0 ? config.limit_m : config.m;
    result.config.limit_m = limit_m;
    result.sample = sample_scaled_L(config.n, config.m, config.samples,
                                    MonteCarloConfig{config.seed, config.threads}, config.scaling);
    auto limit = [&](double x) { return scaled_limit_cdf(x, limit_m, config.scaling); };
    result.ks = ks_distance(result.sample, limit);
    for (double x : config.grid.points())
        result.rows.push_back({x, result.sample.cdf(x), limit(x)});
    return result;
}

std::string LimitComparison::to_csv(const std::string& command) const {
    std::ostringstream out;
    out << "# rimhook " << kVersion << ' ' << command << '\n';
    out << "# n=" << config.n << " m=" << config.m << " samples=" << config.samples
        << " seed=" << config.seed << " threads=" << config.threads
        << " scaling=" << scaling_name(config.scaling) << " limit_m=" << config.limit_m
        << " grid=" << fixed(config.grid.x0, 4) << ':' << fixed(config.grid.x1, 4) << ':'
        << config.grid.steps << " threshold=" << fixed(config.threshold, 4) << '\n';
    out << "# ks=" << fixed(ks, 8) << " pass=" << (within_threshold() ? "true" : "false") << '\n';
    out << "x,empirical_cdf,limit_cdf,ks\n";
    for (const auto& row : rows)
        out << fixed(row.x, 6) << ',' << fixed(row.empirical, 8) << ',' << fixed(row.limit, 8) << ','
            << fixed(ks, 8) << '\n';
    return out.str();
}

IndependenceResult check_independence(const IndependenceConfig& config) {
    if (config.m < 2) throw std::invalid_argument("independence check needs m >= 2");
    IndependenceResult result;
    result.config = config;
    const auto samples = joint_component_samples(config.n, config.m, config.samples,
                                                 MonteCarloConfig{config.seed, config.threads});
    std::vector<double> point(static_cast<std::size_t>(config.m), INFINITY);
    for (double x1 : config.grid)
        for (double x2 : config.grid) {
            point[0] = x1;
            point[1] = x2;
            const double joint = samples.joint_cdf(point);
            const double product = samples.marginal_cdf(0, x1) * samples.marginal_cdf(1, x2);
            result.rows.push_back({x1, x2, joint, product});
            result.max_gap = std::max(result.max_gap, std::abs(joint - product));
        }
    for (int k = 0; k < config.m; ++k)
        result.marginal_ks.push_back(
            ks_distance(samples.marginal(k), [](double x) { return tw_cdf(x).value; }));
    return result;
}

std::string IndependenceResult::to_csv() const {
    std::ostringstream out;
    out << "# rimhook " << kVersion << " independence\n";
    out << "# n=" << config.n << " m=" << config.m << " samples=" << config.samples
        << " seed=" << config.seed << " threads=" << config.threads
        << " threshold=" << fixed(config.threshold, 4) << '\n';
    out << "# max_gap=" << fixed(max_gap, 8);
    for (std::size_t k = 0; k < marginal_ks.size(); ++k)
        out << " marginal_ks_" << k + 1 << '=' << fixed(marginal_ks[k], 8);
    out << '\n';
    out << "x1,x2,joint_cdf,product_cdf,gap\n";
    for (const auto& row : rows)
        out << fixed(row.x1, 6) << ',' << fixed(row.x2, 6) << ',' << fixed(row.joint, 8) << ','
            << fixed(row.product, 8) << ',' << fixed(std::abs(row.joint - row.product), 8) << '\n';
    return out.str();
}

}  // namespace rimhook
