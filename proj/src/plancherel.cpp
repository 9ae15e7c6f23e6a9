#include "rimhook/plancherel.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "rimhook/permutation.hpp"

namespace rimhook {

void ExactDistribution::add(int value, const Rational& mass) {
    if (mass < 0) throw std::invalid_argument("ExactDistribution: negative mass");
    if (mass == 0) return;
    pmf_[value] += mass;
}

Rational ExactDistribution::probability(int value) const {
    auto it = pmf_.find(value);
    return it == pmf_.end() ? Rational(0) : it->second;
}

Rational ExactDistribution::cdf(int value) const {
    Rational total = 0;
    for (const auto& [v, p] : pmf_) {
        if (v > value) break;
        total += p;
    }
    return total;
}

Rational ExactDistribution::total() const {
    Rational total = 0;
    for (const auto& [v, p] : pmf_) total += p;
    return total;
}

int ExactDistribution::min_value() const {
    if (pmf_.empty()) throw std::logic_error("ExactDistribution is empty");
    return pmf_.begin()->first;
}

int ExactDistribution::max_value() const {
    if (pmf_.empty()) throw std::logic_error("ExactDistribution is empty");
    return pmf_.rbegin()->first;
}

bool ExactDistribution::operator==(const ExactDistribution& other) const {
    return pmf_ == other.pmf_;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

Rational plancherel_weight(const PartitionTuple& q, int n) {
    if (q.total_size() != n)
        throw std::invalid_argument("plancherel_weight: tuple size differs from n");
    std::vector<int> sizes;
    BigInt dims = 1;
    for (const auto& component : q.components()) {
        sizes.push_back(component.size());
        dims *= dim_1(component);
    }
    const BigInt coefficient = multinomial(sizes);
    BigInt m_pow = 1;
    for (int i = 0; i < n; ++i) m_pow *= q.m();
    return Rational(coefficient * coefficient * dims * dims, m_pow * factorial(n));
}

namespace {

void extend_tuples(int remaining, int slot, int m, std::vector<Partition>& prefix,
                   std::vector<PartitionTuple>& out) {
    if (slot == m - 1) {
        for (auto& p : partitions_of(remaining)) {
            prefix.push_back(std::move(p));
            out.emplace_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (int size = remaining; size >= 0; --size) {
        for (auto& p : partitions_of(size)) {
            prefix.push_back(std::move(p));
            extend_tuples(remaining - size, slot + 1, m, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<PartitionTuple> tuples_of_total_size(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("tuples_of_total_size: bad arguments");
    std::vector<PartitionTuple> out;
    std::vector<Partition> prefix;
    extend_tuples(n, 0, m, prefix, out);
    return out;
}

std::vector<int> split_sizes(int n, int m, Rng& rng) {
    if (n < 0 || m < 1) throw std::invalid_argument("split_sizes: bad arguments");
    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < n; ++i) ++sizes[rng.below(static_cast<std::uint64_t>(m))];
    return sizes;
}

Rational split_probability(std::span<const int> sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    BigInt m_pow = 1;
    for (int i = 0; i < n; ++i) m_pow *= static_cast<int>(sizes.size());
    return Rational(multinomial(sizes), m_pow);
}

ExactDistribution exact_L_distribution(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("exact_L_distribution: n, m must be >= 1");
    constexpr int kMaxCells = 40;
    if (n * m > kMaxCells)
        throw GuardError("exact_L_distribution: shape enumeration refused",
                         static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m),
                         kMaxCells);
    BigInt order = factorial(n);
    for (int i = 0; i < n; ++i) order *= m;
    ExactDistribution dist;
    PartitionStream stream(n * m);
    while (auto lambda = stream.next()) {
        if (!is_decomposable(*lambda, m)) continue;
        const BigInt dim = dim_m_formula(core_and_quotient(*lambda, m).quotient);
        dist.add(lambda->width(), Rational(dim * dim, order));
    }
    return dist;
}

namespace {

template <typename Stream, typename Statistic>
ExactDistribution tally(Stream stream, Statistic statistic) {
    std::map<int, std::uint64_t> counts;
    std::uint64_t total = 0;
    while (auto element = stream.next()) {
        ++counts[statistic(*element)];
        ++total;
    }
    ExactDistribution dist;
    for (const auto& [value, count] : counts) dist.add(value, Rational(BigInt(count), BigInt(total)));
    return dist;
}

}  // namespace

ExactDistribution enumerate_L_colored(int n, int m) {
    return tally(ColoredPermutationStream(n, m),
                 [](const ColoredPermutation& pi) { return lis_colored(pi); });
}

ExactDistribution enumerate_L_even(int n) {
    return tally(SignedPermutationStream(n), [](const SignedPermutation& s) { return l_even(s); });
}

ExactDistribution enumerate_L_odd(int n) {
    return tally(SignedPermutationStream(n), [](const SignedPermutation& s) { return l_odd(s); });
}

double scale_L(int L, int n, int m, Scaling scaling) {
    const double mn = static_cast<double>(m) * n;
    double divisor = std::pow(mn, 1.0 / 6.0);
    if (scaling == Scaling::kAbstract) divisor *= std::cbrt(static_cast<double>(m) * m);
    return (L - 2.0 * std::sqrt(mn)) / divisor;
}

EmpiricalDistribution sample_scaled_L(int n, int m, std::int64_t count, Rng& rng,
                                      Scaling scaling) {
    if (n < 1 || m < 1 || count < 1)
        throw std::invalid_argument("sample_scaled_L: n, m, count must be >= 1");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        values.push_back(scale_L(lis_colored(sample_colored(n, m, rng)), n, m, scaling));
    return EmpiricalDistribution(std::move(values));
}

EmpiricalDistribution sample_scaled_L(int n, int m, std::int64_t count,
                                      const MonteCarloConfig& config, Scaling scaling) {
    if (n < 1 || m < 1 || count < 1)
        throw std::invalid_argument("sample_scaled_L: n, m, count must be >= 1");
    auto values = detail::map_reduce<double>(
        count, config.threads, config.seed, [&](std::int64_t share, Rng& rng) {
            std::vector<double> out;
            out.reserve(static_cast<std::size_t>(share));
            for (std::int64_t i = 0; i < share; ++i)
                out.push_back(scale_L(lis_colored(sample_colored(n, m, rng)), n, m, scaling));
            return out;
        });
    return EmpiricalDistribution(std::move(values));
}

JointSamples::JointSamples(int m, std::vector<double> flat) : m_(m), flat_(std::move(flat)) {
    if (m < 1 || flat_.size() % static_cast<std::size_t>(m) != 0)
        throw std::invalid_argument("JointSamples: size is not a multiple of m");
}

double JointSamples::joint_cdf(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != m_)
        throw std::invalid_argument("JointSamples::joint_cdf: point has wrong dimension");
    std::size_t hits = 0;
    for (std::size_t d = 0; d < count(); ++d) {
        bool below = true;
        for (int k = 0; k < m_ && below; ++k) below = value(d, k) <= point[static_cast<std::size_t>(k)];
        hits += below;
    }
    return count() ? static_cast<double>(hits) / static_cast<double>(count()) : 0.0;
}

double JointSamples::marginal_cdf(int component, double x) const {
    std::size_t hits = 0;
    for (std::size_t d = 0; d < count(); ++d) hits += value(d, component) <= x;
    return count() ? static_cast<double>(hits) / static_cast<double>(count()) : 0.0;
}

EmpiricalDistribution JointSamples::marginal(int component) const {
    std::vector<double> values;
    values.reserve(count());
    for (std::size_t d = 0; d < count(); ++d) values.push_back(value(d, component));
    return EmpiricalDistribution(std::move(values));
}

namespace {

std::vector<double> joint_draws(int n, int m, std::int64_t count, Rng& rng) {
    const double per_color = static_cast<double>(n) / m;
    const double center = 2.0 * std::sqrt(per_color);
    const double divisor = std::pow(per_color, 1.0 / 6.0);
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(count * m));
    for (std::int64_t i = 0; i < count; ++i)
        for (int k : color_lis_lengths(sample_colored(n, m, rng)))
            flat.push_back((k - center) / divisor);
    return flat;
}

}  // namespace

JointSamples joint_component_samples(int n, int m, std::int64_t count, Rng& rng) {
    if (n < 1 || m < 1 || count < 1)
        throw std::invalid_argument("joint_component_samples: n, m, count must be >= 1");
    return JointSamples(m, joint_draws(n, m, count, rng));
}

JointSamples joint_component_samples(int n, int m, std::int64_t count,
                                     const MonteCarloConfig& config) {
    if (n < 1 || m < 1 || count < 1)
        throw std::invalid_argument("joint_component_samples: n, m, count must be >= 1");
    return JointSamples(m, detail::map_reduce<double>(count, config.threads, config.seed,
                                                      [&](std::int64_t share, Rng& rng) {
                                                          return joint_draws(n, m, share, rng);
                                                      }));
}

double ks_distance(const EmpiricalDistribution& empirical,
                   const std::function<double(double)>& cdf) {
    const auto xs = empirical.sorted();
    const double n = static_cast<double>(xs.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        worst = std::max({worst, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return std::clamp(worst, 0.0, 1.0);
}

}  // namespace rimhook
