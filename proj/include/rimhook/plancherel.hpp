#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rimhook/common.hpp"
#include "rimhook/quotient.hpp"
#include "rimhook/rng.hpp"

namespace rimhook {

/// Exact probability mass function over integer values.
class ExactDistribution {
public:
    void add(int value, const Rational& mass);

    const std::map<int, Rational>& pmf() const noexcept { return pmf_; }
    Rational probability(int value) const;
    /// P{X <= value}.
    Rational cdf(int value) const;
    Rational total() const;
    int min_value() const;
    int max_value() const;

    bool operator==(const ExactDistribution& other) const;

private:
    std::map<int, Rational> pmf_;
};

/// Sorted real samples with a right-continuous step CDF.
class EmpiricalDistribution {
public:
    EmpiricalDistribution() = default;
    explicit EmpiricalDistribution(std::vector<double> samples);

    std::span<const double> sorted() const noexcept { return sorted_; }
    std::size_t count() const noexcept { return sorted_.size(); }
    /// Fraction of samples <= x.
    double cdf(double x) const;

private:
    std::vector<double> sorted_;
};

/// Plancherel weight of an m-tuple with total size n.
Rational plancherel_weight(const PartitionTuple& q, int n);

/// Every m-tuple of partitions with total size n.
std::vector<PartitionTuple> tuples_of_total_size(int n, int m);

/// Multinomial(n; 1/m, ..., 1/m) sample realized as n uniform color draws.
std::vector<int> split_sizes(int n, int m, Rng& rng);

/// Mass (1/m^n) n! / (n_1! ... n_m!) of a size split.
Rational split_probability(std::span<const int> sizes);

/// Law of lis_colored on S_n^(m) from the shape weights dim_m^2 / (m^n n!),
/// keyed by shape width. Refuses mn > 40.
ExactDistribution exact_L_distribution(int n, int m);

/// The same laws by brute-force enumeration of the groups.
ExactDistribution enumerate_L_colored(int n, int m);
ExactDistribution enumerate_L_even(int n);
ExactDistribution enumerate_L_odd(int n);

/// Centering/scaling of the colored LIS statistic.
///
/// kAbstract divides by m^{2/3} (mn)^{1/6} and has limit F(x)^m;
/// kTheorem divides by (mn)^{1/6} and has limit F(m^{-2/3} x)^m.
enum class Scaling { kAbstract, kTheorem };

double scale_L(int L, int n, int m, Scaling scaling);

struct MonteCarloConfig {
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Scaled lis_colored of `count` uniform colored permutations.
EmpiricalDistribution sample_scaled_L(int n, int m, std::int64_t count, Rng& rng,
                                      Scaling scaling = Scaling::kAbstract);

/// Map-reduce version: worker w draws from Rng(seed).split(w).
EmpiricalDistribution sample_scaled_L(int n, int m, std::int64_t count,
                                      const MonteCarloConfig& config,
                                      Scaling scaling = Scaling::kAbstract);

/// Per-draw vectors of scaled per-color LIS lengths.
class JointSamples {
public:
    JointSamples(int m, std::vector<double> flat);

    int m() const noexcept { return m_; }
    std::size_t count() const noexcept { return flat_.size() / static_cast<std::size_t>(m_); }
    double value(std::size_t draw, int component) const {
        return flat_[draw * static_cast<std::size_t>(m_) + static_cast<std::size_t>(component)];
    }

    /// Fraction of draws with every component <= point[k].
    double joint_cdf(std::span<const double> point) const;
    double marginal_cdf(int component, double x) const;
    EmpiricalDistribution marginal(int component) const;

private:
    int m_;
    std::vector<double> flat_;
};

/// Components are (l_i - 2 sqrt(n/m)) / (n/m)^{1/6} with l_i the LIS of color i.
JointSamples joint_component_samples(int n, int m, std::int64_t count, Rng& rng);
JointSamples joint_component_samples(int n, int m, std::int64_t count,
                                     const MonteCarloConfig& config);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - cdf|.
double ks_distance(const EmpiricalDistribution& empirical,
                   const std::function<double(double)>& cdf);

}  // namespace rimhook
