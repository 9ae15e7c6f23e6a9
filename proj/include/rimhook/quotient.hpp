#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rimhook/partition.hpp"

namespace rimhook {

/// An ordered m-tuple of partitions, an element of Y^m.
class PartitionTuple {
public:
    /// m empty components.
    explicit PartitionTuple(int m);
    explicit PartitionTuple(std::vector<Partition> components);

    /// Serialized form: components joined by '/', e.g. "2/-" or "1/1".
    static PartitionTuple parse(std::string_view text);

    int m() const noexcept { return static_cast<int>(components_.size()); }
    int total_size() const noexcept;
    int max_width() const noexcept;
    const Partition& operator[](int k) const { return components_.at(static_cast<std::size_t>(k)); }
    const std::vector<Partition>& components() const noexcept { return components_; }
    std::string to_string() const;

    bool operator==(const PartitionTuple&) const = default;

private:
    std::vector<Partition> components_;
};

/// Beta-numbers of a partition laid out on m runners.
///
/// With t beads (t a multiple of m), bead i sits at position
/// lambda_i + t - 1 - i; runner r holds positions congruent to r mod m.
/// Runner r (0-based) carries quotient component r+1. With this labeling
/// w(lambda) = max_p m(w(lambda_p) - 1) + p over nonempty runners.
class Abacus {
public:
    /// t is the least multiple of m that is >= lambda.length().
    Abacus(const Partition& lambda, int m);

    int m() const noexcept { return m_; }
    int beads() const noexcept { return beads_; }
    const std::vector<std::vector<int>>& runners() const noexcept { return levels_; }

    Partition partition() const;
    Partition core() const;
    PartitionTuple quotient() const;

private:
    Abacus(int m, int beads, std::vector<std::vector<int>> levels);
    static Partition from_positions(std::vector<int> positions);

    int m_;
    int beads_;
    std::vector<std::vector<int>> levels_;  // per runner, ascending bead levels

    friend Partition combine(const PartitionTuple& quotient);
};

struct CoreQuotient {
    Partition core;
    PartitionTuple quotient;
};

CoreQuotient core_and_quotient(const Partition& lambda, int m);

/// True iff the m-core of lambda is empty.
bool is_decomposable(const Partition& lambda, int m);

/// Inverse of core_and_quotient on decomposable shapes: the shape with empty
/// core and the given quotient (m = quotient.m()).
Partition combine(const PartitionTuple& quotient);

/// All mu with lambda - mu an m-cell border strip.
std::vector<Partition> removable_rim_hooks(const Partition& lambda, int m);

/// Multinomial of component sizes times the product of dim_1.
BigInt dim_m_formula(const PartitionTuple& quotient);

/// Number of m-rim-hook tableaux of shape lambda, by memoized recursion over
/// removable_rim_hooks. Zero when lambda is not m-decomposable.
BigInt dim_m_removal(const Partition& lambda, int m);

/// m * max_k w(lambda_k) - w(lambda); throws std::domain_error for
/// non-decomposable lambda.
int width_defect(const Partition& lambda, int m);

}  // namespace rimhook
