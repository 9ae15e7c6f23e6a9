#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rimhook/partition.hpp"
#include "rimhook/rng.hpp"

namespace rimhook {

/// Exhaustive enumeration refuses groups larger than this.
inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// A permutation of {1..n} with one of m colors attached to each point.
class ColoredPermutation {
public:
    /// sigma holds the images sigma(1..n); colors hold values in 1..m.
    ColoredPermutation(std::vector<int> sigma, std::vector<int> colors, int m);

    int n() const noexcept { return static_cast<int>(sigma_.size()); }
    int m() const noexcept { return m_; }
    std::span<const int> sigma() const noexcept { return sigma_; }
    std::span<const int> colors() const noexcept { return colors_; }

    /// Images of the positions carrying `color`, in position order.
    std::vector<int> color_subword(int color) const;

    std::string to_string() const;

private:
    std::vector<int> sigma_;
    std::vector<int> colors_;
    int m_;
};

/// A signed permutation: |sigma| = perm and sigma(i) = signs[i] * perm[i].
class SignedPermutation {
public:
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    int n() const noexcept { return static_cast<int>(perm_.size()); }
    std::span<const int> perm() const noexcept { return perm_; }
    std::span<const int> signs() const noexcept { return signs_; }

    /// sigma(x) for x in {-n..-1, 1..n}, extended by sigma(-x) = -sigma(x).
    int operator()(int x) const;

    /// (sigma(-n), ..., sigma(-1), sigma(1), ..., sigma(n)).
    std::vector<int> even_sequence() const;
    /// even_sequence with sigma(0) = 0 inserted in the middle position.
    std::vector<int> odd_sequence() const;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Longest strictly increasing subsequence by patience sorting, O(n log n).
template <typename T>
int lis_plain(std::span<const T> seq) {
    std::vector<T> tops;
    tops.reserve(seq.size());
    for (const T& value : seq) {
        auto it = std::lower_bound(tops.begin(), tops.end(), value);
        if (it == tops.end())
            tops.push_back(value);
        else
            *it = value;
    }
    return static_cast<int>(tops.size());
}

inline int lis_plain(const std::vector<int>& seq) { return lis_plain(std::span<const int>(seq)); }

/// k_p for p = 1..m: LIS of each color's subword (0 for absent colors).
std::vector<int> color_lis_lengths(const ColoredPermutation& pi);

/// max over present colors p of m (k_p - 1) + p.
int lis_colored(const ColoredPermutation& pi);

int l_even(const SignedPermutation& sigma);
int l_odd(const SignedPermutation& sigma);

/// Uniform element of S_n^(m).
ColoredPermutation sample_colored(int n, int m, Rng& rng);
/// Uniform element of H_n.
SignedPermutation sample_signed(int n, Rng& rng);

/// Shape of the RSK insertion tableau of a sequence of distinct values.
template <typename T>
Partition rsk_shape(std::span<const T> seq) {
    std::vector<std::vector<T>> rows;
    for (T value : seq) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({value});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), value);
            if (it == row.end()) {
                row.push_back(value);
                break;
            }
            std::swap(*it, value);
        }
    }
    std::vector<int> lengths;
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

/// combine of the per-color RSK shapes: an m-decomposable shape with mn
/// cells whose width equals lis_colored(pi).
Partition shape_of_colored(const ColoredPermutation& pi);

/// Lexicographic walk over all of S_n^(m); throws GuardError past kEnumerationLimit.
class ColoredPermutationStream {
public:
    ColoredPermutationStream(int n, int m);
    std::optional<ColoredPermutation> next();
    std::uint64_t total() const noexcept { return total_; }

private:
    int n_, m_;
    std::vector<int> sigma_, colors_;
    bool started_ = false;
    bool done_ = false;
    std::uint64_t total_;
};

/// Walk over all of H_n; throws GuardError past kEnumerationLimit.
class SignedPermutationStream {
public:
    explicit SignedPermutationStream(int n);
    std::optional<SignedPermutation> next();
    std::uint64_t total() const noexcept { return total_; }

private:
    ColoredPermutationStream inner_;
    std::uint64_t total_;
};

/// |S_n^(m)| = m^n n!, saturating at UINT64_MAX.
std::uint64_t colored_group_order(int n, int m);

}  // namespace rimhook
