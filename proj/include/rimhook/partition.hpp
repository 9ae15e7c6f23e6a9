#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rimhook/common.hpp"

namespace rimhook {

/// A Young diagram: weakly decreasing positive row lengths. The empty
/// diagram is a regular value with size 0 and width 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
    explicit Partition(std::vector<int> rows);

    /// Accepts the serialized form: "3,1" or "-" for the empty diagram.
    static Partition parse(std::string_view text);

    std::span<const int> rows() const noexcept { return rows_; }
    int size() const noexcept { return size_; }
    int width() const noexcept { return rows_.empty() ? 0 : rows_.front(); }
    int length() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }

    /// Row i (0-based); 0 past the last row.
    int row(int i) const noexcept {
        return i < length() ? rows_[static_cast<std::size_t>(i)] : 0;
    }

    /// Whether cell (row i, column j), both 0-based, belongs to the diagram.
    bool contains_cell(int i, int j) const noexcept { return i >= 0 && j >= 0 && j < row(i); }

    std::string to_string() const;

    bool operator==(const Partition& other) const noexcept { return rows_ == other.rows_; }
    std::strong_ordering operator<=>(const Partition& other) const noexcept {
        return rows_ <=> other.rows_;
    }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// Inclusion of Young diagrams: inner ⊆ outer.
bool contains(const Partition& outer, const Partition& inner);

/// Single-pass stream over the partitions of n in lexicographically
/// descending order: (n), (n-1,1), ..., (1^n).
class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<Partition> next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
    int n_;
};

/// All partitions of n, in the order of PartitionStream.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
BigInt dim_1(const Partition& lambda);

/// Cells that can be added to / removed from lambda keeping a Young diagram.
std::vector<Partition> add_one_box(const Partition& lambda);
std::vector<Partition> remove_one_box(const Partition& lambda);

}  // namespace rimhook
