#include "rimhook/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rimhook {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

std::string to_decimal(const Rational& value, int digits) {
    if (value < 0) throw std::invalid_argument("to_decimal expects a nonnegative value");
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    const BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled % scale).str();
    std::string out = whole.str();
    if (digits > 0) {
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("partition rows must be weakly decreasing");
        size_ += rows_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    if (text == "-" || text.empty()) return {};
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("malformed partition: " + std::string(text));
        rows.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(rows));
}

std::string Partition::to_string() const {
    if (rows_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ',';
        out << rows_[i];
    }
    return out.str();
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.width()), 0);
    for (int r : lambda.rows())
        for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.row(i) > outer.row(i)) return false;
    return true;
}

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0) current_.push_back(n_);
        if (n_ == 0) done_ = true;
        return Partition(current_);
    }
    // Rightmost part exceeding 1: decrement it and refill greedily.
    int ones = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++ones;
    }
    if (current_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    const int part = --current_.back();
    int remaining = ones + 1;
    while (remaining > 0) {
        const int take = std::min(part, remaining);
        current_.push_back(take);
        remaining -= take;
    }
    return Partition(current_);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

BigInt dim_1(const Partition& lambda) {
    const Partition cols = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j)
            hooks *= (lambda.row(i) - j - 1) + (cols.row(j) - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> rows(lambda.rows().begin(), lambda.rows().end());
    for (int i = 0; i <= lambda.length(); ++i) {
        if (i == 0 || lambda.row(i) < lambda.row(i - 1)) {
            auto next = rows;
            if (i == lambda.length())
                next.push_back(1);
            else
                ++next[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(next));
        }
    }
    return out;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> rows(lambda.rows().begin(), lambda.rows().end());
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.row(i) > lambda.row(i + 1)) {
            auto next = rows;
            if (--next[static_cast<std::size_t>(i)] == 0) next.pop_back();
            out.emplace_back(std::move(next));
        }
    }
    return out;
}

}  // namespace rimhook
