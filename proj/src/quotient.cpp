#include "rimhook/quotient.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace rimhook {

PartitionTuple::PartitionTuple(int m) {
    if (m < 1) throw std::invalid_argument("PartitionTuple: m must be >= 1");
    components_.resize(static_cast<std::size_t>(m));
}

PartitionTuple::PartitionTuple(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("PartitionTuple: m must be >= 1");
}

PartitionTuple PartitionTuple::parse(std::string_view text) {
    std::vector<Partition> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t slash = text.find('/', pos);
        parts.push_back(Partition::parse(text.substr(pos, slash - pos)));
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    return PartitionTuple(std::move(parts));
}

int PartitionTuple::total_size() const noexcept {
    int total = 0;
    for (const auto& p : components_) total += p.size();
    return total;
}

int PartitionTuple::max_width() const noexcept {
    int w = 0;
    for (const auto& p : components_) w = std::max(w, p.width());
    return w;
}

std::string PartitionTuple::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (k) out << '/';
        out << components_[k].to_string();
    }
    return out.str();
}

Abacus::Abacus(const Partition& lambda, int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("Abacus: m must be >= 1");
    beads_ = (lambda.length() + m - 1) / m * m;
    levels_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < beads_; ++i) {
        const int position = lambda.row(i) + beads_ - 1 - i;
        levels_[static_cast<std::size_t>(position % m)].push_back(position / m);
    }
    for (auto& runner : levels_) std::sort(runner.begin(), runner.end());
}

Abacus::Abacus(int m, int beads, std::vector<std::vector<int>> levels)
    : m_(m), beads_(beads), levels_(std::move(levels)) {}

Partition Abacus::from_positions(std::vector<int> positions) {
    std::sort(positions.begin(), positions.end(), std::greater<>());
    const int t = static_cast<int>(positions.size());
    std::vector<int> rows;
    for (int i = 0; i < t; ++i) {
        const int part = positions[static_cast<std::size_t>(i)] - (t - 1 - i);
        if (part > 0) rows.push_back(part);
    }
    return Partition(std::move(rows));
}

Partition Abacus::partition() const {
    std::vector<int> positions;
    for (int r = 0; r < m_; ++r)
        for (int level : levels_[static_cast<std::size_t>(r)]) positions.push_back(level * m_ + r);
    return from_positions(std::move(positions));
}

Partition Abacus::core() const {
    std::vector<int> positions;
    for (int r = 0; r < m_; ++r) {
        const auto count = static_cast<int>(levels_[static_cast<std::size_t>(r)].size());
        for (int level = 0; level < count; ++level) positions.push_back(level * m_ + r);
    }
    return from_positions(std::move(positions));
}

PartitionTuple Abacus::quotient() const {
    std::vector<Partition> components;
    components.reserve(static_cast<std::size_t>(m_));
    for (const auto& runner : levels_) components.push_back(from_positions(runner));
    return PartitionTuple(std::move(components));
}

CoreQuotient core_and_quotient(const Partition& lambda, int m) {
    const Abacus abacus(lambda, m);
    return {abacus.core(), abacus.quotient()};
}

bool is_decomposable(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("is_decomposable: m must be >= 1");
    if (lambda.size() % m != 0) return false;
    const Abacus abacus(lambda, m);
    const auto per_runner = static_cast<std::size_t>(abacus.beads() / m);
    return std::all_of(abacus.runners().begin(), abacus.runners().end(),
                       [&](const std::vector<int>& runner) { return runner.size() == per_runner; });
}

Partition combine(const PartitionTuple& quotient) {
    const int m = quotient.m();
    int per_runner = 0;
    for (const auto& component : quotient.components())
        per_runner = std::max(per_runner, component.length());
    std::vector<std::vector<int>> levels(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const Partition& component = quotient[r];
        auto& runner = levels[static_cast<std::size_t>(r)];
        for (int i = per_runner - 1; i >= 0; --i)
            runner.push_back(component.row(i) + per_runner - 1 - i);
    }
    return Abacus(m, per_runner * m, std::move(levels)).partition();
}

std::vector<Partition> removable_rim_hooks(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("removable_rim_hooks: m must be >= 1");
    std::vector<Partition> out;
    const int len = lambda.length();
    // A strip spanning rows top..bottom leaves mu_i = lambda_{i+1} - 1 for
    // top <= i < bottom, and cuts row `bottom` down to some value in
    // [lambda_{bottom+1}, lambda_bottom - 1].
    for (int top = 0; top < len; ++top) {
        int cells_above = 0;
        for (int bottom = top; bottom < len; ++bottom) {
            if (bottom > top) cells_above += lambda.row(bottom - 1) - lambda.row(bottom) + 1;
            const int cut = lambda.row(bottom) - (m - cells_above);
            if (cells_above >= m) break;
            if (cut < lambda.row(bottom + 1) || cut > lambda.row(bottom) - 1) continue;
            std::vector<int> rows;
            for (int i = 0; i < len; ++i) {
                int value = lambda.row(i);
                if (i >= top && i < bottom) value = lambda.row(i + 1) - 1;
                if (i == bottom) value = cut;
                if (value > 0) rows.push_back(value);
            }
            out.emplace_back(std::move(rows));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

BigInt dim_m_formula(const PartitionTuple& quotient) {
    std::vector<int> sizes;
    BigInt product = 1;
    for (const auto& component : quotient.components()) {
        sizes.push_back(component.size());
        product *= dim_1(component);
    }
    return multinomial(sizes) * product;
}

namespace {

class RemovalCache {
public:
    static constexpr std::size_t kCapacity = 1u << 20;

    BigInt get_or_compute(const Partition& lambda, int m) {
        if (lambda.empty()) return 1;
        if (lambda.size() % m != 0) return 0;
        const auto key = std::make_pair(m, lambda.to_string());
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        BigInt total = 0;
        for (const auto& mu : removable_rim_hooks(lambda, m)) total += get_or_compute(mu, m);
        std::lock_guard lock(mutex_);
        if (memo_.size() >= kCapacity) memo_.clear();
        memo_.emplace(key, total);
        return total;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, std::string>, BigInt> memo_;
};

RemovalCache& removal_cache() {
    static RemovalCache cache;
    return cache;
}

}  // namespace

BigInt dim_m_removal(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("dim_m_removal: m must be >= 1");
    return removal_cache().get_or_compute(lambda, m);
}

int width_defect(const Partition& lambda, int m) {
    if (!is_decomposable(lambda, m))
        throw std::domain_error("width_defect: " + lambda.to_string() + " is not " +
                                std::to_string(m) + "-decomposable");
    const PartitionTuple q = Abacus(lambda, m).quotient();
    return m * q.max_width() - lambda.width();
}

}  // namespace rimhook
