#include "rimhook/permutation.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "rimhook/quotient.hpp"

namespace rimhook {

namespace {

void check_bijection(std::span<const int> values, const char* what) {
    std::vector<char> seen(values.size() + 1, 0);
    for (int v : values) {
        if (v < 1 || v > static_cast<int>(values.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument(std::string(what) + " is not a bijection of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

}  // namespace

ColoredPermutation::ColoredPermutation(std::vector<int> sigma, std::vector<int> colors, int m)
    : sigma_(std::move(sigma)), colors_(std::move(colors)), m_(m) {
    if (m < 1) throw std::invalid_argument("ColoredPermutation: m must be >= 1");
    check_bijection(sigma_, "sigma");
    if (colors_.size() != sigma_.size())
        throw std::invalid_argument("ColoredPermutation: colors must have length n");
    for (int c : colors_)
        if (c < 1 || c > m) throw std::invalid_argument("ColoredPermutation: color out of 1..m");
}

std::vector<int> ColoredPermutation::color_subword(int color) const {
    std::vector<int> word;
    for (std::size_t i = 0; i < sigma_.size(); ++i)
        if (colors_[i] == color) word.push_back(sigma_[i]);
    return word;
}

std::string ColoredPermutation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
        if (i) out << ' ';
        out << sigma_[i] << '^' << colors_[i];
    }
    return out.str();
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    check_bijection(perm_, "perm");
    if (signs_.size() != perm_.size())
        throw std::invalid_argument("SignedPermutation: signs must have length n");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +-1");
}

int SignedPermutation::operator()(int x) const {
    if (x == 0) return 0;
    const int a = x < 0 ? -x : x;
    if (a > n()) throw std::out_of_range("SignedPermutation: argument out of range");
    const int image = signs_[static_cast<std::size_t>(a - 1)] * perm_[static_cast<std::size_t>(a - 1)];
    return x < 0 ? -image : image;
}

std::vector<int> SignedPermutation::even_sequence() const {
    const int n = this->n();
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    for (int x = -n; x <= -1; ++x) seq.push_back((*this)(x));
    for (int x = 1; x <= n; ++x) seq.push_back((*this)(x));
    return seq;
}

std::vector<int> SignedPermutation::odd_sequence() const {
    auto seq = even_sequence();
    seq.insert(seq.begin() + n(), 0);
    return seq;
}

std::vector<int> color_lis_lengths(const ColoredPermutation& pi) {
    // Per-color patience piles in a single pass.
    std::vector<std::vector<int>> tops(static_cast<std::size_t>(pi.m()));
    const auto sigma = pi.sigma();
    const auto colors = pi.colors();
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        auto& pile = tops[static_cast<std::size_t>(colors[i] - 1)];
        auto it = std::lower_bound(pile.begin(), pile.end(), sigma[i]);
        if (it == pile.end())
            pile.push_back(sigma[i]);
        else
            *it = sigma[i];
    }
    std::vector<int> lengths;
    lengths.reserve(tops.size());
    for (const auto& pile : tops) lengths.push_back(static_cast<int>(pile.size()));
    return lengths;
}

int lis_colored(const ColoredPermutation& pi) {
    const auto k = color_lis_lengths(pi);
    int best = 0;
    for (int p = 1; p <= pi.m(); ++p) {
        const int kp = k[static_cast<std::size_t>(p - 1)];
        if (kp > 0) best = std::max(best, pi.m() * (kp - 1) + p);
    }
    return best;
}

int l_even(const SignedPermutation& sigma) { return lis_plain(sigma.even_sequence()); }
int l_odd(const SignedPermutation& sigma) { return lis_plain(sigma.odd_sequence()); }

ColoredPermutation sample_colored(int n, int m, Rng& rng) {
    if (n < 1 || m < 1) throw std::invalid_argument("sample_colored: n, m must be >= 1");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    for (std::size_t i = sigma.size() - 1; i > 0; --i)
        std::swap(sigma[i], sigma[rng.below(i + 1)]);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (auto& c : colors) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    return ColoredPermutation(std::move(sigma), std::move(colors), m);
}

SignedPermutation sample_signed(int n, Rng& rng) {
    auto pi = sample_colored(n, 2, rng);
    std::vector<int> signs;
    for (int c : pi.colors()) signs.push_back(c == 1 ? 1 : -1);
    return SignedPermutation(std::vector<int>(pi.sigma().begin(), pi.sigma().end()),
                             std::move(signs));
}

Partition shape_of_colored(const ColoredPermutation& pi) {
    std::vector<Partition> components;
    for (int p = 1; p <= pi.m(); ++p) {
        const auto word = pi.color_subword(p);
        components.push_back(rsk_shape(std::span<const int>(word)));
    }
    return combine(PartitionTuple(std::move(components)));
}

std::uint64_t colored_group_order(int n, int m) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (int i = 1; i <= n; ++i) {
        const auto factor = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m);
        if (total > kMax / factor) return kMax;
        total *= factor;
    }
    return total;
}

ColoredPermutationStream::ColoredPermutationStream(int n, int m)
    : n_(n), m_(m), total_(colored_group_order(n, m)) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_colored: n, m must be >= 1");
    if (total_ > kEnumerationLimit)
        throw GuardError("enumeration of S_" + std::to_string(n) + "^(" + std::to_string(m) +
                             ") refused",
                         total_, kEnumerationLimit);
    sigma_.resize(static_cast<std::size_t>(n));
    std::iota(sigma_.begin(), sigma_.end(), 1);
    colors_.assign(static_cast<std::size_t>(n), 1);
}

std::optional<ColoredPermutation> ColoredPermutationStream::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Colors vary fastest (odometer), then sigma in lexicographic order.
        std::size_t i = colors_.size();
        while (i > 0 && colors_[i - 1] == m_) colors_[--i] = 1;
        if (i > 0) {
            ++colors_[i - 1];
        } else if (!std::next_permutation(sigma_.begin(), sigma_.end())) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    return ColoredPermutation(sigma_, colors_, m_);
}

SignedPermutationStream::SignedPermutationStream(int n)
    : inner_(n, 2), total_(colored_group_order(n, 2)) {}

std::optional<SignedPermutation> SignedPermutationStream::next() {
    auto pi = inner_.next();
    if (!pi) return std::nullopt;
    std::vector<int> signs;
    for (int c : pi->colors()) signs.push_back(c == 1 ? 1 : -1);
    return SignedPermutation(std::vector<int>(pi->sigma().begin(), pi->sigma().end()),
                             std::move(signs));
}

}  // namespace rimhook
