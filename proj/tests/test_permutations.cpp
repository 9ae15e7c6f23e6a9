#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rimhook/permutation.hpp"
#include "rimhook/quotient.hpp"

using namespace rimhook;

namespace {

int brute_force_lis(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int last = 0, length = 0;
        bool increasing = true;
        for (int i = 0; i < n && increasing; ++i) {
            if (!(mask >> i & 1u)) continue;
            if (length > 0 && seq[static_cast<std::size_t>(i)] <= last) increasing = false;
            last = seq[static_cast<std::size_t>(i)];
            ++length;
        }
        if (increasing) best = std::max(best, length);
    }
    return best;
}

// Longest colored increasing subsequence by definition: a common color p and
// k increasing positions contribute m(k - 1) + p.
int brute_force_colored(const ColoredPermutation& pi) {
    const int n = pi.n();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int color = 0, last = 0, k = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            const int c = pi.colors()[static_cast<std::size_t>(i)];
            const int v = pi.sigma()[static_cast<std::size_t>(i)];
            if (k > 0 && (c != color || v <= last)) ok = false;
            color = c;
            last = v;
            ++k;
        }
        if (ok) best = std::max(best, pi.m() * (k - 1) + color);
    }
    return best;
}

}  // namespace

TEST_CASE("lis_plain examples") {
    std::vector<int> id(9);
    std::iota(id.begin(), id.end(), 1);
    CHECK(lis_plain(id) == 9);
    CHECK(lis_plain(std::vector<int>{2, 1}) == 1);
    CHECK(lis_plain(std::vector<int>{}) == 0);
    CHECK(lis_plain(std::vector<int>{3, 1, 4, 5, 9, 2, 6}) == 4);
}

TEST_CASE("lis_plain agrees with subset enumeration") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        std::vector<int> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), -n / 2);
        for (int i = n - 1; i > 0; --i)
            std::swap(seq[static_cast<std::size_t>(i)], seq[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        CHECK(lis_plain(seq) == brute_force_lis(seq));
    }
}

TEST_CASE("colored permutation validation") {
    CHECK_THROWS_AS(ColoredPermutation({1, 1}, {1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation({1, 2}, {1, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation({1, 2}, {1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({1, 2}, {1, 0}), std::invalid_argument);
    const ColoredPermutation pi({2, 3, 1}, {1, 1, 2}, 2);
    CHECK(pi.color_subword(1) == std::vector<int>{2, 3});
    CHECK(pi.color_subword(2) == std::vector<int>{1});
}

TEST_CASE("lis_colored examples") {
    for (int p = 1; p <= 4; ++p) CHECK(lis_colored(ColoredPermutation({1}, {p}, 4)) == p);
    CHECK(lis_colored(ColoredPermutation({2, 3, 1}, {1, 1, 2}, 2)) == 3);
    CHECK(lis_colored(ColoredPermutation({1, 2}, {2, 2}, 2)) == 4);
}

TEST_CASE("lis_colored agrees with the definition on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(9));
        const int m = 1 + static_cast<int>(rng.below(4));
        const auto pi = sample_colored(n, m, rng);
        CHECK(lis_colored(pi) == brute_force_colored(pi));
        int max_k = 0;
        for (int k : color_lis_lengths(pi)) max_k = std::max(max_k, k);
        const int gap = m * max_k - lis_colored(pi);
        CHECK(gap >= 0);
        CHECK(gap <= m - 1);
    }
}

TEST_CASE("enumeration of S_2^(2)") {
    ColoredPermutationStream stream(2, 2);
    CHECK(stream.total() == 8);
    std::vector<int> values;
    while (auto pi = stream.next()) values.push_back(lis_colored(*pi));
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<int>{1, 2, 2, 2, 2, 2, 3, 4});
}

TEST_CASE("enumeration covers each group element once") {
    std::set<std::string> seen;
    ColoredPermutationStream stream(3, 3);
    while (auto pi = stream.next()) CHECK(seen.insert(pi->to_string()).second);
    CHECK(seen.size() == 162);

    ColoredPermutationStream one(1, 3);
    std::vector<int> values;
    while (auto pi = one.next()) values.push_back(lis_colored(*pi));
    CHECK(values.size() == 3);
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<int>{1, 2, 3});

    SignedPermutationStream signed_two(2);
    int count = 0;
    while (signed_two.next()) ++count;
    CHECK(count == 8);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(ColoredPermutationStream(9, 3), GuardError);
    try {
        SignedPermutationStream stream(10);
        FAIL("guard did not trigger");
    } catch (const GuardError& e) {
        CHECK(e.required() == 3'715'891'200ULL);
        CHECK(e.limit() == kEnumerationLimit);
    }
    CHECK(colored_group_order(5, 2) == 3840);
    CHECK(colored_group_order(40, 40) == UINT64_MAX);
}

TEST_CASE("signed permutation statistics") {
    const SignedPermutation plus({1}, {1});
    CHECK(plus.even_sequence() == std::vector<int>{-1, 1});
    CHECK(plus.odd_sequence() == std::vector<int>{-1, 0, 1});
    CHECK(l_even(plus) == 2);
    CHECK(l_odd(plus) == 3);

    const SignedPermutation minus({1}, {-1});
    CHECK(minus.even_sequence() == std::vector<int>{1, -1});
    CHECK(minus.odd_sequence() == std::vector<int>{1, 0, -1});
    CHECK(l_even(minus) == 1);
    CHECK(l_odd(minus) == 1);

    const SignedPermutation sigma({2, 1}, {-1, 1});
    CHECK(sigma(1) == -2);
    CHECK(sigma(-1) == 2);
    CHECK(sigma(2) == 1);
    CHECK(sigma.even_sequence() == std::vector<int>{-1, 2, -2, 1});
}

TEST_CASE("odd and even statistics differ by at most one on H_n") {
    for (int n = 1; n <= 5; ++n) {
        SignedPermutationStream stream(n);
        while (auto sigma = stream.next()) {
            const int gap = l_odd(*sigma) - l_even(*sigma);
            CHECK((gap == 0 || gap == 1));
        }
    }
}

TEST_CASE("shape_of_colored") {
    const auto single = shape_of_colored(ColoredPermutation({1}, {1}, 2));
    CHECK((single == Partition({2}) || single == Partition({1, 1})));
    CHECK(2 - single.width() >= 0);
    CHECK(2 - single.width() <= 1);
    CHECK(single.width() == 1);

    const auto shape = shape_of_colored(ColoredPermutation({1, 2}, {2, 2}, 2));
    CHECK(shape.width() == 4);
    CHECK(rsk_shape(std::span<const int>(std::vector<int>{3, 1, 2}.data(), 3)) == Partition({2, 1}));
}

TEST_CASE("colored shape width equals colored LIS") {
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= (m == 2 ? 5 : 4); ++n) {
            ColoredPermutationStream stream(n, m);
            while (auto pi = stream.next()) {
                const auto shape = shape_of_colored(*pi);
                CHECK(shape.size() == m * n);
                CHECK(is_decomposable(shape, m));
                CHECK(shape.width() == lis_colored(*pi));
            }
        }
}

TEST_CASE("shape law on S_2^(2) is dim_m squared over the group order") {
    std::map<Partition, int> counts;
    ColoredPermutationStream stream(2, 2);
    while (auto pi = stream.next()) ++counts[shape_of_colored(*pi)];
    int total = 0;
    for (const auto& [shape, count] : counts) {
        const BigInt d = dim_m_removal(shape, 2);
        CHECK(BigInt(count) == d * d);
        total += count;
    }
    CHECK(total == 8);
}

TEST_CASE("sample_colored is uniform on S_2^(2)") {
    Rng rng(11);
    std::map<std::string, int> counts;
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) ++counts[sample_colored(2, 2, rng).to_string()];
    REQUIRE(counts.size() == 8);
    const double p = 1.0 / 8.0;
    const double se = std::sqrt(draws * p * (1 - p));
    double chi2 = 0.0;
    for (const auto& [key, count] : counts) {
        CHECK(std::abs(count - draws * p) < 4.0 * se);
        chi2 += (count - draws * p) * (count - draws * p) / (draws * p);
    }
    // 7 degrees of freedom; 24.32 is the 0.999 quantile.
    CHECK(chi2 < 24.32);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    Rng a(5), b(5);
    CHECK(sample_colored(1, 1, a).to_string() == sample_colored(1, 1, b).to_string());
    for (int i = 0; i < 20; ++i) CHECK(sample_colored(12, 3, a).to_string() == sample_colored(12, 3, b).to_string());
    Rng c(6);
    CHECK(sample_colored(12, 3, a).to_string() != sample_colored(12, 3, c).to_string());
    const auto s = sample_signed(6, a);
    CHECK(s.n() == 6);
}
