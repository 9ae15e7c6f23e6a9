#include "rimhook/verify.hpp"

#include <algorithm>

#include "rimhook/permutation.hpp"
#include "rimhook/plancherel.hpp"

namespace rimhook {

bool VerifyReport::all_passed() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const IdentityCheck& r) { return r.skipped || r.passed; });
}

bool VerifyReport::any_skipped() const {
    return std::any_of(rows.begin(), rows.end(), [](const IdentityCheck& r) { return r.skipped; });
}

std::vector<const IdentityCheck*> VerifyReport::failures(const std::string& identity) const {
    std::vector<const IdentityCheck*> out;
    for (const auto& r : rows)
        if (r.identity == identity && !r.skipped && !r.passed) out.push_back(&r);
    return out;
}

namespace {

constexpr int kMaxCells = 40;

std::string mn_label(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

IdentityCheck square_sum_row(int m, int n, const VerifyOptions& options) {
    IdentityCheck row{.identity = "sum-dim-squared", .label = mn_label(m, n), .detail = {}};
    if (m * n > kMaxCells) {
        row.skipped = true;
        row.detail = "shape enumeration guard (mn > 40)";
        return row;
    }
    BigInt sum = 0;
    PartitionStream stream(m * n);
    while (auto lambda = stream.next()) {
        if (!is_decomposable(*lambda, m)) continue;
        const BigInt d = options.square_sum_dimension(*lambda, m);
        sum += d * d;
        ++row.checked;
    }
    BigInt expected = factorial(n);
    for (int i = 0; i < n; ++i) expected *= m;
    row.passed = sum == expected;
    row.detail = "sum=" + sum.str() + " expected=" + expected.str();
    return row;
}

IdentityCheck width_defect_row(int m, int max_cells) {
    IdentityCheck row{.identity = "width-defect", .label = "m=" + std::to_string(m) + " |lambda|<=" + std::to_string(max_cells), .detail = {}};
    int violations = 0;
    for (int size = 0; size <= max_cells; size += m) {
        PartitionStream stream(size);
        while (auto lambda = stream.next()) {
            if (!is_decomposable(*lambda, m)) continue;
            const int defect = width_defect(*lambda, m);
            ++row.checked;
            if (defect < 0 || defect > m - 1) ++violations;
        }
    }
    row.passed = violations == 0;
    row.detail = "violations=" + std::to_string(violations);
    return row;
}

IdentityCheck dimension_oracle_row(int m, int max_cells) {
    IdentityCheck row{.identity = "dimension-oracle", .label = "m=" + std::to_string(m) + " |lambda|<=" + std::to_string(max_cells), .detail = {}};
    int mismatches = 0;
    for (int size = 0; size <= max_cells; size += m) {
        PartitionStream stream(size);
        while (auto lambda = stream.next()) {
            if (!is_decomposable(*lambda, m)) continue;
            ++row.checked;
            if (dim_m_formula(core_and_quotient(*lambda, m).quotient) != dim_m_removal(*lambda, m))
                ++mismatches;
        }
    }
    row.passed = mismatches == 0;
    row.detail = "mismatches=" + std::to_string(mismatches);
    return row;
}

bool guarded(IdentityCheck& row, int n, int m) {
    const auto order = colored_group_order(n, m);
    if (order <= kEnumerationLimit) return false;
    row.skipped = true;
    row.detail = "enumeration guard (" + std::to_string(order) + " elements)";
    return true;
}

IdentityCheck colored_width_row(int m, int n) {
    IdentityCheck row{.identity = "colored-width", .label = mn_label(m, n), .detail = {}};
    if (guarded(row, n, m)) return row;
    int mismatches = 0;
    ColoredPermutationStream stream(n, m);
    while (auto pi = stream.next()) {
        ++row.checked;
        if (shape_of_colored(*pi).width() != lis_colored(*pi)) ++mismatches;
    }
    row.passed = mismatches == 0;
    row.detail = "mismatches=" + std::to_string(mismatches);
    return row;
}

IdentityCheck colored_even_row(int n) {
    IdentityCheck row{.identity = "colored-even-law", .label = "n=" + std::to_string(n), .detail = {}};
    if (guarded(row, n, 2)) return row;
    const auto colored = enumerate_L_colored(n, 2);
    const auto even = enumerate_L_even(n);
    row.checked = colored_group_order(n, 2);
    row.passed = colored == even;
    if (2 * n <= kMaxCells) row.passed = row.passed && exact_L_distribution(n, 2) == even;
    row.detail = row.passed ? "distributions equal" : "distributions differ";
    return row;
}

IdentityCheck odd_even_row(int n) {
    IdentityCheck row{.identity = "odd-even-gap", .label = "n=" + std::to_string(n), .detail = {}};
    if (guarded(row, n, 2)) return row;
    int violations = 0;
    SignedPermutationStream stream(n);
    while (auto sigma = stream.next()) {
        ++row.checked;
        const int gap = l_odd(*sigma) - l_even(*sigma);
        if (gap != 0 && gap != 1) ++violations;
    }
    row.passed = violations == 0;
    row.detail = "violations=" + std::to_string(violations);
    return row;
}

}  // namespace

VerifyReport verify_identities(const VerifyOptions& options) {
    VerifyReport report;
    if (options.max_n < 1 || options.max_m < 1) return report;
    for (int m = 1; m <= options.max_m; ++m)
        for (int n = 1; n <= options.max_n; ++n) report.rows.push_back(square_sum_row(m, n, options));
    for (int m = 2; m <= options.max_m; ++m) {
        report.rows.push_back(width_defect_row(m, std::min(m * options.max_n, kMaxCells)));
        report.rows.push_back(dimension_oracle_row(m, std::min(m * options.max_n, kMaxCells)));
    }
    for (int m = 2; m <= options.max_m; ++m)
        for (int n = 1; n <= options.max_n; ++n) report.rows.push_back(colored_width_row(m, n));
    for (int n = 1; n <= options.max_n; ++n) {
        report.rows.push_back(colored_even_row(n));
        report.rows.push_back(odd_even_row(n));
    }
    return report;
}

}  // namespace rimhook
