#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rimhook/quotient.hpp"

namespace rimhook {

struct IdentityCheck {
    std::string identity;  // e.g. "sum-dim-squared"
    std::string label;     // e.g. "m=2 n=3"
    bool skipped = false;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<IdentityCheck> rows;

    bool all_passed() const;
    bool any_skipped() const;
    /// Rows with the given identity name that failed.
    std::vector<const IdentityCheck*> failures(const std::string& identity) const;
};

struct VerifyOptions {
    int max_n = 5;
    int max_m = 3;
    /// dim_m used in the sum-of-squares identity; replaceable so the harness
    /// itself can be mutation-tested.
    std::function<BigInt(const Partition&, int)> square_sum_dimension = [](const Partition& lambda,
                                                                          int m) {
        return dim_m_formula(core_and_quotient(lambda, m).quotient);
    };
};

/// Exact identity suite:
///   sum-dim-squared     sum_{|lambda|=mn} dim_m^2 = m^n n!
///   width-defect        m max_k w(lambda_k) - w(lambda) in {0..m-1}
///   dimension-oracle    product formula on the quotient == rim-hook removal count
///   colored-width       w(shape_of_colored(pi)) == lis_colored(pi)
///   colored-even-law    law of lis_colored on S_n^(2) == law of l_even on H_n
///   odd-even-gap        l_odd - l_even in {0, 1} on H_n
VerifyReport verify_identities(const VerifyOptions& options = {});

}  // namespace rimhook
