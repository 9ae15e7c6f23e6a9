#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rimhook {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "0.3.0";

/// Raised when an exhaustive computation would exceed its size guard.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& what, std::uint64_t required, std::uint64_t limit)
        : std::runtime_error(what + " (requires " + std::to_string(required) +
                             ", limit " + std::to_string(limit) + ")"),
          required_(required),
          limit_(limit) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

BigInt factorial(int n);

/// n! / (k_1! ... k_r!) for k_1 + ... + k_r = n.
template <typename Range>
BigInt multinomial(const Range& parts) {
    int total = 0;
    for (int k : parts) total += k;
    BigInt result = factorial(total);
    for (int k : parts) result /= factorial(k);
    return result;
}

/// Decimal rendering of a rational in [0, inf) with `digits` fractional digits, rounded half-up.
std::string to_decimal(const Rational& value, int digits);

}  // namespace rimhook
