#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronbounds {

/// Exact arbitrary-precision integer. Character values and contingency
/// counts overflow 64-bit words well inside the supported ranges, so every
/// counting result in this library is an Int.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for dimension-ratio bounds.
using Rat = boost::multiprecision::cpp_rational;

/// 50-decimal-digit float for the analytic gap bounds. All comparisons
/// against exact integers are required to hold with margin > 1e-9 so that
/// precision loss would be detected by the test suites.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Thrown when a computation would exceed the configured work budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int factorial(long long n);

/// Binomial coefficient with the convention C(n,k) = 0 for k < 0, n < 0 or
/// k > n. Negative upper indices arise in shifted-margin formulas.
Int binomial(long long n, long long k);

/// Quotient a/b asserting that the division is exact; a non-zero remainder
/// signals an internal consistency fault, not a user error.
Int exact_div(const Int& a, const Int& b);

std::string rat_to_string(const Rat& r);
Int rat_ceil(const Rat& r);

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace kronbounds
