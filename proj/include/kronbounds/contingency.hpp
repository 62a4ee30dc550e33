#pragma once

#include "kronbounds/numeric.hpp"

#include <vector>

namespace kronbounds {

/// Margins of a 3-dimensional contingency array. The three vectors are the
/// prescribed 2-dimensional marginal sums of an array of shape
/// len(alpha) x len(beta) x len(gamma); binary restricts entries to {0,1}.
/// Margins may be arbitrary integer vectors: any negative component or a
/// total mismatch means no array exists and the count is 0.
struct ContingencySpec {
  std::vector<long long> alpha, beta, gamma;
  bool binary = false;
};

/// Exact number of arrays matching the spec. Counting enumerates entries in
/// lexicographic cell order with running-margin pruning, memoized on
/// (cells remaining, residual margins); results are cached globally under a
/// canonical margin key. Throws ResourceError when the estimated work
/// exceeds the budget.
Int count_contingency(const ContingencySpec& spec, long long budget = 100'000'000);

}  // namespace kronbounds
