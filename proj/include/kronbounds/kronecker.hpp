#pragma once

#include "kronbounds/character.hpp"
#include "kronbounds/contingency.hpp"
#include "kronbounds/numeric.hpp"
#include "kronbounds/partition.hpp"

namespace kronbounds {

/// Kronecker coefficient g(lambda, mu, nu) as the character average over
/// S_n, refactored as a sum over conjugacy classes (P(n) terms). The final
/// division by n! must be exact; a remainder signals a character bug and
/// raises std::logic_error. By convention g((),(),()) = 1.
Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
              CharacterStore* store = nullptr);

/// The same coefficient by the independent signed contingency-array formula:
/// a sum over permutation triples of CA counts at staircase-shifted margins.
/// Only permutations with nonnegative shifted margins contribute; the guard
/// rejects calls whose surviving term count exceeds the budget.
Int kronecker_alternating(const Partition& lambda, const Partition& mu,
                          const Partition& nu, long long budget = 100'000'000);

/// True iff all six argument permutations and the three pairwise-conjugate
/// variants give one common value.
bool symmetry_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                    CharacterStore* store = nullptr);

}  // namespace kronbounds
