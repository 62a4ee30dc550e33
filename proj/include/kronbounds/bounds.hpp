#pragma once

#include "kronbounds/character.hpp"
#include "kronbounds/numeric.hpp"
#include "kronbounds/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kronbounds {

/// f^lambda * f^mu / f^nu, exact.
Rat upper_dimension(const Partition& lambda, const Partition& mu, const Partition& nu);

/// min(f^lambda, f^mu, f^nu).
Int upper_min(const Partition& lambda, const Partition& mu, const Partition& nu);

/// d_nu(ab) / (d_lambda(a) * d_mu(b)) with a, b the lengths of lambda, mu.
Rat upper_schur(const Partition& lambda, const Partition& mu, const Partition& nu);

/// prod_i C(nu_i - i + ab, nu_i); binomials with negative tops vanish.
Int upper_binomial_product(const Partition& lambda, const Partition& mu,
                           const Partition& nu);

/// (CA(lambda,mu,nu), CA*(lambda',mu,nu)), both upper bounds on g.
std::pair<Int, Int> upper_contingency(const Partition& lambda, const Partition& mu,
                                      const Partition& nu,
                                      long long budget = 100'000'000);

/// |chi^lambda[principal hooks of mu]|, a lower bound on g(lambda, mu, mu)
/// for self-conjugate mu. Throws std::domain_error otherwise.
Int lower_character(const Partition& lambda, const Partition& mu,
                    CharacterStore* store = nullptr);

/// The semigroup inequality g(l+a, m+b, n+c) >= max(g(l,m,n), g(a,b,c)).
/// Requires both component coefficients positive; nullopt when the
/// hypothesis fails. A false return signals an implementation bug.
std::optional<bool> check_manivel(const Partition& lambda, const Partition& mu,
                                  const Partition& nu, const Partition& alpha,
                                  const Partition& beta, const Partition& gamma,
                                  CharacterStore* store = nullptr);

/// Littlewood-Richardson coefficient c^alpha_{beta gamma} by direct
/// lattice-word enumeration of skew tableaux; 0 on size mismatch.
Int lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// f^alpha / (f^beta * f^gamma), exact; requires |beta| + |gamma| = |alpha|.
Rat lr_upper_bound(const Partition& alpha, const Partition& beta, const Partition& gamma);

struct BoundEntry {
  std::string name;
  enum class Direction { Upper, Lower } direction = Direction::Upper;
  bool applicable = false;
  Rat value;  // exact; integers have denominator 1
  std::optional<bool> satisfied;
};

/// One triple with its true coefficient (when affordable) and every
/// applicable bound, each flagged against the true value.
struct BoundReport {
  Partition lambda, mu, nu;
  std::optional<Int> true_g;
  std::vector<BoundEntry> entries;
};

/// Evaluates every bound for the triple. true_g is skipped when the class
/// count times the estimated character cost exceeds the budget; inapplicable
/// or over-budget bounds are marked, never errors.
BoundReport full_report(const Partition& lambda, const Partition& mu, const Partition& nu,
                        long long budget = 100'000'000, CharacterStore* store = nullptr);

}  // namespace kronbounds
