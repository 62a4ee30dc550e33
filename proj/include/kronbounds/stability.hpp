#pragma once

#include "kronbounds/character.hpp"
#include "kronbounds/numeric.hpp"
#include "kronbounds/partition.hpp"

#include <array>
#include <optional>
#include <vector>

namespace kronbounds {

enum class ReductionKind { ZeroCertificate, Reduced };

/// Result of the size-reduction map on a triple. Either a certified zero
/// (witnessed by a row where |lambda_i - mu_i| exceeds s) or a reduced
/// triple with the full bookkeeping that produced it. Rows j with no anchor
/// index (no element of I at or above j) are carried over unchanged;
/// anchor[j-1] == 0 marks them and map_total reports whether any exist.
struct ReductionOutcome {
  ReductionKind kind = ReductionKind::Reduced;
  int witness_index = 0;

  Partition phi_lambda, phi_mu, phi_nu;
  long long r = 0;

  long long s = 0;
  Partition omega, rho;
  std::vector<int> index_set;  // I, ascending
  std::vector<int> anchor;     // i_j for j = 1..ell, 0 when undefined
  bool map_total = true;
};

/// Applies the reduction map with length bound ell (default: the maximum of
/// the three lengths). The Kronecker coefficient of a Reduced outcome equals
/// that of the input; a ZeroCertificate means it vanishes.
ReductionOutcome reduce(const Partition& lambda, const Partition& mu, const Partition& nu,
                        std::optional<int> ell = std::nullopt);

/// Sorts a triple by first part ascending (ties: length, then lexicographic)
/// so the third entry has the largest first row, as the stability criterion
/// assumes. Kronecker coefficients are invariant under the reordering.
std::array<Partition, 3> sort_triple(const Partition& a, const Partition& b,
                                     const Partition& c);

/// The min-max stability criterion at row k for the sorted triple:
/// min(lambda_k, mu_k) >= max(lambda_{k+1}, mu_{k+1}) + s with s = n - nu_1.
bool kstab_condition(const Partition& lambda, const Partition& mu, const Partition& nu,
                     int k);

/// Least t for which the shifted triple meets the criterion at row k,
/// in closed form: max(0, max(lambda_{k+1}, mu_{k+1}) + s - min(lambda_k, mu_k)).
int kstab_onset(const Partition& lambda, const Partition& mu, const Partition& nu, int k);

/// G_k(t) = g(lambda + (t^k), mu + (t^k), nu + (tk)) for t = 0..t_max, with
/// the first t at which the criterion holds. Values from the onset on are
/// constant and equal to the k-stable coefficient.
struct StabilitySequence {
  Partition lambda, mu, nu;  // sorted base triple
  int k = 1;
  std::vector<Int> values;
  int onset = 0;
  bool stabilized = false;  // t_max reached the onset
  Int stable_value;         // meaningful when stabilized
};

StabilitySequence stability_sequence(const Partition& lambda, const Partition& mu,
                                     const Partition& nu, int k, int t_max,
                                     CharacterStore* store = nullptr);

/// Stable Kronecker coefficient of three tails (the rows below the first).
/// Evaluates g on (t - |alpha|, alpha), ... just past the onset and asserts
/// the value no longer moves.
Int stable_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                     CharacterStore* store = nullptr);

enum class TailMode { Length, Durfee };

/// Size threshold that caps coefficients with a fixed third-row tail:
/// (l+1)*l*s rows-bounded, 2*(h+1)^2*s Durfee-bounded, where s = |nu_tail|.
long long tail_bound_u(const Partition& nu_tail, long long bound_param, TailMode mode);

/// Companion predicate: g(lambda, mu, (n-s, nu_tail)) <= f^{(u-s, nu_tail)}
/// whenever the corollary applies (n >= u and the length or Durfee bound
/// holds). Returns nullopt when inapplicable.
std::optional<bool> check_tail_bound(const Partition& lambda, const Partition& mu,
                                     const Partition& nu_tail, TailMode mode,
                                     long long bound_param,
                                     CharacterStore* store = nullptr);

}  // namespace kronbounds
