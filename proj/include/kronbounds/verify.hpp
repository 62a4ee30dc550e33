#pragma once

#include "kronbounds/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace kronbounds {

struct CheckFailure {
  std::string instance;
  std::string detail;
};

/// Outcome of one verification suite. Failures are listed in enumeration
/// order, so the first entry is the minimal witnessing instance.
struct SuiteResult {
  std::string suite;
  long long checked = 0;
  std::vector<CheckFailure> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

/// Runs fn(0..count-1) on up to `jobs` worker threads. Callers collect
/// results into index-addressed slots, so output order never depends on the
/// degree of parallelism.
void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn);

/// Full S3-and-conjugation symmetry of the coefficients, all triples of n <= n_max.
SuiteResult verify_symmetry(int n_max, int jobs = 1);

/// Character-sum and alternating contingency-sum algorithms agree on all
/// ordered triples of n <= n_max.
SuiteResult verify_cross_algorithm(int n_max, int jobs = 1);

/// Fixed worked coefficients with known exact values.
SuiteResult verify_known_values();

/// Reduction map soundness on all ordered triples of n <= n_max: a zero
/// certificate means the coefficient vanishes; otherwise the reduced triple
/// has the same coefficient and size r <= 2*s*ell^2.
SuiteResult verify_reduction(int n_max, int jobs = 1);

/// Shift invariance below the stability criterion: every sorted triple of
/// n <= n_max meeting the criterion at some k <= k_max has a constant
/// sequence for t = 0..t_check; plus monotonicity of sampled sequences
/// through onset + 2.
SuiteResult verify_kstab(int n_max, int k_max, int t_check, int samples,
                         int sample_n_max, unsigned seed, int jobs = 1);

/// Upper-bound sandwich on all ordered triples of n <= n_max, the dominance
/// of the binomial product over the Schur ratio, and the character lower
/// bound for all self-conjugate mu of size <= lower_n_max.
SuiteResult verify_bounds(int n_max, int lower_n_max, int jobs = 1);

/// Two-coefficients identity: g(m^l, m^l, (lm-k, k)) equals the q-binomial
/// coefficient gap, for all l <= l_max, m <= m_max, k <= lm/2.
SuiteResult verify_lemma14(int l_max, int m_max, int jobs = 1);

/// The box-minus-distinct-odd difference polynomial is symmetric and
/// unimodal for n <= n_max.
SuiteResult verify_stanley(int n_max);

/// Distinct-odd gap recurrences for n <= n_max, unimodality of the trimmed
/// coefficient sequence, and the effective gap bound for n in
/// [eff_n_lo, eff_n_hi], 26 <= k <= n^2/2 (margin > 1e-9).
SuiteResult verify_almkvist(int n_max, int eff_n_lo, int eff_n_hi, int jobs = 1);

/// q-binomial suite: Sylvester symmetry/unimodality up to sylvester_max,
/// strict unimodality and the explicit gap bounds for boxes with sides in
/// [8, box_max], the square-shape gap bound, and the strictly growing
/// witness sequence delta_{2t}(4,t) for t = 4..witness_t_max.
SuiteResult verify_qbin(int box_max, int sylvester_max, int witness_t_max, int jobs = 1);

/// Semigroup inequality on randomly sampled positive pairs with component
/// sizes <= size_max.
SuiteResult verify_manivel(int samples, int size_max, unsigned seed);

/// Littlewood-Richardson suite: the dimension-ratio cap for all alpha of
/// size <= alpha_max over all splits, and agreement with the stable
/// coefficient for all |beta| + |gamma| <= stable_sum_max.
SuiteResult verify_lr(int alpha_max, int stable_sum_max, int jobs = 1);

}  // namespace kronbounds
