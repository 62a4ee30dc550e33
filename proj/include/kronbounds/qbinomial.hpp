#pragma once

#include "kronbounds/numeric.hpp"

#include <string>
#include <vector>

namespace kronbounds {

/// Dense polynomial in q with exact integer coefficients, index = power.
/// Canonical form stores no trailing zero coefficient; the zero polynomial
/// has degree -1. Values are immutable in practice and safe to share.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);

  static IntPolynomial one();

  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient accessor with zero padding outside the stored range.
  const Int& coeff(long long k) const;
  const std::vector<Int>& coefficients() const { return c_; }

  Int eval_at_one() const;
  /// Multiplication by q^e.
  IntPolynomial shifted(long long e) const;
  /// Coefficients lo..hi re-indexed from 0.
  IntPolynomial slice(long long lo, long long hi) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Comma-separated coefficient list, lowest power first; "0" when zero.
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Int> c_;
};

/// Gaussian binomial [l+m choose m]_q: coefficient of q^k counts partitions
/// of k inside an l x m box. Computed by the Pascal-type recurrence over
/// exact integer polynomials, so no division is involved.
IntPolynomial gaussian_binomial(int l, int m);

/// Consecutive coefficient gap p_k(l,m) - p_{k-1}(l,m); may be negative past
/// the midpoint. Overload on a precomputed polynomial for tight loops.
Int delta(int l, int m, long long k);
Int delta(const IntPolynomial& box_poly, long long k);

/// prod_{i=1..n} (1 + q^{2i-1}); coefficient of q^k counts partitions of k
/// into distinct odd parts <= 2n-1.
IntPolynomial distinct_odd_poly(int n);

/// Checks the coefficient recurrences of the distinct-odd generating
/// function: for 3 <= k <= 2n+1 the gap b_k(n)-b_{k-1}(n) is stable in n,
/// and for 2n+2 <= k <= (n-1)^2/2 it picks up the shifted correction term.
/// Throws std::domain_error for k outside both ranges.
bool almkvist_recurrence_check(int n, long long k);

/// gaussian_binomial(n,n) minus distinct_odd_poly(n), coefficientwise.
IntPolynomial stanley_difference(int n);

struct SymUnimodal {
  bool symmetric = false;
  bool unimodal = false;
};

/// Symmetry is judged about the given center (passed doubled so half-integer
/// centers stay exact); unimodality means the coefficients weakly rise then
/// weakly fall over the stored range.
SymUnimodal is_symmetric_unimodal(const IntPolynomial& p, long long center_times_2);

/// C = 3*sqrt(3)/(sqrt(2)*pi^2), about 0.37.
Real gap_constant_C();
/// A = 2^{-9/sqrt(2)} * C, about 0.00449.
Real gap_constant_A();
/// sqrt(27/8)/pi^2, the halved constant used for square-shape gaps.
Real square_gap_constant();

/// C * 2^{sqrt(2k)} / (2k)^{9/4}: the effective lower bound for the
/// distinct-odd coefficient gaps, k >= 1.
Real almkvist_gap_bound(long long k);

/// square_gap_constant * 2^{sqrt(2k)} / (2k)^{9/4}: lower bound for
/// delta_k(n,n) on squares with n >= 8.
Real square_gap_bound(long long k);

/// A * 2^{sqrt(s)} / s^{9/4} with s = min(2k, l^2); requires m >= l >= 8 and
/// 2 <= k <= lm/2, evaluated to 50 significant digits.
Real effective_gap_bound(int l, int m, long long k);

/// C * 2^{sqrt(v)} / v^{9/4} with v = min(k, a^2/2) for the auxiliary square
/// side a = 2*floor((l-8)/2), less one when lm is odd; requires the side to
/// be positive, so l >= 10 (even product) resp. l >= 11.
Real rect_gap_bound(int l, int m, long long k);

}  // namespace kronbounds
