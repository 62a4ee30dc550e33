#include "kronbounds/qbinomial.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>

namespace kronbounds {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : c_(std::move(coefficients)) {
  canonicalize();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({Int(1)}); }

void IntPolynomial::canonicalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::coeff(long long k) const {
  if (k < 0 || k >= static_cast<long long>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

Int IntPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : c_) s += c;
  return s;
}

IntPolynomial IntPolynomial::shifted(long long e) const {
  if (is_zero()) return {};
  std::vector<Int> out(static_cast<std::size_t>(e), Int(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::slice(long long lo, long long hi) const {
  std::vector<Int> out;
  for (long long k = lo; k <= hi; ++k) out.push_back(coeff(k));
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  canonicalize();
  return *this;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].str();
  }
  return out;
}

IntPolynomial gaussian_binomial(int l, int m) {
  if (l < 0 || m < 0) throw std::domain_error("gaussian_binomial needs l, m >= 0");
  // B(l,m) = B(l-1,m) + q^l B(l,m-1): split on whether all l rows are used.
  std::vector<std::vector<IntPolynomial>> table(l + 1, std::vector<IntPolynomial>(m + 1));
  for (int j = 0; j <= m; ++j) table[0][j] = IntPolynomial::one();
  for (int i = 1; i <= l; ++i) {
    table[i][0] = IntPolynomial::one();
    for (int j = 1; j <= m; ++j)
      table[i][j] = table[i - 1][j] + table[i][j - 1].shifted(i);
  }
  return table[l][m];
}

Int delta(const IntPolynomial& box_poly, long long k) {
  return box_poly.coeff(k) - box_poly.coeff(k - 1);
}

Int delta(int l, int m, long long k) { return delta(gaussian_binomial(l, m), k); }

IntPolynomial distinct_odd_poly(int n) {
  if (n < 1) throw std::domain_error("distinct_odd_poly needs n >= 1");
  IntPolynomial p = IntPolynomial::one();
  for (int i = 1; i <= n; ++i) p += p.shifted(2 * i - 1);
  return p;
}

bool almkvist_recurrence_check(int n, long long k) {
  if (n < 2) throw std::domain_error("recurrence check needs n >= 2");
  IntPolynomial cur = distinct_odd_poly(n);
  IntPolynomial prev = distinct_odd_poly(n - 1);
  Int lhs = cur.coeff(k) - cur.coeff(k - 1);
  if (k >= 3 && k <= 2LL * n + 1) {
    return lhs == prev.coeff(k) - prev.coeff(k - 1);
  }
  if (k >= 2LL * n + 2 && 2 * k <= static_cast<long long>(n - 1) * (n - 1)) {
    return lhs == prev.coeff(k) - prev.coeff(k - 1) + prev.coeff(k - 2 * n + 1) -
                      prev.coeff(k - 2 * n);
  }
  throw std::domain_error(
      "k outside both recurrence ranges: 3 <= k <= 2n+1 or 2n+2 <= k <= (n-1)^2/2");
}

IntPolynomial stanley_difference(int n) {
  if (n < 1) throw std::domain_error("stanley_difference needs n >= 1");
  return gaussian_binomial(n, n) - distinct_odd_poly(n);
}

SymUnimodal is_symmetric_unimodal(const IntPolynomial& p, long long center_times_2) {
  SymUnimodal out{true, true};
  long long deg = p.degree();
  long long hi = std::max(deg, center_times_2);
  for (long long k = 0; k <= hi; ++k) {
    if (p.coeff(k) != p.coeff(center_times_2 - k)) {
      out.symmetric = false;
      break;
    }
  }
  bool falling = false;
  for (long long k = 1; k <= deg; ++k) {
    int cmp = p.coeff(k).compare(p.coeff(k - 1));
    if (cmp > 0 && falling) {
      out.unimodal = false;
      break;
    }
    if (cmp < 0) falling = true;
  }
  return out;
}

Real gap_constant_C() {
  using boost::math::constants::pi;
  return 3 * sqrt(Real(3)) / (sqrt(Real(2)) * pi<Real>() * pi<Real>());
}

Real gap_constant_A() {
  return pow(Real(2), Real(-9) / sqrt(Real(2))) * gap_constant_C();
}

Real square_gap_constant() {
  using boost::math::constants::pi;
  return sqrt(Real(27) / 8) / (pi<Real>() * pi<Real>());
}

namespace {

Real gap_shape(const Real& constant, const Real& s) {
  return constant * pow(Real(2), sqrt(s)) / pow(s, Real(9) / 4);
}

}  // namespace

Real almkvist_gap_bound(long long k) {
  if (k < 1) throw std::domain_error("almkvist_gap_bound needs k >= 1");
  return gap_shape(gap_constant_C(), Real(2 * k));
}

Real square_gap_bound(long long k) {
  if (k < 1) throw std::domain_error("square_gap_bound needs k >= 1");
  return gap_shape(square_gap_constant(), Real(2 * k));
}

Real effective_gap_bound(int l, int m, long long k) {
  if (!(m >= l && l >= 8)) throw std::domain_error("effective_gap_bound needs m >= l >= 8");
  if (k < 2 || 2 * k > static_cast<long long>(l) * m)
    throw std::domain_error("effective_gap_bound needs 2 <= k <= lm/2");
  long long s = std::min<long long>(2 * k, static_cast<long long>(l) * l);
  return gap_shape(gap_constant_A(), Real(s));
}

Real rect_gap_bound(int l, int m, long long k) {
  if (!(m >= l && l >= 8)) throw std::domain_error("rect_gap_bound needs m >= l >= 8");
  if (k < 1 || 2 * k > static_cast<long long>(l) * m)
    throw std::domain_error("rect_gap_bound needs 1 <= k <= lm/2");
  long long side = 2 * ((l - 8) / 2);
  if ((static_cast<long long>(l) * m) % 2 != 0) side -= 1;
  if (side < 1)
    throw std::domain_error("rect_gap_bound: auxiliary square side vanishes for this l");
  long long v = std::min(2 * k, side * side);  // v = min(k, side^2/2), doubled
  return gap_shape(gap_constant_C(), Real(v) / 2);
}

}  // namespace kronbounds
