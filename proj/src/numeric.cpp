#include "kronbounds/numeric.hpp"

namespace kronbounds {

Int factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::logic_error("exact_div by zero");
  Int q = a / b;
  if (q * b != a) throw std::logic_error("exact_div: division is not exact");
  return q;
}

std::string rat_to_string(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int rat_ceil(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;          // truncates toward zero
  if (q * den != num && num > 0) ++q;
  return q;
}

}  // namespace kronbounds
