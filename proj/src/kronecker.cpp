#include "kronbounds/kronecker.hpp"

#include <algorithm>
#include <functional>

namespace kronbounds {

namespace {

void require_equal_sizes(const Partition& a, const Partition& b, const Partition& c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::domain_error("Kronecker coefficient needs partitions of equal size");
}

// Signed shifted margins lambda_i - i + sigma(i) for every permutation sigma
// keeping all components nonnegative. Everything else indexes a vanishing
// contingency count and is pruned during generation.
struct SignedMargin {
  int sign;
  std::vector<long long> margin;
};

void collect_margins(const Partition& lambda, int a, int pos, std::vector<int>& remaining,
                     std::vector<long long>& current, int inversions,
                     std::vector<SignedMargin>& out) {
  if (pos == a) {
    out.push_back({inversions % 2 ? -1 : 1, current});
    return;
  }
  for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
    int value = remaining[idx];
    long long component = lambda.part(pos + 1) - (pos + 1) + value;
    if (component < 0) continue;
    // Parity of the permutation changes by the count of smaller unused values
    // skipped when picking this one; `remaining` is kept sorted ascending.
    int crossed = static_cast<int>(idx);
    remaining.erase(remaining.begin() + idx);
    current.push_back(component);
    collect_margins(lambda, a, pos + 1, remaining, current, inversions + crossed, out);
    current.pop_back();
    remaining.insert(remaining.begin() + idx, value);
  }
}

std::vector<SignedMargin> shifted_margins(const Partition& lambda) {
  int a = lambda.length();
  std::vector<SignedMargin> out;
  if (a == 0) {
    out.push_back({1, {}});
    return out;
  }
  std::vector<int> remaining(a);
  for (int i = 0; i < a; ++i) remaining[i] = i + 1;
  std::vector<long long> current;
  current.reserve(a);
  collect_margins(lambda, a, 0, remaining, current, 0, out);
  return out;
}

// Number of permutations with sigma(i) >= i - lambda_i. The allowed sets are
// nested upward intervals, so the count is a falling product over the sorted
// lower bounds.
long long surviving_count(const Partition& lambda) {
  int a = lambda.length();
  if (a == 0) return 1;
  std::vector<int> lo(a);
  for (int i = 1; i <= a; ++i) lo[i - 1] = std::max(1, i - lambda.part(i));
  std::sort(lo.begin(), lo.end(), std::greater<int>());
  long long count = 1;
  for (int t = 0; t < a; ++t) {
    long long choices = a - lo[t] + 1 - t;
    if (choices <= 0) return 0;
    count *= choices;
    if (count > (1LL << 62) / std::max(1, a)) return 1LL << 62;  // saturate
  }
  return count;
}

}  // namespace

Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
              CharacterStore* store) {
  require_equal_sizes(lambda, mu, nu);
  long long n = lambda.size();
  if (n == 0) return 1;
  CharacterStore& cs = store ? *store : global_character_store();
  Int total = 0;
  for (const Partition& alpha : enumerate_partitions(n)) {
    Int cl = cs.value(lambda, alpha);
    if (cl == 0) continue;
    Int cm = cs.value(mu, alpha);
    if (cm == 0) continue;
    Int cn = cs.value(nu, alpha);
    if (cn == 0) continue;
    total += class_size(alpha) * cl * cm * cn;
  }
  Int g = exact_div(total, factorial(n));
  if (g < 0) throw std::logic_error("negative Kronecker coefficient computed");
  return g;
}

Int kronecker_alternating(const Partition& lambda, const Partition& mu,
                          const Partition& nu, long long budget) {
  require_equal_sizes(lambda, mu, nu);
  if (lambda.size() == 0) return 1;

  Int terms = Int(surviving_count(lambda)) * surviving_count(mu) * surviving_count(nu);
  if (terms > budget) {
    Int naive = factorial(lambda.length()) * factorial(mu.length()) *
                factorial(nu.length());
    throw ResourceError("alternating sum over budget: " + terms.str() +
                        " surviving permutation triples (naive a!b!c! = " +
                        naive.str() + ")");
  }

  auto ta = shifted_margins(lambda);
  auto tb = shifted_margins(mu);
  auto tc = shifted_margins(nu);
  Int total = 0;
  for (const auto& x : ta)
    for (const auto& y : tb)
      for (const auto& z : tc) {
        Int ca = count_contingency({x.margin, y.margin, z.margin, false}, budget);
        if (ca == 0) continue;
        int sign = x.sign * y.sign * z.sign;
        if (sign > 0) total += ca;
        else total -= ca;
      }
  return total;
}

bool symmetry_check(const Partition& lambda, const Partition& mu, const Partition& nu,
                    CharacterStore* store) {
  require_equal_sizes(lambda, mu, nu);
  Int base = kronecker(lambda, mu, nu, store);
  const Partition* p[3] = {&lambda, &mu, &nu};
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& q : perms)
    if (kronecker(*p[q[0]], *p[q[1]], *p[q[2]], store) != base) return false;
  Partition lc = conjugate(lambda), mc = conjugate(mu), nc = conjugate(nu);
  return kronecker(lc, mc, nu, store) == base && kronecker(lc, mu, nc, store) == base &&
         kronecker(lambda, mc, nc, store) == base;
}

}  // namespace kronbounds
