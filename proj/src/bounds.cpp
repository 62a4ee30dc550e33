#include "kronbounds/bounds.hpp"

#include "kronbounds/kronecker.hpp"
#include "kronbounds/stability.hpp"

#include <algorithm>
#include <functional>

namespace kronbounds {

namespace {

void require_equal_sizes(const Partition& a, const Partition& b, const Partition& c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::domain_error("bound needs partitions of equal size");
}

}  // namespace

Rat upper_dimension(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_equal_sizes(lambda, mu, nu);
  return Rat(dimension(lambda) * dimension(mu), dimension(nu));
}

Int upper_min(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_equal_sizes(lambda, mu, nu);
  return std::min({dimension(lambda), dimension(mu), dimension(nu)});
}

Rat upper_schur(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_equal_sizes(lambda, mu, nu);
  if (lambda.size() == 0) return 1;
  int a = lambda.length(), b = mu.length();
  Int dn = gl_dimension(nu, a * b);
  Int dl = gl_dimension(lambda, a);
  Int dm = gl_dimension(mu, b);
  return Rat(dn, dl * dm);
}

Int upper_binomial_product(const Partition& lambda, const Partition& mu,
                           const Partition& nu) {
  require_equal_sizes(lambda, mu, nu);
  long long ab = static_cast<long long>(lambda.length()) * mu.length();
  Int prod = 1;
  for (int i = 1; i <= nu.length(); ++i) prod *= binomial(nu.part(i) - i + ab, nu.part(i));
  return prod;
}

std::pair<Int, Int> upper_contingency(const Partition& lambda, const Partition& mu,
                                      const Partition& nu, long long budget) {
  require_equal_sizes(lambda, mu, nu);
  auto to_margin = [](const Partition& p) {
    return std::vector<long long>(p.parts().begin(), p.parts().end());
  };
  Int plain = count_contingency({to_margin(lambda), to_margin(mu), to_margin(nu), false},
                                budget);
  Int binary = count_contingency(
      {to_margin(conjugate(lambda)), to_margin(mu), to_margin(nu), true}, budget);
  return {plain, binary};
}

Int lower_character(const Partition& lambda, const Partition& mu, CharacterStore* store) {
  if (!is_self_conjugate(mu))
    throw std::domain_error("character lower bound needs a self-conjugate partition");
  if (lambda.size() != mu.size())
    throw std::domain_error("character lower bound needs equal sizes");
  CharacterStore& cs = store ? *store : global_character_store();
  Int chi = cs.value(lambda, principal_hooks(mu));
  return chi < 0 ? Int(-chi) : chi;
}

std::optional<bool> check_manivel(const Partition& lambda, const Partition& mu,
                                  const Partition& nu, const Partition& alpha,
                                  const Partition& beta, const Partition& gamma,
                                  CharacterStore* store) {
  require_equal_sizes(lambda, mu, nu);
  require_equal_sizes(alpha, beta, gamma);
  Int g1 = kronecker(lambda, mu, nu, store);
  Int g2 = kronecker(alpha, beta, gamma, store);
  if (g1 <= 0 || g2 <= 0) return std::nullopt;
  Int sum = kronecker(add(lambda, alpha), add(mu, beta), add(nu, gamma), store);
  return sum >= std::max(g1, g2);
}

namespace {

// Skew semistandard fillings of alpha/beta with content gamma whose reverse
// reading word is a lattice word. Cells are filled right to left along each
// row so the running content check is incremental.
class LatticeFillCounter {
 public:
  LatticeFillCounter(const Partition& alpha, const Partition& beta, const Partition& gamma)
      : alpha_(alpha), beta_(beta), gamma_(gamma) {}

  Int count() {
    for (int i = 1; i <= beta_.length(); ++i)
      if (beta_.part(i) > alpha_.part(i)) return 0;  // beta not inside alpha
    rows_ = alpha_.length();
    values_ = gamma_.length();
    counts_.assign(values_ + 1, 0);
    fill_.assign(rows_ + 2, std::vector<int>(alpha_.part(1) + 2, 0));
    Int total = 0;
    walk(1, alpha_.part(1), total);
    return total;
  }

 private:
  void walk(int row, int col, Int& total) {
    if (row > rows_) {
      total += 1;
      return;
    }
    if (col <= beta_.part(row)) {
      walk(row + 1, alpha_.part(row + 1), total);
      return;
    }
    for (int v = 1; v <= values_; ++v) {
      if (counts_[v] >= gamma_.part(v)) continue;
      if (v > 1 && counts_[v] >= counts_[v - 1]) continue;  // lattice condition
      int right = fill_[row][col + 1];
      if (right != 0 && v > right) continue;  // rows weakly increase
      int above = fill_[row - 1][col];
      if (row > 1 && col > beta_.part(row - 1) && col <= alpha_.part(row - 1) &&
          v <= above)
        continue;  // columns strictly increase
      fill_[row][col] = v;
      ++counts_[v];
      walk(row, col - 1, total);
      --counts_[v];
      fill_[row][col] = 0;
    }
  }

  Partition alpha_, beta_, gamma_;
  int rows_ = 0, values_ = 0;
  std::vector<int> counts_;
  std::vector<std::vector<int>> fill_;
};

}  // namespace

Int lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (beta.size() + gamma.size() != alpha.size()) return 0;
  if (alpha.empty()) return 1;
  return LatticeFillCounter(alpha, beta, gamma).count();
}

Rat lr_upper_bound(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (beta.size() + gamma.size() != alpha.size())
    throw std::domain_error("lr_upper_bound needs |beta| + |gamma| = |alpha|");
  return Rat(dimension(alpha), dimension(beta) * dimension(gamma));
}

BoundReport full_report(const Partition& lambda, const Partition& mu, const Partition& nu,
                        long long budget, CharacterStore* store) {
  require_equal_sizes(lambda, mu, nu);
  BoundReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.nu = nu;

  long long n = lambda.size();
  Int class_count = count_partitions(n);
  if (class_count * n * n <= budget) rep.true_g = kronecker(lambda, mu, nu, store);

  auto push = [&](std::string name, BoundEntry::Direction dir, bool applicable,
                  Rat value) {
    BoundEntry e;
    e.name = std::move(name);
    e.direction = dir;
    e.applicable = applicable;
    e.value = std::move(value);
    if (applicable && rep.true_g) {
      Rat g(*rep.true_g);
      e.satisfied = dir == BoundEntry::Direction::Upper ? e.value >= g : e.value <= g;
    }
    rep.entries.push_back(std::move(e));
  };
  using D = BoundEntry::Direction;

  push("dimension_ratio", D::Upper, true, upper_dimension(lambda, mu, nu));
  push("min_dimension", D::Upper, true, Rat(upper_min(lambda, mu, nu)));
  push("schur_ratio", D::Upper, true, upper_schur(lambda, mu, nu));
  push("binomial_product", D::Upper, true, Rat(upper_binomial_product(lambda, mu, nu)));
  try {
    auto [plain, binary] = upper_contingency(lambda, mu, nu, budget);
    push("contingency", D::Upper, true, Rat(plain));
    push("contingency_binary", D::Upper, true, Rat(binary));
  } catch (const ResourceError&) {
    push("contingency", D::Upper, false, Rat(0));
    push("contingency_binary", D::Upper, false, Rat(0));
  }

  bool char_ok = mu == nu && is_self_conjugate(mu);
  push("character_lower", D::Lower, char_ok,
       char_ok ? Rat(lower_character(lambda, mu, store)) : Rat(0));

  // Fixed-tail caps with the natural parameters of this triple.
  if (n > 0) {
    Partition tail(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
    long long s = tail.size();
    long long ell = std::max(lambda.length(), mu.length());
    long long h = std::max(durfee(lambda), durfee(mu));
    for (auto [name, mode, param] :
         {std::tuple{"tail_length", TailMode::Length, ell},
          std::tuple{"tail_durfee", TailMode::Durfee, h}}) {
      long long u = tail_bound_u(tail, param, mode);
      bool applicable = n >= u;
      Rat value(0);
      if (applicable) {
        std::vector<int> cap;
        if (u - s > 0) cap.push_back(static_cast<int>(u - s));
        for (int x : tail.parts()) cap.push_back(x);
        value = Rat(dimension(Partition(cap)));
      }
      push(name, D::Upper, applicable, value);
    }
  }
  return rep;
}

}  // namespace kronbounds
