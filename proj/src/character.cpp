#include "kronbounds/character.hpp"

#include <algorithm>
#include <functional>

namespace kronbounds {

Int dimension(const Partition& lambda) {
  Int hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      hooks *= hook_and_content(lambda, {i, j}).first;
  return exact_div(factorial(lambda.size()), hooks);
}

Int gl_dimension(const Partition& lambda, int m) {
  if (m < 0) throw std::domain_error("gl_dimension needs m >= 0");
  if (lambda.length() > m) return 0;
  Partition conj = conjugate(lambda);
  Int num = 1, hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= m + (j - i);
      hooks *= lambda.part(i) - j + conj.part(j) - i + 1;
    }
  }
  return exact_div(num, hooks);
}

Int class_size(const Partition& alpha) {
  Int z = 1;
  int run = 0;
  for (int i = 1; i <= alpha.length(); ++i) {
    ++run;
    z *= alpha.part(i) * run;  // accumulates j^{m_j} m_j! over each run of equal parts
    if (alpha.part(i + 1) != alpha.part(i)) run = 0;
  }
  return exact_div(factorial(alpha.size()), z);
}

CharacterStore::CharacterStore(std::size_t max_entries) : max_entries_(max_entries) {}

std::size_t CharacterStore::entry_count() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void CharacterStore::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

Int CharacterStore::value(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size())
    throw std::domain_error("character: |shape| != |cycle type|");
  return eval(shape.parts(), cycle_type.parts(), 0);
}

Int CharacterStore::eval(const std::vector<int>& shape, const std::vector<int>& alpha,
                         std::size_t idx) {
  if (idx == alpha.size()) return 1;  // shape is empty here by size bookkeeping

  std::vector<int> key = shape;
  key.push_back(-1);
  key.insert(key.end(), alpha.begin() + idx, alpha.end());
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // First-column hook lengths beta_i = shape_i + (L - i). Removing a border
  // strip of size r corresponds to replacing some beta by beta - r when that
  // value is not already taken; the strip height equals the number of betas
  // strictly between the two values.
  const int r = alpha[idx];
  const int L = static_cast<int>(shape.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = shape[i] + (L - 1 - i);

  Int total = 0;
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool taken = false;
    int crossed = 0;
    for (int j = 0; j < L; ++j) {
      if (beta[j] == target) taken = true;
      if (beta[j] > target && beta[j] < beta[i]) ++crossed;
    }
    if (taken) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> sub;
    sub.reserve(L);
    for (int j = 0; j < L; ++j) {
      int p = nb[j] - (L - 1 - j);
      if (p > 0) sub.push_back(p);
    }
    Int term = eval(sub, alpha, idx + 1);
    if (crossed % 2) total -= term;
    else total += term;
  }

  {
    std::unique_lock lock(mutex_);
    if (memo_.size() < max_entries_) memo_.emplace(std::move(key), total);
  }
  return total;
}

CharacterStore& global_character_store() {
  static CharacterStore store;
  return store;
}

Int character(const Partition& lambda, const Partition& alpha) {
  return global_character_store().value(lambda, alpha);
}

}  // namespace kronbounds
