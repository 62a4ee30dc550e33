#include "kronbounds/contingency.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace kronbounds {

namespace {

// Counts with margins canonicalized to weakly decreasing positive vectors,
// axes ordered so the slice axis is the longest margin.
class ArrayCounter {
 public:
  ArrayCounter(std::vector<int> a, std::vector<int> b, std::vector<int> c, bool binary)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), binary_(binary) {}

  Int count() {
    if (a_.empty()) return 1;  // zero total with no cells
    rb_ = b_;
    rg_ = c_;
    return rec(0, 0, 0, a_[0]);
  }

 private:
  Int rec(int i, int j, int k, int rai) {
    const int A = static_cast<int>(a_.size());
    const int B = static_cast<int>(b_.size());
    const int C = static_cast<int>(c_.size());
    if (rai == 0) {
      // Slice satisfied; the rest of it is forced to zero.
      if (i + 1 == A) return 1;  // margins totals match, so rb/rg are zero too
      return rec(i + 1, 0, 0, a_[i + 1]);
    }
    if (j == B) return 0;  // slice exhausted with mass left over
    if (k == C) return rec(i, j + 1, 0, rai);

    // Feasibility: the remaining rows of this slice must be able to absorb rai.
    long long row_cap = 0;
    for (int jj = j; jj < B && row_cap < rai; ++jj) row_cap += rb_[jj];
    if (row_cap < rai) return 0;

    std::vector<int> key;
    key.reserve(4 + B + C);
    key.push_back(i);
    key.push_back(j);
    key.push_back(k);
    key.push_back(rai);
    key.insert(key.end(), rb_.begin(), rb_.end());
    key.insert(key.end(), rg_.begin(), rg_.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int cap = std::min(rai, std::min(rb_[j], rg_[k]));
    if (binary_) cap = std::min(cap, 1);
    Int total = 0;
    for (int e = 0; e <= cap; ++e) {
      rb_[j] -= e;
      rg_[k] -= e;
      total += rec(i, j, k + 1, rai - e);
      rb_[j] += e;
      rg_[k] += e;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> a_, b_, c_;
  bool binary_;
  std::vector<int> rb_, rg_;
  std::unordered_map<std::vector<int>, Int, IntVecHash> memo_;
};

// Drops zeros and sorts decreasing; returns false if a negative entry exists.
bool canonical_margin(const std::vector<long long>& in, std::vector<int>& out) {
  out.clear();
  for (long long v : in) {
    if (v < 0) return false;
    if (v > 0) out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return true;
}

std::shared_mutex cache_mutex;
std::unordered_map<std::string, Int> cache;

std::string cache_key(const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<int>& c, bool binary) {
  std::string key(binary ? "b" : "g");
  for (const auto* v : {&a, &b, &c}) {
    for (int x : *v) {
      key += std::to_string(x);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

Int count_contingency(const ContingencySpec& spec, long long budget) {
  std::vector<int> a, b, c;
  if (!canonical_margin(spec.alpha, a) || !canonical_margin(spec.beta, b) ||
      !canonical_margin(spec.gamma, c))
    return 0;

  auto total = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
  };
  long long n = total(a);
  if (n != total(b) || n != total(c)) return 0;
  if (n == 0) return 1;

  // Canonical order: the three margins are interchangeable (axis transposes).
  std::vector<std::vector<int>> m{a, b, c};
  std::sort(m.begin(), m.end());
  // Longest margin becomes the slice axis; that keeps the residual state small.
  std::stable_sort(m.begin(), m.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });

  long long cells = static_cast<long long>(m[0].size()) * m[1].size() * m[2].size();
  if (cells * (n + 1) > budget)
    throw ResourceError("contingency count over budget: " + std::to_string(cells) +
                        " cells with total " + std::to_string(n));

  std::string key = cache_key(m[0], m[1], m[2], spec.binary);
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int result = ArrayCounter(m[0], m[1], m[2], spec.binary).count();
  {
    std::unique_lock lock(cache_mutex);
    cache.emplace(std::move(key), result);
  }
  return result;
}

}  // namespace kronbounds
