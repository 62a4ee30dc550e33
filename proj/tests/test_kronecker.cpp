#include "doctest.h"

#include "kronbounds/kronecker.hpp"
#include "kronbounds/partition.hpp"

#include <random>
#include <vector>

using namespace kronbounds;

namespace {

// Plain depth-first contingency count for tiny specs: residual margins cap
// each entry and every array is visited once. No memoization and no
// canonicalization, which is exactly what it cross-checks.
Int brute_contingency(std::vector<long long> a, std::vector<long long> b,
                      std::vector<long long> c, bool binary) {
  std::size_t cells = a.size() * b.size() * c.size();
  long long total_a = 0, total_b = 0, total_c = 0;
  for (long long x : a) total_a += x;
  for (long long x : b) total_b += x;
  for (long long x : c) total_c += x;
  if (total_a != total_b || total_a != total_c) return 0;
  if (cells == 0) return total_a == 0 ? 1 : 0;
  Int count = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == cells) {
      for (long long x : a)
        if (x != 0) return;
      for (long long x : b)
        if (x != 0) return;
      for (long long x : c)
        if (x != 0) return;
      ++count;
      return;
    }
    std::size_t k = pos % c.size();
    std::size_t j = (pos / c.size()) % b.size();
    std::size_t i = pos / (b.size() * c.size());
    long long cap = std::min({a[i], b[j], c[k], binary ? 1LL : total_a});
    for (long long v = 0; v <= cap; ++v) {
      a[i] -= v;
      b[j] -= v;
      c[k] -= v;
      self(self, pos + 1);
      a[i] += v;
      b[j] += v;
      c[k] += v;
    }
  };
  rec(rec, 0);
  return count;
}

Partition ones(int k) { return Partition(std::vector<int>(k, 1)); }

}  // namespace

TEST_SUITE("kronecker") {

TEST_CASE("worked coefficients") {
  CHECK(kronecker(Partition{2, 2}, Partition{2, 2}, Partition{3, 1}) == 0);
  CHECK(kronecker(Partition{3, 2}, Partition{3, 2}, Partition{4, 1}) == 1);
  for (int t = 1; t <= 4; ++t)
    CHECK(kronecker(Partition{2 + t, 2}, Partition{2 + t, 2}, Partition{3 + t, 1}) == 1);
  for (int k = 1; k <= 8; ++k) CHECK(kronecker(ones(k), ones(k), Partition{k}) == 1);
  for (int m = 1; m <= 5; ++m)
    CHECK(kronecker(Partition{m, m}, Partition{m, m}, Partition{m, m}) ==
          (m % 2 == 0 ? 1 : 0));
  CHECK(kronecker(Partition{}, Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(kronecker(Partition{2, 2}, Partition{2, 2}, Partition{3}),
                  std::domain_error);
}

TEST_CASE("tensor product dimensions add up") {
  // sum over nu of g(lambda, mu, nu) * f^nu recovers f^lambda * f^mu.
  for (int n = 1; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& l : parts)
      for (const auto& m : parts) {
        Int total = 0;
        for (const auto& nu : parts) total += kronecker(l, m, nu) * dimension(nu);
        CHECK(total == dimension(l) * dimension(m));
      }
  }
}

TEST_CASE("tensor square with the top row picks out equality") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& l : parts)
      for (const auto& m : parts)
        CHECK(kronecker(l, m, Partition{n}) == (l == m ? 1 : 0));
  }
}

TEST_CASE("contingency counts") {
  CHECK(count_contingency({{2}, {2}, {2}, false}) == 1);
  CHECK(count_contingency({{1, 1}, {1, 1}, {2}, false}) == 2);
  CHECK(count_contingency({{1}, {1}, {1}, true}) == 1);
  CHECK(count_contingency({{2}, {1}, {1}, false}) == 0);   // total mismatch
  CHECK(count_contingency({{-1, 3}, {2}, {2}, false}) == 0);
  CHECK(count_contingency({{}, {}, {}, false}) == 1);
  CHECK(count_contingency({{0, 2}, {2, 0}, {2}, false}) == 1);  // zeros drop out

  // Brute-force oracle over sparse random specs, plain and binary. Margins
  // come from scattering a few unit increments so the enumeration stays tiny.
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<int> dim(1, 3), mass(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    int A = dim(rng), B = dim(rng), C = dim(rng);
    std::vector<long long> a(A), b(B), c(C);
    int drops = mass(rng);
    for (int d = 0; d < drops; ++d) {
      ++a[std::uniform_int_distribution<int>(0, A - 1)(rng)];
      ++b[std::uniform_int_distribution<int>(0, B - 1)(rng)];
      ++c[std::uniform_int_distribution<int>(0, C - 1)(rng)];
    }
    for (bool binary : {false, true}) {
      Int fast = count_contingency({a, b, c, binary});
      Int slow = brute_contingency(a, b, c, binary);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("binary restriction never exceeds the plain count") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          auto margin = [](const Partition& p) {
            return std::vector<long long>(p.parts().begin(), p.parts().end());
          };
          ContingencySpec plain{margin(a), margin(b), margin(c), false};
          ContingencySpec binary{margin(a), margin(b), margin(c), true};
          CHECK(count_contingency(binary) <= count_contingency(plain));
        }
  }
}

TEST_CASE("alternating formula matches the character sum") {
  CHECK(kronecker_alternating(Partition{2}, Partition{2}, Partition{2}) == 1);
  CHECK(kronecker_alternating(Partition{2, 2}, Partition{2, 2}, Partition{3, 1}) == 0);
  CHECK(kronecker_alternating(Partition{}, Partition{}, Partition{}) == 1);

  for (int n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts)
          CHECK(kronecker_alternating(a, b, c) == kronecker(a, b, c));
  }

  // Random larger instances with few rows keep the permutation sum small.
  std::mt19937 rng(777u);
  for (int n : {8, 9}) {
    auto parts = enumerate_partitions(n, 3);  // at most three rows
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = parts[pick(rng)];
      const auto& b = parts[pick(rng)];
      const auto& c = parts[pick(rng)];
      CHECK(kronecker_alternating(a, b, c) == kronecker(a, b, c));
    }
  }
}

TEST_CASE("alternating resource guard") {
  CHECK_THROWS_AS(kronecker_alternating(ones(7), ones(7), ones(7), 1000),
                  ResourceError);
  try {
    kronecker_alternating(ones(7), ones(7), ones(7), 1000);
  } catch (const ResourceError& e) {
    std::string msg = e.what();
    CHECK(msg.find("262144") != std::string::npos);  // 64^3 surviving triples
    CHECK(msg.find("a!b!c!") != std::string::npos);
  }
}

TEST_CASE("identity permutation term dominates") {
  // The unshifted contingency count is itself an upper bound.
  for (int n = 1; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          auto margin = [](const Partition& p) {
            return std::vector<long long>(p.parts().begin(), p.parts().end());
          };
          Int ca = count_contingency({margin(a), margin(b), margin(c), false});
          CHECK(ca >= kronecker(a, b, c));
        }
  }
}

TEST_CASE("symmetry check") {
  CHECK(symmetry_check(Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}));
  CHECK(symmetry_check(Partition{5}, Partition{5}, Partition{5}));
  CHECK(symmetry_check(Partition{4}, Partition{2, 2}, Partition{4}));
  for (int n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i; j < parts.size(); ++j)
        for (std::size_t k = j; k < parts.size(); ++k)
          CHECK(symmetry_check(parts[i], parts[j], parts[k]));
  }
}

}  // TEST_SUITE
