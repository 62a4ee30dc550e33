#include "doctest.h"

#include "kronbounds/character.hpp"
#include "kronbounds/partition.hpp"

#include <map>
#include <vector>

using namespace kronbounds;

namespace {

// Standard Young tableaux counted by direct placement, independent of the
// hook length formula.
long long count_syt(const Partition& shape) {
  std::vector<int> row_fill(shape.length(), 0);
  long long total = 0;
  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == shape.size()) {
      ++total;
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (row_fill[r] == shape.part(r + 1)) continue;
      if (r > 0 && row_fill[r - 1] <= row_fill[r]) continue;
      ++row_fill[r];
      self(self, placed + 1);
      --row_fill[r];
    }
  };
  rec(rec, 0);
  return total;
}

// Semistandard tableaux with entries <= m, by cell-wise backtracking.
long long count_ssyt(const Partition& shape, int m) {
  std::vector<std::vector<int>> fill(shape.length());
  for (int r = 0; r < shape.length(); ++r) fill[r].assign(shape.part(r + 1), 0);
  long long total = 0;
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.length()) {
      ++total;
      return;
    }
    if (c == shape.part(r + 1)) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      fill[r][c] = v;
      self(self, r, c + 1);
    }
    fill[r][c] = 0;
  };
  rec(rec, 0, 0);
  return total;
}

// chi^{(n-k,k)}[alpha] equals the difference of cycle-subset counts, a
// Jacobi-Trudi consequence that never touches border strips.
Int two_row_oracle(long long n, long long k, const Partition& alpha) {
  std::map<int, int> mult;
  for (int i = 1; i <= alpha.length(); ++i) ++mult[alpha.part(i)];
  std::vector<Int> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (auto [part, m] : mult) {
    std::vector<Int> next(ways.size());
    for (int c = 0; c <= m; ++c) {
      Int coeff = binomial(m, c);
      for (std::size_t j = 0; j + static_cast<std::size_t>(c) * part < ways.size(); ++j)
        next[j + c * part] += coeff * ways[j];
    }
    ways = std::move(next);
  }
  auto at = [&](long long j) { return j < 0 ? Int(0) : ways[static_cast<std::size_t>(j)]; };
  return at(k) - at(k - 1);
}

}  // namespace

TEST_SUITE("character") {

TEST_CASE("dimensions by hook lengths") {
  CHECK(dimension(Partition{}) == 1);
  CHECK(dimension(Partition{7}) == 1);
  CHECK(dimension(Partition{2, 2}) == 2);
  CHECK(dimension(Partition{3, 1}) == 3);
  CHECK(dimension(Partition{5, 1}) == 5);

  // Independent standard-tableaux oracle.
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n))
      CHECK(dimension(p) == count_syt(p));

  // Two-row dimensions are binomial differences.
  for (int n = 2; n <= 10; ++n)
    for (long long k = 0; 2 * k <= n; ++k) {
      Partition tau = k == 0 ? Partition{n} : Partition{static_cast<int>(n - k),
                                                        static_cast<int>(k)};
      CHECK(dimension(tau) == binomial(n, k) - binomial(n, k - 1));
    }

  for (int n = 0; n <= 10; ++n) {
    Int sq = 0;
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(dimension(p) == dimension(conjugate(p)));
      sq += dimension(p) * dimension(p);
    }
    CHECK(sq == factorial(n));
  }
}

TEST_CASE("general linear dimensions") {
  CHECK(gl_dimension(Partition{1}, 5) == 5);
  CHECK(gl_dimension(Partition{2, 2}, 4) == 20);
  CHECK(gl_dimension(Partition{1, 1, 1}, 2) == 0);  // more rows than m
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= 4; ++k)
      CHECK(gl_dimension(Partition(std::vector<int>(m, k)), m) == 1);

  // Independent semistandard-tableaux oracle.
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n))
      for (int m = 1; m <= 4; ++m)
        CHECK(gl_dimension(p, m) == count_ssyt(p, m));
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition{1, 1, 1}) == 1);
  CHECK(class_size(Partition{5}) == 24);
  CHECK(class_size(Partition{2, 1}) == 3);
  for (int n = 1; n <= 9; ++n) {
    Int total = 0;
    for (const auto& a : enumerate_partitions(n)) total += class_size(a);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("small character tables") {
  // S_3, classes (1,1,1), (2,1), (3).
  const Partition c111{1, 1, 1}, c21{2, 1}, c3{3};
  CHECK(character(Partition{3}, c111) == 1);
  CHECK(character(Partition{3}, c21) == 1);
  CHECK(character(Partition{3}, c3) == 1);
  CHECK(character(Partition{2, 1}, c111) == 2);
  CHECK(character(Partition{2, 1}, c21) == 0);
  CHECK(character(Partition{2, 1}, c3) == -1);
  CHECK(character(Partition{1, 1, 1}, c111) == 1);
  CHECK(character(Partition{1, 1, 1}, c21) == -1);
  CHECK(character(Partition{1, 1, 1}, c3) == 1);

  // S_4 rows in class order (1^4), (2,1,1), (2,2), (3,1), (4).
  const std::vector<Partition> classes4 = {
      {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const std::vector<std::pair<Partition, std::vector<int>>> table4 = {
      {Partition{4}, {1, 1, 1, 1, 1}},
      {Partition{3, 1}, {3, 1, -1, 0, -1}},
      {Partition{2, 2}, {2, 0, 2, -1, 0}},
      {Partition{2, 1, 1}, {3, -1, -1, 0, 1}},
      {Partition{1, 1, 1, 1}, {1, -1, 1, 1, -1}},
  };
  for (const auto& [shape, row] : table4)
    for (std::size_t c = 0; c < classes4.size(); ++c)
      CHECK(character(shape, classes4[c]) == row[c]);

  // S_5 rows in class order (1^5), (2,1^3), (2,2,1), (3,1,1), (3,2), (4,1), (5).
  const std::vector<Partition> classes5 = {{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1},
                                           {3, 1, 1},       {3, 2},      {4, 1},
                                           {5}};
  const std::vector<std::pair<Partition, std::vector<int>>> table5 = {
      {Partition{5}, {1, 1, 1, 1, 1, 1, 1}},
      {Partition{4, 1}, {4, 2, 0, 1, -1, 0, -1}},
      {Partition{3, 2}, {5, 1, 1, -1, 1, -1, 0}},
      {Partition{3, 1, 1}, {6, 0, -2, 0, 0, 0, 1}},
      {Partition{2, 2, 1}, {5, -1, 1, -1, -1, 1, 0}},
      {Partition{2, 1, 1, 1}, {4, -2, 0, 1, 1, 0, -1}},
      {Partition{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1, -1, 1}},
  };
  for (const auto& [shape, row] : table5)
    for (std::size_t c = 0; c < classes5.size(); ++c)
      CHECK(character(shape, classes5[c]) == row[c]);

  CHECK_THROWS_AS(character(Partition{2, 1}, Partition{4}), std::domain_error);
}

TEST_CASE("trivial and sign rows") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : enumerate_partitions(n)) {
      CHECK(character(Partition{n}, a) == 1);
      int sign = (n - a.length()) % 2 ? -1 : 1;
      CHECK(character(Partition(std::vector<int>(n, 1)), a) == sign);
    }
}

TEST_CASE("orthogonality and related identities") {
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_partitions(n);
    std::vector<Int> sizes;
    for (const auto& a : parts) sizes.push_back(class_size(a));

    for (const auto& l : parts) {
      for (const auto& m : parts) {
        Int dot = 0;
        for (std::size_t c = 0; c < parts.size(); ++c)
          dot += sizes[c] * character(l, parts[c]) * character(m, parts[c]);
        CHECK(dot == (l == m ? factorial(n) : Int(0)));
      }
      CHECK(character(l, Partition(std::vector<int>(n, 1))) == dimension(l));
    }

    // Conjugate shape twists by the sign of the class.
    for (const auto& l : parts)
      for (const auto& a : parts) {
        int sign = (n - a.length()) % 2 ? -1 : 1;
        CHECK(character(conjugate(l), a) == sign * character(l, a));
      }

    // Column sums vanish away from the identity class.
    for (const auto& a : parts) {
      if (a == parts.back()) continue;  // (1^n) is last in reverse lex order
      Int col = 0;
      for (const auto& l : parts) col += dimension(l) * character(l, a);
      CHECK(col == 0);
    }
  }
}

TEST_CASE("two-row characters against the subset-splitting oracle") {
  for (int n = 2; n <= 10; ++n)
    for (long long k = 1; 2 * k <= n; ++k) {
      Partition tau{static_cast<int>(n - k), static_cast<int>(k)};
      for (const auto& a : enumerate_partitions(n))
        CHECK(character(tau, a) == two_row_oracle(n, k, a));
    }
}

TEST_CASE("staircase principal-hook classes") {
  // chi^{(n-k,k)} at the principal hooks of the staircase counts restricted
  // partitions of k with parts from the hook set, minus those of k-1.
  Partition rho = staircase(4);
  Partition hooks = principal_hooks(rho);
  REQUIRE(hooks == Partition{7, 3});
  for (long long k = 1; 2 * k <= 10; ++k) {
    Partition tau{static_cast<int>(10 - k), static_cast<int>(k)};
    CHECK(character(tau, hooks) == two_row_oracle(10, k, hooks));
  }
}

TEST_CASE("store transparency and limits") {
  CharacterStore fresh_a, fresh_b;
  Partition shape{4, 3, 1}, cls{3, 3, 2};
  Int v1 = fresh_a.value(shape, cls);
  Int v2 = fresh_a.value(shape, cls);   // cached path
  Int v3 = fresh_b.value(shape, cls);   // recomputed from scratch
  CHECK(v1 == v2);
  CHECK(v1 == v3);
  CHECK(fresh_a.entry_count() > 0);
  fresh_a.clear();
  CHECK(fresh_a.entry_count() == 0);

  CharacterStore tiny(2);  // values stay correct even when nothing fits
  for (const auto& a : enumerate_partitions(6))
    CHECK(tiny.value(Partition{3, 2, 1}, a) == fresh_b.value(Partition{3, 2, 1}, a));
  CHECK(tiny.entry_count() <= 2);
}

}  // TEST_SUITE
