#include "doctest.h"

#include "kronbounds/kronecker.hpp"
#include "kronbounds/partition.hpp"
#include "kronbounds/stability.hpp"

using namespace kronbounds;

TEST_SUITE("stability") {

TEST_CASE("reduction worked examples") {
  // Immediate zero certificate: s = 0 and the first rows differ.
  ReductionOutcome z = reduce(Partition{4}, Partition{2, 2}, Partition{4});
  REQUIRE(z.kind == ReductionKind::ZeroCertificate);
  CHECK(z.witness_index == 1);
  CHECK(z.s == 0);
  CHECK(kronecker(Partition{4}, Partition{2, 2}, Partition{4}) == 0);

  ReductionOutcome r = reduce(Partition{3, 1}, Partition{3, 1}, Partition{3, 1}, 2);
  REQUIRE(r.kind == ReductionKind::Reduced);
  CHECK(r.s == 1);
  CHECK(r.index_set == std::vector<int>{1, 2});
  CHECK(r.phi_lambda == Partition{2, 1});
  CHECK(r.phi_mu == Partition{2, 1});
  CHECK(r.phi_nu == Partition{2, 1});
  CHECK(r.r == 3);
  CHECK(r.map_total);
  CHECK(kronecker(Partition{3, 1}, Partition{3, 1}, Partition{3, 1}) ==
        kronecker(r.phi_lambda, r.phi_mu, r.phi_nu));

  // A one-row third partition collapses equal tensor squares to nothing.
  ReductionOutcome e = reduce(Partition{3, 1}, Partition{3, 1}, Partition{4});
  REQUIRE(e.kind == ReductionKind::Reduced);
  CHECK(e.r == 0);
  CHECK(e.phi_nu.empty());

  CHECK_THROWS_AS(reduce(Partition{2, 1}, Partition{3}, Partition{2, 1}, 1),
                  std::domain_error);  // length bound below the lengths
}

TEST_CASE("reduction soundness, exhaustively") {
  for (int n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          ReductionOutcome out = reduce(a, b, c);
          Int g = kronecker(a, b, c);
          if (out.kind == ReductionKind::ZeroCertificate) {
            CHECK(g == 0);
            CHECK(std::abs(static_cast<long long>(a.part(out.witness_index)) -
                           b.part(out.witness_index)) > out.s);
            continue;
          }
          int ell = std::max({a.length(), b.length(), c.length()});
          CHECK(out.r <= 2 * out.s * ell * ell);
          CHECK(out.phi_lambda.size() == out.r);
          CHECK(out.phi_mu.size() == out.r);
          CHECK(out.phi_nu.size() == out.r);
          CHECK(kronecker(out.phi_lambda, out.phi_mu, out.phi_nu) == g);
        }
  }
}

TEST_CASE("reduction does not depend on the length bound") {
  for (int n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          ReductionOutcome base = reduce(a, b, c);
          for (int extra = 1; extra <= 2; ++extra) {
            int ell = std::max({a.length(), b.length(), c.length()}) + extra;
            ReductionOutcome padded = reduce(a, b, c, ell);
            CHECK(base.kind == padded.kind);
            if (padded.kind == ReductionKind::Reduced) {
              CHECK(padded.r <= 2 * padded.s * ell * ell);
              CHECK(kronecker(padded.phi_lambda, padded.phi_mu, padded.phi_nu) ==
                    kronecker(a, b, c));
            }
          }
        }
  }
}

TEST_CASE("reducing a reduced triple keeps the coefficient") {
  for (int n = 0; n <= 4; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          ReductionOutcome once = reduce(a, b, c);
          if (once.kind != ReductionKind::Reduced) continue;
          ReductionOutcome twice = reduce(once.phi_lambda, once.phi_mu, once.phi_nu);
          Int g = kronecker(a, b, c);
          if (twice.kind == ReductionKind::ZeroCertificate) CHECK(g == 0);
          else CHECK(kronecker(twice.phi_lambda, twice.phi_mu, twice.phi_nu) == g);
        }
  }
}

TEST_CASE("stability criterion") {
  CHECK_FALSE(kstab_condition(Partition{2, 2}, Partition{2, 2}, Partition{3, 1}, 1));
  for (int k = 1; k <= 5; ++k) {
    Partition col(std::vector<int>(k, 1));
    CHECK(kstab_condition(col, col, Partition{k}, k));
  }
  CHECK(kstab_condition(Partition{5, 1}, Partition{5, 1}, Partition{5, 1}, 1));
  // The triple is sorted internally, so argument order is immaterial.
  CHECK(kstab_condition(Partition{5, 1}, Partition{1, 1, 1, 1, 1, 1}, Partition{4, 2},
                        1) ==
        kstab_condition(Partition{4, 2}, Partition{5, 1}, Partition{1, 1, 1, 1, 1, 1},
                        1));
}

TEST_CASE("stability sequences") {
  StabilitySequence s1 =
      stability_sequence(Partition{2, 2}, Partition{2, 2}, Partition{3, 1}, 1, 4);
  CHECK(s1.onset == 1);
  CHECK(s1.stabilized);
  REQUIRE(s1.values.size() == 5);
  CHECK(s1.values[0] == 0);
  for (int t = 1; t <= 4; ++t) CHECK(s1.values[t] == 1);
  CHECK(s1.stable_value == 1);

  StabilitySequence s2 = stability_sequence(Partition{}, Partition{}, Partition{}, 1, 3);
  CHECK(s2.onset == 0);
  for (const Int& v : s2.values) CHECK(v == 1);

  StabilitySequence s3 =
      stability_sequence(Partition{3, 1}, Partition{3, 1}, Partition{3, 1}, 1, 3);
  CHECK(s3.onset == 0);
  for (const Int& v : s3.values) CHECK(v == s3.values[0]);

  StabilitySequence s4 =
      stability_sequence(Partition{2, 2}, Partition{2, 2}, Partition{3, 1}, 1, 0);
  CHECK_FALSE(s4.stabilized);  // onset is 1, sequence stops at t = 0
}

TEST_CASE("criterion implies a constant sequence") {
  for (int n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts)
          for (int k = 1; k <= 3; ++k) {
            if (!kstab_condition(a, b, c, k)) continue;
            StabilitySequence seq = stability_sequence(a, b, c, k, 3);
            CHECK(seq.onset == 0);
            for (const Int& v : seq.values) CHECK(v == seq.values[0]);
          }
  }
}

TEST_CASE("sequences grow monotonically to the onset") {
  // A deterministic slice instead of sampling; the verify suite samples.
  auto parts = enumerate_partitions(6);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); j += 2)
      for (std::size_t k = j; k < parts.size(); k += 3) {
        int onset = kstab_onset(parts[i], parts[j], parts[k], 2);
        StabilitySequence seq =
            stability_sequence(parts[i], parts[j], parts[k], 2, onset + 2);
        for (std::size_t t = 1; t < seq.values.size(); ++t)
          CHECK(seq.values[t] >= seq.values[t - 1]);
      }
}

TEST_CASE("stable coefficients") {
  CHECK(stable_kronecker(Partition{}, Partition{}, Partition{}) == 1);
  CHECK(stable_kronecker(Partition{1}, Partition{1}, Partition{}) == 1);
  CHECK(stable_kronecker(Partition{2}, Partition{1}, Partition{1}) == 1);
  // Symmetric in its arguments, like the coefficients themselves.
  CHECK(stable_kronecker(Partition{2}, Partition{2}, Partition{2}) ==
        stable_kronecker(Partition{2}, Partition{2}, Partition{2}));
  CHECK(stable_kronecker(Partition{2, 1}, Partition{1}, Partition{2}) ==
        stable_kronecker(Partition{1}, Partition{2}, Partition{2, 1}));
}

TEST_CASE("fixed-tail size thresholds") {
  CHECK(tail_bound_u(Partition{1}, 2, TailMode::Length) == 6);
  CHECK(tail_bound_u(Partition{1}, 1, TailMode::Durfee) == 8);
  CHECK(tail_bound_u(Partition{2, 1}, 3, TailMode::Length) == 36);

  // g((6,2),(6,2),(7,1)) <= f^{(5,1)} = 5 with the length parameters.
  auto ok = check_tail_bound(Partition{6, 2}, Partition{6, 2}, Partition{1},
                             TailMode::Length, 2);
  REQUIRE(ok.has_value());
  CHECK(*ok);
  CHECK(dimension(Partition{5, 1}) == 5);
  CHECK(kronecker(Partition{6, 2}, Partition{6, 2}, Partition{7, 1}) <= 5);

  // Below the size threshold the corollary does not apply.
  CHECK_FALSE(check_tail_bound(Partition{2, 1}, Partition{2, 1}, Partition{1},
                               TailMode::Durfee, 2)
                  .has_value());
}

TEST_CASE("fixed-tail bound holds wherever applicable") {
  for (int n = 1; n <= 8; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const Partition& tail : {Partition{1}, Partition{2}, Partition{1, 1}}) {
          for (TailMode mode : {TailMode::Length, TailMode::Durfee}) {
            long long param = mode == TailMode::Length
                                  ? std::max(a.length(), b.length())
                                  : std::max(durfee(a), durfee(b));
            if (param < 1) continue;
            auto ok = check_tail_bound(a, b, tail, mode, param);
            if (ok.has_value()) CHECK(*ok);
          }
        }
  }
}

}  // TEST_SUITE
