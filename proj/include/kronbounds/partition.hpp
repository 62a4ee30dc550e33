#pragma once

#include "kronbounds/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kronbounds {

/// Cell of a Young diagram, 1-based: (i,j) lies in [lambda] iff j <= lambda_i.
struct Cell {
  int row = 1;
  int col = 1;
};

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0. Parts are stored
/// without trailing zeros; part(i) is total and returns 0 past the length.
/// Instances are immutable after construction and safe to share.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Parses "4,3,1"; the empty string denotes the empty partition.
  /// Rejects zeros, negatives and order violations.
  static Partition parse(std::string_view text);

  /// 1-based part accessor with zero padding beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const { return n_; }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool contains_cell(Cell u) const {
    return u.row >= 1 && u.col >= 1 && u.col <= part(u.row);
  }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long long n_ = 0;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

/// (hook length, content) of a cell; throws std::domain_error outside the diagram.
std::pair<int, int> hook_and_content(const Partition& lambda, Cell u);

/// Durfee square side: largest r with lambda_r >= r.
int durfee(const Partition& lambda);

/// Componentwise sum, the vector addition of partitions.
Partition add(const Partition& lambda, const Partition& mu);

/// Diagram union and intersection: (pointwise max, pointwise min).
std::pair<Partition, Partition> union_intersection(const Partition& lambda,
                                                   const Partition& mu);

/// Principal hook lengths (2*mu_1 - 1, 2*mu_2 - 3, ...), truncated at the
/// Durfee square. For self-conjugate mu the entries are distinct odd
/// numbers summing to |mu|.
Partition principal_hooks(const Partition& mu);

/// Staircase (m, m-1, ..., 1).
Partition staircase(int m);

/// All partitions of n subject to the optional constraints, in reverse
/// lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(long long n,
                                            std::optional<int> max_length = std::nullopt,
                                            std::optional<int> max_part = std::nullopt);

/// Number of partitions of n.
Int count_partitions(long long n);

/// Number of partitions of n into parts >= 2, i.e. P(n) - P(n-1) for n >= 1.
Int count_partitions_min2(long long n);

/// Number of multisets with elements drawn from parts_set summing to k.
Int count_parts_in_set(long long k, const std::vector<int>& parts_set);

}  // namespace kronbounds
