#include "kronbounds/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kronbounds {

namespace {

void validate_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_parts(parts_);
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  // Trim surrounding whitespace; an all-blank string is the empty partition.
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) return Partition{};

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    std::size_t tb = 0, te = tok.size();
    while (tb < te && std::isspace(static_cast<unsigned char>(tok[tb]))) ++tb;
    while (te > tb && std::isspace(static_cast<unsigned char>(tok[te - 1]))) --te;
    tok = tok.substr(tb, te - tb);
    if (tok.empty()) throw std::invalid_argument("empty component in partition text");
    long long v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("invalid character in partition text");
      v = v * 10 + (c - '0');
      if (v > 1'000'000'000LL) throw std::invalid_argument("partition part too large");
    }
    parts.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw std::invalid_argument("trailing comma in partition text");
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  int width = lambda.part(1);
  parts.reserve(width);
  for (int j = 1; j <= width; ++j) {
    int count = 0;
    for (int i = 1; i <= lambda.length(); ++i)
      if (lambda.part(i) >= j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::pair<int, int> hook_and_content(const Partition& lambda, Cell u) {
  if (!lambda.contains_cell(u)) throw std::domain_error("cell outside the diagram");
  Partition conj = conjugate(lambda);
  int hook = lambda.part(u.row) - u.col + conj.part(u.col) - u.row + 1;
  int content = u.col - u.row;
  return {hook, content};
}

int durfee(const Partition& lambda) {
  int r = 0;
  while (lambda.part(r + 1) >= r + 1) ++r;
  return r;
}

Partition add(const Partition& lambda, const Partition& mu) {
  int len = std::max(lambda.length(), mu.length());
  std::vector<int> parts(len);
  for (int i = 1; i <= len; ++i) parts[i - 1] = lambda.part(i) + mu.part(i);
  return Partition(std::move(parts));
}

std::pair<Partition, Partition> union_intersection(const Partition& lambda,
                                                   const Partition& mu) {
  int len = std::max(lambda.length(), mu.length());
  std::vector<int> up, ip;
  for (int i = 1; i <= len; ++i) {
    up.push_back(std::max(lambda.part(i), mu.part(i)));
    int m = std::min(lambda.part(i), mu.part(i));
    if (m > 0) ip.push_back(m);
  }
  return {Partition(std::move(up)), Partition(std::move(ip))};
}

Partition principal_hooks(const Partition& mu) {
  int d = durfee(mu);
  std::vector<int> parts;
  parts.reserve(d);
  for (int i = 1; i <= d; ++i) parts.push_back(2 * mu.part(i) - (2 * i - 1));
  return Partition(std::move(parts));
}

Partition staircase(int m) {
  if (m < 0) throw std::invalid_argument("staircase side must be nonnegative");
  std::vector<int> parts;
  parts.reserve(m);
  for (int i = m; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

namespace {

void enumerate_rec(long long remaining, int max_part, int slots_left,
                   std::vector<int>& stack, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  if (slots_left == 0) return;
  // Largest part first gives reverse lexicographic output order.
  long long lo = (remaining + slots_left - 1) / slots_left;
  int hi = static_cast<int>(std::min<long long>(max_part, remaining));
  for (int p = hi; p >= lo; --p) {
    stack.push_back(p);
    enumerate_rec(remaining - p, p, slots_left - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long long n, std::optional<int> max_length,
                                            std::optional<int> max_part) {
  if (n < 0) throw std::domain_error("cannot partition a negative integer");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  int len = max_length ? *max_length : static_cast<int>(n);
  int mp = max_part ? *max_part : static_cast<int>(std::min<long long>(n, 1 << 30));
  if (len <= 0 || mp <= 0) return out;
  std::vector<int> stack;
  enumerate_rec(n, mp, len, stack, out);
  return out;
}

Int count_partitions(long long n) {
  if (n < 0) return 0;
  std::vector<Int> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (long long part = 1; part <= n; ++part)
    for (long long j = part; j <= n; ++j) p[j] += p[j - part];
  return p[n];
}

Int count_partitions_min2(long long n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return count_partitions(n) - count_partitions(n - 1);
}

Int count_parts_in_set(long long k, const std::vector<int>& parts_set) {
  if (k < 0) return 0;
  std::vector<int> parts = parts_set;
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<Int> ways(static_cast<std::size_t>(k) + 1);
  ways[0] = 1;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("part set elements must be positive");
    for (long long j = p; j <= k; ++j) ways[j] += ways[j - p];
  }
  return ways[k];
}

}  // namespace kronbounds
