#include "kronbounds/stability.hpp"

#include "kronbounds/kronecker.hpp"

#include <algorithm>

namespace kronbounds {

ReductionOutcome reduce(const Partition& lambda, const Partition& mu, const Partition& nu,
                        std::optional<int> ell_opt) {
  if (lambda.size() != mu.size() || lambda.size() != nu.size())
    throw std::domain_error("reduce needs partitions of equal size");
  int min_ell = std::max({lambda.length(), mu.length(), nu.length()});
  int ell = ell_opt.value_or(min_ell);
  if (ell < min_ell) throw std::domain_error("length bound below the actual lengths");

  ReductionOutcome out;
  long long n = lambda.size();
  out.s = n - nu.part(1);

  for (int i = 1; i <= ell; ++i) {
    if (std::abs(static_cast<long long>(lambda.part(i)) - mu.part(i)) > out.s) {
      out.kind = ReductionKind::ZeroCertificate;
      out.witness_index = i;
      return out;
    }
  }

  auto [omega, rho] = union_intersection(lambda, mu);
  out.omega = omega;
  out.rho = rho;
  for (int i = 1; i <= ell; ++i)
    if (rho.part(i) >= omega.part(i + 1) + out.s) out.index_set.push_back(i);

  out.anchor.assign(ell, 0);
  {
    auto it = out.index_set.begin();
    for (int j = 1; j <= ell; ++j) {
      while (it != out.index_set.end() && *it < j) ++it;
      out.anchor[j - 1] = (it == out.index_set.end()) ? 0 : *it;
    }
  }

  // Rows with an anchor shrink by rho at the anchor and gain the staircase
  // term; rows above every anchor are carried over unchanged.
  std::vector<long long> rl(ell), rm(ell);
  for (int j = 1; j <= ell; ++j) {
    int ij = out.anchor[j - 1];
    long long shift = 0;
    if (ij > 0) {
      shift = -static_cast<long long>(rho.part(ij)) + out.s * (ell + 1 - ij);
    } else {
      out.map_total = false;
    }
    rl[j - 1] = lambda.part(j) + shift;
    rm[j - 1] = mu.part(j) + shift;
    if (rl[j - 1] < 0 || rm[j - 1] < 0)
      throw std::logic_error("reduction produced a negative row");
  }
  auto to_partition = [](const std::vector<long long>& rows) {
    std::vector<int> parts;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j > 0 && rows[j] > rows[j - 1])
        throw std::logic_error("reduction rows are not weakly decreasing");
      if (rows[j] > 0) {
        if (!parts.empty() && static_cast<long long>(parts.back()) < rows[j])
          throw std::logic_error("reduction rows are not weakly decreasing");
        parts.push_back(static_cast<int>(rows[j]));
      }
    }
    return Partition(parts);
  };
  out.phi_lambda = to_partition(rl);
  out.phi_mu = to_partition(rm);
  out.r = out.phi_lambda.size();
  if (out.phi_mu.size() != out.r)
    throw std::logic_error("reduction images disagree in size");

  std::vector<int> pn;
  long long head = out.r - out.s;
  if (head < nu.part(2))
    throw std::logic_error("reduction cannot rebuild the third partition");
  if (head > 0) pn.push_back(static_cast<int>(head));
  for (int i = 2; i <= nu.length(); ++i) pn.push_back(nu.part(i));
  out.phi_nu = Partition(pn);
  if (out.phi_nu.size() != out.r)
    throw std::logic_error("reduction images disagree in size");
  return out;
}

std::array<Partition, 3> sort_triple(const Partition& a, const Partition& b,
                                     const Partition& c) {
  std::array<Partition, 3> t{a, b, c};
  std::sort(t.begin(), t.end(), [](const Partition& x, const Partition& y) {
    if (x.part(1) != y.part(1)) return x.part(1) < y.part(1);
    if (x.length() != y.length()) return x.length() < y.length();
    return x.parts() < y.parts();
  });
  return t;
}

bool kstab_condition(const Partition& lambda, const Partition& mu, const Partition& nu,
                     int k) {
  if (lambda.size() != mu.size() || lambda.size() != nu.size())
    throw std::domain_error("kstab_condition needs partitions of equal size");
  if (k < 1) throw std::domain_error("kstab_condition needs k >= 1");
  auto t = sort_triple(lambda, mu, nu);
  long long s = t[0].size() - t[2].part(1);
  return std::min(t[0].part(k), t[1].part(k)) >=
         std::max(t[0].part(k + 1), t[1].part(k + 1)) + s;
}

int kstab_onset(const Partition& lambda, const Partition& mu, const Partition& nu,
                int k) {
  if (k < 1) throw std::domain_error("kstab_onset needs k >= 1");
  auto t = sort_triple(lambda, mu, nu);
  long long s = t[0].size() - t[2].part(1);
  long long onset = std::max(t[0].part(k + 1), t[1].part(k + 1)) + s -
                    std::min(t[0].part(k), t[1].part(k));
  return static_cast<int>(std::max(0LL, onset));
}

namespace {

Partition column_shift(const Partition& p, int k, int t) {
  if (t == 0) return p;
  return add(p, Partition(std::vector<int>(k, t)));
}

}  // namespace

StabilitySequence stability_sequence(const Partition& lambda, const Partition& mu,
                                     const Partition& nu, int k, int t_max,
                                     CharacterStore* store) {
  if (k < 1) throw std::domain_error("stability_sequence needs k >= 1");
  if (t_max < 0) throw std::domain_error("stability_sequence needs t_max >= 0");
  auto t = sort_triple(lambda, mu, nu);

  StabilitySequence seq;
  seq.lambda = t[0];
  seq.mu = t[1];
  seq.nu = t[2];
  seq.k = k;
  seq.onset = kstab_onset(lambda, mu, nu, k);

  for (int step = 0; step <= t_max; ++step) {
    Partition l2 = column_shift(seq.lambda, k, step);
    Partition m2 = column_shift(seq.mu, k, step);
    Partition n2 = step == 0 ? seq.nu : add(seq.nu, Partition({step * k}));
    seq.values.push_back(kronecker(l2, m2, n2, store));
  }
  seq.stabilized = t_max >= seq.onset;
  if (seq.stabilized) seq.stable_value = seq.values[seq.onset];
  return seq;
}

namespace {

Partition prepend_row(long long first, const Partition& tail) {
  if (first < tail.part(1))
    throw std::logic_error("prepended first row below the second");
  std::vector<int> parts;
  if (first > 0) parts.push_back(static_cast<int>(first));
  for (int i = 1; i <= tail.length(); ++i) parts.push_back(tail.part(i));
  return Partition(parts);
}

}  // namespace

Int stable_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma,
                     CharacterStore* store) {
  long long t = std::max({alpha.size() + alpha.part(1), beta.size() + beta.part(1),
                          gamma.size() + gamma.part(1), 0LL});
  auto make = [&](long long tt) {
    return std::array<Partition, 3>{prepend_row(tt - alpha.size(), alpha),
                                    prepend_row(tt - beta.size(), beta),
                                    prepend_row(tt - gamma.size(), gamma)};
  };
  long long guard = t + alpha.size() + beta.size() + gamma.size() + 8;
  while (true) {
    auto m = make(t);
    if (kstab_condition(m[0], m[1], m[2], 1)) break;
    if (++t > guard) throw std::logic_error("stabilization onset not reached");
  }
  auto m1 = make(t + 1);
  auto m2 = make(t + 2);
  Int v1 = kronecker(m1[0], m1[1], m1[2], store);
  Int v2 = kronecker(m2[0], m2[1], m2[2], store);
  if (v1 != v2) throw std::logic_error("stable coefficient still moving past onset");
  return v1;
}

long long tail_bound_u(const Partition& nu_tail, long long bound_param, TailMode mode) {
  long long s = nu_tail.size();
  if (bound_param < 1) throw std::domain_error("tail bound parameter must be positive");
  if (mode == TailMode::Length) return (bound_param + 1) * bound_param * s;
  return 2 * (bound_param + 1) * (bound_param + 1) * s;
}

std::optional<bool> check_tail_bound(const Partition& lambda, const Partition& mu,
                                     const Partition& nu_tail, TailMode mode,
                                     long long bound_param, CharacterStore* store) {
  if (lambda.size() != mu.size())
    throw std::domain_error("check_tail_bound needs |lambda| == |mu|");
  long long n = lambda.size();
  long long s = nu_tail.size();
  long long u = tail_bound_u(nu_tail, bound_param, mode);
  if (n < u) return std::nullopt;
  if (mode == TailMode::Length) {
    if (lambda.length() > bound_param || mu.length() > bound_param) return std::nullopt;
  } else {
    if (durfee(lambda) > bound_param || durfee(mu) > bound_param) return std::nullopt;
  }
  if (n - s < nu_tail.part(1)) return std::nullopt;

  Partition nu = prepend_row(n - s, nu_tail);
  Partition cap_shape = prepend_row(u - s, nu_tail);
  Int g = kronecker(lambda, mu, nu, store);
  return g <= dimension(cap_shape);
}

}  // namespace kronbounds
