#pragma once

#include "kronbounds/numeric.hpp"
#include "kronbounds/partition.hpp"

#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace kronbounds {

/// Dimension of the S_n irreducible indexed by lambda (hook length formula).
Int dimension(const Partition& lambda);

/// Dimension of the GL_m irreducible indexed by lambda (hook content
/// formula); 0 when lambda has more than m rows.
Int gl_dimension(const Partition& lambda, int m);

/// Order of the conjugacy class with cycle type alpha: n! / prod j^{m_j} m_j!.
Int class_size(const Partition& alpha);

/// Memoized exact character values chi^lambda[alpha], evaluated by recursive
/// border-strip removal. Parts of alpha are peeled in decreasing order; the
/// memo is keyed by (intermediate shape, remaining cycle type), which is
/// shared heavily across class sums. Concurrent use may duplicate work but
/// never observes a wrong value; entries are immutable once inserted. When
/// the entry limit is reached further values are computed uncached.
///
/// Worst-case cost is exponential in n; in practice values for n up to
/// about 40 are fine.
class CharacterStore {
 public:
  explicit CharacterStore(std::size_t max_entries = 4'000'000);

  /// chi^shape[cycle_type]; throws std::domain_error on size mismatch.
  Int value(const Partition& shape, const Partition& cycle_type);

  std::size_t entry_count() const;
  void clear();

 private:
  Int eval(const std::vector<int>& shape, const std::vector<int>& alpha, std::size_t idx);

  std::size_t max_entries_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, Int, IntVecHash> memo_;
};

/// Shared process-wide store used by the free functions below.
CharacterStore& global_character_store();

/// chi^lambda[alpha] through the global store.
Int character(const Partition& lambda, const Partition& alpha);

}  // namespace kronbounds
