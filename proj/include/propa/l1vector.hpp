#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "propa/rational.hpp"

namespace propa {

// Finitely supported vector with exact, strictly positive rational entries,
// indexed by point or element ids and kept sorted by index. Zero coordinates
// are never stored, so entries() is exactly the support.
class L1Vector {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  L1Vector() = default;

  // Entries may arrive unsorted; duplicates merge additively and zeros are
  // dropped. Negative values are rejected.
  static L1Vector from_entries(std::vector<Entry> raw);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rational mass() const;
  Rational at(std::uint32_t index) const;  // 0 when outside the support

  friend bool operator==(const L1Vector& a, const L1Vector& b) = default;

 private:
  std::vector<Entry> entries_;
};

// Sum over the union of supports of |u(idx) - v(idx)|, exact.
Rational l1_distance(const L1Vector& u, const L1Vector& v);

// Uniform probability vector: 1/|support| at each index. The support may
// arrive unsorted but must be nonempty and duplicate-free.
L1Vector xi_uniform(std::span<const std::uint32_t> support);

}  // namespace propa
