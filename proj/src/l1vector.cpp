#include "propa/l1vector.hpp"

#include <algorithm>
#include <string>

namespace propa {

L1Vector L1Vector::from_entries(std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  L1Vector out;
  for (auto& [index, value] : raw) {
    if (value < 0) {
      throw validation_error("negative entry at index " + std::to_string(index));
    }
    if (value == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().first == index) {
      out.entries_.back().second += value;
    } else {
      out.entries_.emplace_back(index, std::move(value));
    }
  }
  return out;
}

Rational L1Vector::mass() const {
  Rational total = 0;
  for (const auto& [index, value] : entries_) total += value;
  return total;
}

Rational L1Vector::at(std::uint32_t index) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& entry, std::uint32_t key) { return entry.first < key; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

Rational l1_distance(const L1Vector& u, const L1Vector& v) {
  Rational total = 0;
  auto iu = u.entries().begin();
  auto iv = v.entries().begin();
  while (iu != u.entries().end() || iv != v.entries().end()) {
    if (iv == v.entries().end() || (iu != u.entries().end() && iu->first < iv->first)) {
      total += iu->second;  // entries are positive, |u - 0| = u
      ++iu;
    } else if (iu == u.entries().end() || iv->first < iu->first) {
      total += iv->second;
      ++iv;
    } else {
      total += abs(iu->second - iv->second);
      ++iu;
      ++iv;
    }
  }
  return total;
}

L1Vector xi_uniform(std::span<const std::uint32_t> support) {
  if (support.empty()) {
    throw precondition_error("uniform measure needs a nonempty index set");
  }
  std::vector<std::uint32_t> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw validation_error("uniform measure support has duplicate indices");
  }
  const Rational share(1, static_cast<unsigned>(sorted.size()));
  std::vector<L1Vector::Entry> entries;
  entries.reserve(sorted.size());
  for (std::uint32_t index : sorted) entries.emplace_back(index, share);
  return L1Vector::from_entries(std::move(entries));
}

}  // namespace propa
