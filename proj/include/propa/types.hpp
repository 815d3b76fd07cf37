#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace propa {

using PointId = std::uint32_t;
using ElementId = std::uint32_t;

// Malformed input: unreadable files, out-of-range ids, structurally broken
// covers. The CLI reports these on stderr and exits with status 1.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold, e.g. a point
// whose deep balls escape every cover element so the averaged measure is
// undefined. The CLI reports these on stderr and exits with status 2.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Containment radius of a point inside an element equal to the whole space:
// every ball around the point fits, so the radius is unbounded.
inline constexpr int kUnboundedRadius = std::numeric_limits<int>::max();

// Default ceiling on the number of points a space may hold. Guards the dense
// all-pairs distance table (size()^2 entries) against accidental blowups.
inline constexpr std::size_t kDefaultPointBudget = 5000;

// Default ceiling on space size for the exact Lebesgue-number oracle, which
// enumerates maximal cliques of a threshold graph.
inline constexpr std::size_t kDefaultCliqueOracleBudget = 64;

}  // namespace propa
