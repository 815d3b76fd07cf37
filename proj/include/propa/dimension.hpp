#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "propa/covers.hpp"
#include "propa/rational.hpp"
#include "propa/spaces.hpp"
#include "propa/witness.hpp"

namespace propa {

// A dimension-function query: required Lebesgue number lambda, and the mesh
// cap standing in for "uniformly bounded" on a finite space (without a cap
// the single-element cover makes every value 0).
struct DimQuery {
  int lambda = 0;
  int mesh_cap = 1;
};

struct DimEstimate {
  int lambda = 0;
  int mesh_cap = 1;
  // Best multiplicity found minus one; empty when no generated cover met the
  // constraints (an explicit no-result, never a fabricated value).
  std::optional<int> upper;
  // True when the winning cover's Lebesgue quality was established only by
  // the per-point ball criterion (space too large for the exact oracle).
  bool surrogate = false;
  std::optional<int> exact;  // filled by the exhaustive search on tiny spaces
  std::optional<Cover> witness_cover;
};

// Upper-bounds the dimension function at lambda by sweeping the cover
// generators (interval widths on grids, band widths on trees, net radii
// everywhere) and keeping covers with mesh <= mesh_cap whose Lebesgue number
// is verified >= lambda — exactly when the space fits the clique oracle,
// otherwise via the ball criterion (flagged surrogate). Winner selection:
// smallest multiplicity, then smallest mesh, then lexicographically smallest
// element list. Throws precondition_error when mesh_cap < lambda (no set of
// diameter lambda could fit any element).
DimEstimate dim_upper(const FiniteMetricSpace& space, DimQuery query);

// Exact minimum of multiplicity - 1 over all covers with mesh <= mesh_cap
// and Lebesgue number >= lambda, for spaces of at most 10 points. Searches
// set partitions of the maximal cliques of the threshold graph (each group's
// union becomes an element); restricting to such covers loses nothing, since
// replacing every element of an admissible cover by the union of the maximal
// cliques it absorbs keeps the cover admissible without raising any point's
// load. Throws precondition_error on oversized inputs or infeasible queries.
int dim_exact_tiny(const FiniteMetricSpace& space, DimQuery query);

struct BoundCurveRow {
  int n = 0;
  int m = 0;            // multiplicity of the cover supplied for this n
  double bound = 0.0;   // 2 * (1 - m^(-2R/n))
  Rational measured_sup_eta;
  Rational measured_sup_zeta;
  PointId sup_pair_x = 0;
  PointId sup_pair_y = 0;
};

// Runs a fully audited witness per (n, cover) entry and tabulates the bound
// against the measured suprema. Entries keep their given order.
std::vector<BoundCurveRow> bound_curve(const FiniteMetricSpace& space,
                                       const std::vector<std::pair<int, Cover>>& family, int R);

}  // namespace propa
