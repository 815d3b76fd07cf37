#pragma once

#include <vector>

#include "propa/spaces.hpp"
#include "propa/types.hpp"

namespace propa {

// A cover of a space: nonempty point sets (each sorted, no duplicates) whose
// union is the whole space, plus one designated basepoint inside each
// element. Element order matters: positions are the ElementIds used by the
// witness construction and by serialization.
struct Cover {
  std::vector<std::vector<PointId>> elements;
  std::vector<PointId> basepoints;
};

// Structural checks: nonempty elements, sorted unique in-range points, one
// in-element basepoint per element, union equal to the whole space. Throws
// validation_error with a description of the first problem found.
void validate_cover(const FiniteMetricSpace& space, const Cover& cover);

// Largest number of elements sharing a common point.
int multiplicity(const FiniteMetricSpace& space, const Cover& cover);

// Largest element diameter.
int mesh(const FiniteMetricSpace& space, const Cover& cover);

// One row of the containment-radius table:
//   row[i] = largest r >= 0 with B(x, r) inside element i,
//            kUnboundedRadius when element i is the whole space,
//            -1 when x itself lies outside element i.
std::vector<int> containment_row(const FiniteMetricSpace& space, const Cover& cover, PointId x);

// The full table, one row per point.
std::vector<std::vector<int>> containment_radii(const FiniteMetricSpace& space, const Cover& cover);

struct CoverStats {
  int multiplicity = 0;
  int mesh = 0;
  // Per point: the largest radius r such that B(x, r) fits inside some single
  // element, clamped to [0, diameter] so the value stays a finite integer
  // even when an element is the whole space.
  std::vector<int> ball_lebesgue_per_point;
  int ball_lebesgue_global = 0;  // min over points of the per-point value
  PointId min_location = 0;      // smallest point id attaining the min
};

CoverStats cover_stats(const FiniteMetricSpace& space, const Cover& cover);

struct LebesgueVerdict {
  bool holds = false;                   // every diameter <= lambda set fits in one element
  std::vector<PointId> counterexample;  // a violating set when !holds
};

// Maximal cliques of the threshold graph: points are vertices, with an edge
// where dist <= lambda. Cliques are exactly the sets of diameter <= lambda.
// Each clique is sorted; the list is in lexicographic order. Throws
// precondition_error over oracle_budget points (the enumeration uses 64-bit
// vertex masks and is exponential in the worst case).
std::vector<std::vector<PointId>> threshold_cliques(const FiniteMetricSpace& space, int lambda,
                                                    std::size_t oracle_budget = kDefaultCliqueOracleBudget);

// Decides exactly whether the Lebesgue number is >= lambda: every subset of
// diameter <= lambda must lie inside a single element, and it suffices to
// test the maximal cliques of the threshold graph. On failure the verdict
// carries the lexicographically first violating maximal clique.
LebesgueVerdict exact_lebesgue_at_least(const FiniteMetricSpace& space, const Cover& cover, int lambda,
                                        std::size_t oracle_budget = kDefaultCliqueOracleBudget);

// Cover generators. Each returns a validated cover with basepoints already
// chosen; none of them asserts its own Lebesgue quality — callers measure it.

// Grid spaces. Per axis: blocks of 4*ell consecutive coordinates starting at
// every multiple of 2*ell (two staggered partitions into 4*ell-blocks),
// clipped at the upper boundary; cover elements are products of one block
// per axis. Every interior point admits a single-element ball of radius ell,
// and the multiplicity is at most 2 per axis, so at most 2^d overall.
Cover interval_cover(const FiniteMetricSpace& space, int ell);

// Tree spaces. Two families of depth bands of width 2*ell, at offsets 0 and
// ell; each band is split into connected components, which become the
// elements (duplicates between the families are merged). Each point lies in
// exactly one component per family, so the multiplicity is at most 2.
Cover tree_annuli_cover(const FiniteMetricSpace& space, int ell);

// Any space. Scans ids ascending and keeps a point as a net center when it
// is at distance > radius from every center so far; elements are the balls
// B(center, 2*radius). Every point is within radius of some center, so the
// balls cover even with the doubled radius.
Cover greedy_net_cover(const FiniteMetricSpace& space, int radius);

// 1-center of each element: the member minimizing the max distance to the
// rest of the element, ties broken by smallest point id.
std::vector<PointId> choose_basepoints(const FiniteMetricSpace& space,
                                       const std::vector<std::vector<PointId>>& elements);

}  // namespace propa
