#pragma once

#include <span>
#include <utility>
#include <vector>

#include "propa/types.hpp"

namespace propa {

enum class SpaceKind { graph, grid, tree };

// A finite metric space carried by a connected undirected graph with the
// shortest-path metric. All distances are precomputed into a dense table at
// construction (one BFS per point), so dist() is O(1) afterwards. Instances
// are immutable; every query is const and safe to share across threads.
class FiniteMetricSpace {
 public:
  std::size_t size() const { return size_; }
  SpaceKind kind() const { return kind_; }

  int dist(PointId x, PointId y) const;
  int diameter() const { return diameter_; }
  int eccentricity(PointId x) const;

  // Closed ball B(x, radius): all points within the radius, ascending ids.
  // A negative radius gives the empty set.
  std::vector<PointId> ball(PointId center, int radius) const;

  const std::vector<PointId>& neighbors(PointId x) const;

  // Canonical edge list: each edge once as (a, b) with a < b, sorted.
  const std::vector<std::pair<PointId, PointId>>& edges() const { return edges_; }

  // Generator parameters, kept for provenance and serialization.
  const std::vector<int>& grid_dims() const;  // kind() == grid only
  int tree_arity() const;                     // kind() == tree only
  int tree_depth() const;                     // kind() == tree only

  // Coordinates of a grid point (last axis varies fastest). grid only.
  std::vector<int> grid_coords(PointId x) const;

  friend FiniteMetricSpace from_graph(std::size_t vertex_count,
                                      std::vector<std::pair<PointId, PointId>> edge_list,
                                      std::size_t point_budget);
  friend FiniteMetricSpace grid_space(std::vector<int> dims, std::size_t point_budget);
  friend FiniteMetricSpace tree_space(int arity, int depth, std::size_t point_budget);

 private:
  FiniteMetricSpace() = default;
  void require_point(PointId x) const;
  void finish_construction();  // adjacency, BFS table, diameter

  std::size_t size_ = 0;
  SpaceKind kind_ = SpaceKind::graph;
  int diameter_ = 0;
  std::vector<std::pair<PointId, PointId>> edges_;
  std::vector<std::vector<PointId>> adj_;
  std::vector<std::int32_t> dist_;  // row-major size_ * size_
  std::vector<int> grid_dims_;
  int tree_arity_ = 0;
  int tree_depth_ = 0;
};

// Builds a space from an explicit vertex count and undirected edge list.
// Self-loops and out-of-range endpoints are rejected; duplicate edges are
// merged. The graph must be connected and within the point budget.
FiniteMetricSpace from_graph(std::size_t vertex_count,
                             std::vector<std::pair<PointId, PointId>> edge_list,
                             std::size_t point_budget = kDefaultPointBudget);

// Axis-aligned grid with unit steps along one coordinate at a time, so the
// metric is the l1 (taxicab) distance between coordinate tuples. Point ids
// are row-major with the last axis varying fastest.
FiniteMetricSpace grid_space(std::vector<int> dims, std::size_t point_budget = kDefaultPointBudget);

// Complete rooted tree: every node at depth < `depth` has `arity` children.
// Node 0 is the root and the children of v are arity*v + 1 + j. The metric
// is the tree path metric.
FiniteMetricSpace tree_space(int arity, int depth, std::size_t point_budget = kDefaultPointBudget);

// Max pairwise distance within pts (0 for a singleton). Throws
// precondition_error when pts is empty.
int set_diameter(const FiniteMetricSpace& space, std::span<const PointId> pts);

// Depth of a node of a complete `arity`-ary tree in the layout used by
// tree_space (root 0, children arity*v + 1 + j).
int tree_node_depth(int arity, PointId node);

}  // namespace propa
