#include "propa/spaces.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace propa {

namespace {

void check_budget(std::size_t point_count, std::size_t point_budget) {
  if (point_count == 0) {
    throw validation_error("a space needs at least one point");
  }
  if (point_count > point_budget) {
    throw validation_error("space has " + std::to_string(point_count) +
                           " points, over the budget of " + std::to_string(point_budget));
  }
}

}  // namespace

void FiniteMetricSpace::require_point(PointId x) const {
  if (x >= size_) {
    throw validation_error("point id " + std::to_string(x) + " out of range (size " +
                           std::to_string(size_) + ")");
  }
}

int FiniteMetricSpace::dist(PointId x, PointId y) const {
  require_point(x);
  require_point(y);
  return dist_[static_cast<std::size_t>(x) * size_ + y];
}

int FiniteMetricSpace::eccentricity(PointId x) const {
  require_point(x);
  const std::int32_t* row = dist_.data() + static_cast<std::size_t>(x) * size_;
  return *std::max_element(row, row + size_);
}

std::vector<PointId> FiniteMetricSpace::ball(PointId center, int radius) const {
  require_point(center);
  std::vector<PointId> out;
  if (radius < 0) return out;
  const std::int32_t* row = dist_.data() + static_cast<std::size_t>(center) * size_;
  for (PointId p = 0; p < size_; ++p) {
    if (row[p] <= radius) out.push_back(p);
  }
  return out;
}

const std::vector<PointId>& FiniteMetricSpace::neighbors(PointId x) const {
  require_point(x);
  return adj_[x];
}

const std::vector<int>& FiniteMetricSpace::grid_dims() const {
  if (kind_ != SpaceKind::grid) throw precondition_error("grid_dims: not a grid space");
  return grid_dims_;
}

int FiniteMetricSpace::tree_arity() const {
  if (kind_ != SpaceKind::tree) throw precondition_error("tree_arity: not a tree space");
  return tree_arity_;
}

int FiniteMetricSpace::tree_depth() const {
  if (kind_ != SpaceKind::tree) throw precondition_error("tree_depth: not a tree space");
  return tree_depth_;
}

std::vector<int> FiniteMetricSpace::grid_coords(PointId x) const {
  if (kind_ != SpaceKind::grid) throw precondition_error("grid_coords: not a grid space");
  require_point(x);
  std::vector<int> coords(grid_dims_.size());
  std::size_t rest = x;
  for (std::size_t axis = grid_dims_.size(); axis-- > 0;) {
    coords[axis] = static_cast<int>(rest % grid_dims_[axis]);
    rest /= grid_dims_[axis];
  }
  return coords;
}

void FiniteMetricSpace::finish_construction() {
  adj_.assign(size_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  dist_.assign(size_ * size_, -1);
  std::vector<PointId> frontier;
  for (PointId source = 0; source < size_; ++source) {
    std::int32_t* row = dist_.data() + static_cast<std::size_t>(source) * size_;
    row[source] = 0;
    frontier.assign(1, source);
    std::int32_t level = 0;
    while (!frontier.empty()) {
      std::vector<PointId> next;
      ++level;
      for (PointId v : frontier) {
        for (PointId w : adj_[v]) {
          if (row[w] < 0) {
            row[w] = level;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
    for (PointId p = 0; p < size_; ++p) {
      if (row[p] < 0) {
        throw validation_error("graph is not connected: no path from " +
                               std::to_string(source) + " to " + std::to_string(p));
      }
    }
  }
  diameter_ = static_cast<int>(*std::max_element(dist_.begin(), dist_.end()));
}

FiniteMetricSpace from_graph(std::size_t vertex_count,
                             std::vector<std::pair<PointId, PointId>> edge_list,
                             std::size_t point_budget) {
  check_budget(vertex_count, point_budget);
  for (auto& [a, b] : edge_list) {
    if (a >= vertex_count || b >= vertex_count) {
      throw validation_error("edge endpoint out of range: (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
    }
    if (a == b) {
      throw validation_error("self-loop at vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

  FiniteMetricSpace out;
  out.size_ = vertex_count;
  out.kind_ = SpaceKind::graph;
  out.edges_ = std::move(edge_list);
  out.finish_construction();
  return out;
}

FiniteMetricSpace grid_space(std::vector<int> dims, std::size_t point_budget) {
  if (dims.empty()) throw validation_error("grid needs at least one axis");
  std::size_t count = 1;
  for (int d : dims) {
    if (d < 1) throw validation_error("grid axis lengths must be >= 1");
    if (count > point_budget / static_cast<std::size_t>(d)) {
      count = point_budget + 1;  // saturate; the budget check below reports it
      break;
    }
    count *= static_cast<std::size_t>(d);
  }
  check_budget(count, point_budget);

  // Strides for row-major ids, last axis fastest.
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t axis = dims.size() - 1; axis-- > 0;) {
    stride[axis] = stride[axis + 1] * static_cast<std::size_t>(dims[axis + 1]);
  }

  std::vector<std::pair<PointId, PointId>> edge_list;
  std::vector<int> coords(dims.size(), 0);
  for (std::size_t id = 0; id < count; ++id) {
    for (std::size_t axis = 0; axis < dims.size(); ++axis) {
      if (coords[axis] + 1 < dims[axis]) {
        edge_list.emplace_back(static_cast<PointId>(id), static_cast<PointId>(id + stride[axis]));
      }
    }
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      if (++coords[axis] < dims[axis]) break;
      coords[axis] = 0;
    }
  }
  std::sort(edge_list.begin(), edge_list.end());

  FiniteMetricSpace out;
  out.size_ = count;
  out.kind_ = SpaceKind::grid;
  out.edges_ = std::move(edge_list);
  out.grid_dims_ = std::move(dims);
  out.finish_construction();
  return out;
}

FiniteMetricSpace tree_space(int arity, int depth, std::size_t point_budget) {
  if (arity < 1) throw validation_error("tree arity must be >= 1");
  if (depth < 0) throw validation_error("tree depth must be >= 0");
  std::size_t count = 1;  // the root
  std::size_t level = 1;
  for (int d = 1; d <= depth; ++d) {
    if (level > point_budget / static_cast<std::size_t>(arity)) {
      count = point_budget + 1;
      break;
    }
    level *= static_cast<std::size_t>(arity);
    count += level;
    if (count > point_budget) break;
  }
  check_budget(count, point_budget);

  std::vector<std::pair<PointId, PointId>> edge_list;
  for (std::size_t v = 0; v < count; ++v) {
    for (int j = 0; j < arity; ++j) {
      const std::size_t child = static_cast<std::size_t>(arity) * v + 1 + j;
      if (child >= count) break;
      edge_list.emplace_back(static_cast<PointId>(v), static_cast<PointId>(child));
    }
  }

  FiniteMetricSpace out;
  out.size_ = count;
  out.kind_ = SpaceKind::tree;
  out.edges_ = std::move(edge_list);
  out.tree_arity_ = arity;
  out.tree_depth_ = depth;
  out.finish_construction();
  return out;
}

int set_diameter(const FiniteMetricSpace& space, std::span<const PointId> pts) {
  if (pts.empty()) throw precondition_error("set_diameter: empty point set");
  int best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, space.dist(pts[i], pts[j]));
    }
  }
  return best;
}

int tree_node_depth(int arity, PointId node) {
  if (arity < 1) throw validation_error("tree arity must be >= 1");
  if (arity == 1) return static_cast<int>(node);
  int depth = 0;
  std::size_t v = node;
  while (v != 0) {
    v = (v - 1) / static_cast<std::size_t>(arity);
    ++depth;
  }
  return depth;
}

}  // namespace propa
