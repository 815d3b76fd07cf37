#include "propa/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace propa {

namespace {

bool is_sorted_unique(const std::vector<PointId>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i - 1] >= pts[i]) return false;
  }
  return true;
}

bool contains_point(const std::vector<PointId>& sorted_pts, PointId x) {
  return std::binary_search(sorted_pts.begin(), sorted_pts.end(), x);
}

}  // namespace

void validate_cover(const FiniteMetricSpace& space, const Cover& cover) {
  if (cover.elements.empty()) throw validation_error("cover has no elements");
  if (cover.basepoints.size() != cover.elements.size()) {
    throw validation_error("cover has " + std::to_string(cover.elements.size()) + " elements but " +
                           std::to_string(cover.basepoints.size()) + " basepoints");
  }
  std::vector<bool> covered(space.size(), false);
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    const auto& elem = cover.elements[i];
    if (elem.empty()) throw validation_error("element " + std::to_string(i) + " is empty");
    if (!is_sorted_unique(elem)) {
      throw validation_error("element " + std::to_string(i) + " is not sorted or has duplicates");
    }
    if (elem.back() >= space.size()) {
      throw validation_error("element " + std::to_string(i) + " mentions point " +
                             std::to_string(elem.back()) + ", outside the space");
    }
    if (!contains_point(elem, cover.basepoints[i])) {
      throw validation_error("basepoint " + std::to_string(cover.basepoints[i]) +
                             " lies outside element " + std::to_string(i));
    }
    for (PointId p : elem) covered[p] = true;
  }
  for (PointId p = 0; p < space.size(); ++p) {
    if (!covered[p]) {
      throw validation_error("point " + std::to_string(p) + " is not covered by any element");
    }
  }
}

int multiplicity(const FiniteMetricSpace& space, const Cover& cover) {
  std::vector<int> load(space.size(), 0);
  for (const auto& elem : cover.elements) {
    for (PointId p : elem) ++load[p];
  }
  return *std::max_element(load.begin(), load.end());
}

int mesh(const FiniteMetricSpace& space, const Cover& cover) {
  int out = 0;
  for (const auto& elem : cover.elements) {
    out = std::max(out, set_diameter(space, elem));
  }
  return out;
}

std::vector<int> containment_row(const FiniteMetricSpace& space, const Cover& cover, PointId x) {
  std::vector<int> row(cover.elements.size(), -1);
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    const auto& elem = cover.elements[i];
    if (!contains_point(elem, x)) continue;
    if (elem.size() == space.size()) {
      row[i] = kUnboundedRadius;
      continue;
    }
    // B(x, r) fits iff r stays below the distance to the nearest outside point.
    int nearest_outside = kUnboundedRadius;
    std::size_t next = 0;  // cursor into elem, which is sorted
    for (PointId p = 0; p < space.size(); ++p) {
      while (next < elem.size() && elem[next] < p) ++next;
      if (next < elem.size() && elem[next] == p) continue;
      nearest_outside = std::min(nearest_outside, space.dist(x, p));
    }
    row[i] = nearest_outside - 1;
  }
  return row;
}

std::vector<std::vector<int>> containment_radii(const FiniteMetricSpace& space, const Cover& cover) {
  std::vector<std::vector<int>> table(space.size());
  for (PointId x = 0; x < space.size(); ++x) table[x] = containment_row(space, cover, x);
  return table;
}

CoverStats cover_stats(const FiniteMetricSpace& space, const Cover& cover) {
  validate_cover(space, cover);
  CoverStats stats;
  stats.multiplicity = multiplicity(space, cover);
  stats.mesh = mesh(space, cover);
  stats.ball_lebesgue_per_point.resize(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    const std::vector<int> row = containment_row(space, cover, x);
    const int raw = *std::max_element(row.begin(), row.end());
    stats.ball_lebesgue_per_point[x] = std::min(raw, space.diameter());
  }
  const auto min_it =
      std::min_element(stats.ball_lebesgue_per_point.begin(), stats.ball_lebesgue_per_point.end());
  stats.ball_lebesgue_global = *min_it;
  stats.min_location = static_cast<PointId>(min_it - stats.ball_lebesgue_per_point.begin());
  return stats;
}

namespace {

// Bron-Kerbosch with pivoting over <= 64 vertices packed into a bitmask.
// Candidates and exclusions always follow ascending id order, so the clique
// list comes out deterministic; it is sorted lexicographically afterwards
// anyway to make the contract independent of the recursion shape.
class CliqueEnumerator {
 public:
  CliqueEnumerator(std::vector<std::uint64_t> adjacency, std::size_t vertex_count)
      : adj_(std::move(adjacency)), count_(vertex_count) {}

  std::vector<std::vector<PointId>> run() {
    const std::uint64_t all =
        count_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count_) - 1);
    expand(0, all, 0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  void expand(std::uint64_t clique, std::uint64_t candidates, std::uint64_t excluded) {
    if (candidates == 0 && excluded == 0) {
      std::vector<PointId> out;
      for (std::uint64_t rest = clique; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<PointId>(std::countr_zero(rest)));
      }
      found_.push_back(std::move(out));
      return;
    }
    // Pivot on the vertex covering the most candidates; ties fall to the
    // smallest id because the scan runs in ascending order.
    std::uint64_t best_mask = 0;
    int best_score = -1;
    for (std::uint64_t rest = candidates | excluded; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int score = std::popcount(candidates & adj_[u]);
      if (score > best_score) {
        best_score = score;
        best_mask = adj_[u];
      }
    }
    for (std::uint64_t rest = candidates & ~best_mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint64_t vbit = std::uint64_t{1} << v;
      expand(clique | vbit, candidates & adj_[v], excluded & adj_[v]);
      candidates &= ~vbit;
      excluded |= vbit;
    }
  }

  std::vector<std::uint64_t> adj_;
  std::size_t count_;
  std::vector<std::vector<PointId>> found_;
};

}  // namespace

std::vector<std::vector<PointId>> threshold_cliques(const FiniteMetricSpace& space, int lambda,
                                                    std::size_t oracle_budget) {
  if (lambda < 0) throw validation_error("lambda must be >= 0");
  oracle_budget = std::min<std::size_t>(oracle_budget, 64);
  if (space.size() > oracle_budget) {
    throw precondition_error("space has " + std::to_string(space.size()) +
                             " points, over the clique-oracle budget of " +
                             std::to_string(oracle_budget) +
                             "; use the ball-based Lebesgue surrogate instead");
  }
  std::vector<std::uint64_t> adjacency(space.size(), 0);
  for (PointId a = 0; a < space.size(); ++a) {
    for (PointId b = 0; b < space.size(); ++b) {
      if (a != b && space.dist(a, b) <= lambda) adjacency[a] |= std::uint64_t{1} << b;
    }
  }
  return CliqueEnumerator(std::move(adjacency), space.size()).run();
}

LebesgueVerdict exact_lebesgue_at_least(const FiniteMetricSpace& space, const Cover& cover, int lambda,
                                        std::size_t oracle_budget) {
  validate_cover(space, cover);
  const auto cliques = threshold_cliques(space, lambda, oracle_budget);
  for (const auto& clique : cliques) {
    bool inside_some = false;
    for (const auto& elem : cover.elements) {
      if (std::includes(elem.begin(), elem.end(), clique.begin(), clique.end())) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return {false, clique};
  }
  return {true, {}};
}

namespace {

Cover finish_cover(const FiniteMetricSpace& space, std::vector<std::vector<PointId>> elements) {
  Cover cover{std::move(elements), {}};
  cover.basepoints = choose_basepoints(space, cover.elements);
  validate_cover(space, cover);
  return cover;
}

}  // namespace

Cover interval_cover(const FiniteMetricSpace& space, int ell) {
  if (space.kind() != SpaceKind::grid) {
    throw validation_error("interval_cover needs a grid space");
  }
  if (ell < 1) throw validation_error("interval width must be >= 1");
  const std::vector<int>& dims = space.grid_dims();

  // Per axis: the [start, start + 4*ell - 1] coordinate blocks, clipped.
  std::vector<std::vector<std::pair<int, int>>> axis_blocks(dims.size());
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    for (int start = 0; start < dims[axis]; start += 2 * ell) {
      axis_blocks[axis].push_back({start, std::min(start + 4 * ell - 1, dims[axis] - 1)});
    }
  }

  // Odometer over one block choice per axis, in lexicographic order.
  std::vector<std::size_t> pick(dims.size(), 0);
  std::vector<std::vector<PointId>> elements;
  bool done = false;
  while (!done) {
    std::vector<PointId> elem;
    for (PointId p = 0; p < space.size(); ++p) {
      const std::vector<int> coords = space.grid_coords(p);
      bool inside = true;
      for (std::size_t axis = 0; axis < dims.size(); ++axis) {
        const auto [lo, hi] = axis_blocks[axis][pick[axis]];
        if (coords[axis] < lo || coords[axis] > hi) {
          inside = false;
          break;
        }
      }
      if (inside) elem.push_back(p);
    }
    if (!elem.empty()) elements.push_back(std::move(elem));

    done = true;
    for (std::size_t axis = dims.size(); axis-- > 0;) {
      if (++pick[axis] < axis_blocks[axis].size()) {
        done = false;
        break;
      }
      pick[axis] = 0;
    }
  }
  return finish_cover(space, std::move(elements));
}

Cover tree_annuli_cover(const FiniteMetricSpace& space, int ell) {
  if (space.kind() != SpaceKind::tree) {
    throw validation_error("tree_annuli_cover needs a tree space");
  }
  if (ell < 1) throw validation_error("band width must be >= 1");

  // Depth below the root equals distance from point 0 in a tree space.
  std::vector<int> depth(space.size());
  for (PointId v = 0; v < space.size(); ++v) depth[v] = space.dist(0, v);

  std::vector<std::vector<PointId>> elements;
  for (const int offset : {0, ell}) {
    // Group points by band, keyed so bands come out in ascending order.
    std::map<int, std::vector<PointId>> bands;
    for (PointId v = 0; v < space.size(); ++v) {
      bands[(depth[v] - offset + 2 * ell) / (2 * ell)].push_back(v);
    }
    for (const auto& [band, members] : bands) {
      // Split the band into connected components, seeded in ascending order.
      std::vector<bool> in_band(space.size(), false);
      for (PointId v : members) in_band[v] = true;
      std::vector<bool> seen(space.size(), false);
      for (PointId seed : members) {
        if (seen[seed]) continue;
        std::vector<PointId> component;
        std::vector<PointId> stack{seed};
        seen[seed] = true;
        while (!stack.empty()) {
          const PointId v = stack.back();
          stack.pop_back();
          component.push_back(v);
          for (PointId w : space.neighbors(v)) {
            if (in_band[w] && !seen[w]) {
              seen[w] = true;
              stack.push_back(w);
            }
          }
        }
        std::sort(component.begin(), component.end());
        elements.push_back(std::move(component));
      }
    }
  }
  // The two families coincide on shallow trees; keep the first copy.
  std::vector<std::vector<PointId>> unique_elements;
  for (auto& elem : elements) {
    if (std::find(unique_elements.begin(), unique_elements.end(), elem) == unique_elements.end()) {
      unique_elements.push_back(std::move(elem));
    }
  }
  return finish_cover(space, std::move(unique_elements));
}

Cover greedy_net_cover(const FiniteMetricSpace& space, int radius) {
  if (radius < 1) throw validation_error("net radius must be >= 1");
  std::vector<PointId> centers;
  for (PointId p = 0; p < space.size(); ++p) {
    bool separated = true;
    for (PointId c : centers) {
      if (space.dist(p, c) <= radius) {
        separated = false;
        break;
      }
    }
    if (separated) centers.push_back(p);
  }
  std::vector<std::vector<PointId>> elements;
  elements.reserve(centers.size());
  for (PointId c : centers) elements.push_back(space.ball(c, 2 * radius));
  return finish_cover(space, std::move(elements));
}

std::vector<PointId> choose_basepoints(const FiniteMetricSpace& space,
                                       const std::vector<std::vector<PointId>>& elements) {
  std::vector<PointId> basepoints;
  basepoints.reserve(elements.size());
  for (const auto& elem : elements) {
    if (elem.empty()) throw validation_error("cannot pick a basepoint of an empty element");
    PointId best = elem.front();
    int best_radius = kUnboundedRadius;
    for (PointId candidate : elem) {
      int radius = 0;
      for (PointId other : elem) radius = std::max(radius, space.dist(candidate, other));
      if (radius < best_radius) {  // strict: earlier (smaller) ids win ties
        best_radius = radius;
        best = candidate;
      }
    }
    basepoints.push_back(best);
  }
  return basepoints;
}

}  // namespace propa
