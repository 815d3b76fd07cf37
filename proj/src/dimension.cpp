#include "propa/dimension.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace propa {

namespace {

void check_query(DimQuery query) {
  if (query.lambda < 0) throw validation_error("lambda must be >= 0");
  if (query.mesh_cap < 0) throw validation_error("mesh cap must be >= 0");
  if (query.mesh_cap < query.lambda) {
    throw precondition_error("mesh cap " + std::to_string(query.mesh_cap) +
                             " is below lambda " + std::to_string(query.lambda) +
                             ": sets of diameter lambda cannot fit inside any element");
  }
}

bool inside_some_element(const std::vector<std::vector<PointId>>& elements,
                         const std::vector<PointId>& pts) {
  for (const auto& elem : elements) {
    if (std::includes(elem.begin(), elem.end(), pts.begin(), pts.end())) return true;
  }
  return false;
}

struct Candidate {
  Cover cover;
  int multiplicity = 0;
  int mesh = 0;
  bool surrogate = false;
};

}  // namespace

DimEstimate dim_upper(const FiniteMetricSpace& space, DimQuery query) {
  check_query(query);
  DimEstimate estimate;
  estimate.lambda = query.lambda;
  estimate.mesh_cap = query.mesh_cap;

  std::vector<Cover> candidates;
  const int max_scale = std::max(1, space.diameter());
  for (int r = 1; r <= max_scale; ++r) candidates.push_back(greedy_net_cover(space, r));
  if (space.kind() == SpaceKind::grid) {
    for (int ell = 1; ell <= max_scale; ++ell) candidates.push_back(interval_cover(space, ell));
  }
  if (space.kind() == SpaceKind::tree) {
    for (int ell = 1; ell <= max_scale; ++ell) candidates.push_back(tree_annuli_cover(space, ell));
  }

  // The maximal cliques depend only on (space, lambda); hoist them out of
  // the candidate loop. Over the oracle budget, fall back to the per-point
  // ball criterion, which lower-bounds the true Lebesgue number.
  std::optional<std::vector<std::vector<PointId>>> cliques;
  if (space.size() <= kDefaultCliqueOracleBudget) {
    cliques = threshold_cliques(space, query.lambda);
  }

  std::optional<Candidate> best;
  for (Cover& cover : candidates) {
    Candidate entry;
    entry.mesh = mesh(space, cover);
    if (entry.mesh > query.mesh_cap) continue;
    if (cliques) {
      bool lebesgue_ok = true;
      for (const auto& clique : *cliques) {
        if (!inside_some_element(cover.elements, clique)) {
          lebesgue_ok = false;
          break;
        }
      }
      if (!lebesgue_ok) continue;
      entry.surrogate = false;
    } else {
      if (cover_stats(space, cover).ball_lebesgue_global < query.lambda) continue;
      entry.surrogate = true;
    }
    entry.multiplicity = multiplicity(space, cover);
    entry.cover = std::move(cover);
    const bool wins =
        !best || entry.multiplicity < best->multiplicity ||
        (entry.multiplicity == best->multiplicity &&
         (entry.mesh < best->mesh ||
          (entry.mesh == best->mesh && entry.cover.elements < best->cover.elements)));
    if (wins) best = std::move(entry);
  }

  if (best) {
    estimate.upper = best->multiplicity - 1;
    estimate.surrogate = best->surrogate;
    estimate.witness_cover = std::move(best->cover);
  }
  return estimate;
}

namespace {

// Branch and bound over assignments of maximal cliques to element groups
// (each group's union is one cover element). Loads only grow as cliques
// join groups, so the running maximum load prunes soundly.
class PartitionSearch {
 public:
  PartitionSearch(const FiniteMetricSpace& space, std::vector<std::vector<PointId>> cliques,
                  int mesh_cap)
      : space_(space), cliques_(std::move(cliques)), mesh_cap_(mesh_cap) {}

  int run() {
    best_ = static_cast<int>(cliques_.size()) + 1;  // beaten by any real partition
    group_members_.clear();
    load_.assign(space_.size(), 0);
    nodes_ = 0;
    descend(0, 0);
    return best_;
  }

 private:
  int place(std::size_t group, const std::vector<PointId>& clique,
            std::vector<PointId>& added) {
    int max_touched = 0;
    for (PointId p : clique) {
      if (!group_members_[group][p]) {
        group_members_[group][p] = true;
        added.push_back(p);
        ++load_[p];
      }
      max_touched = std::max(max_touched, load_[p]);
    }
    return max_touched;
  }

  void unplace(std::size_t group, const std::vector<PointId>& added) {
    for (PointId p : added) {
      group_members_[group][p] = false;
      --load_[p];
    }
  }

  bool fits_mesh(std::size_t group, const std::vector<PointId>& clique) const {
    for (PointId p : clique) {
      for (PointId q = 0; q < space_.size(); ++q) {
        if (group_members_[group][q] && space_.dist(p, q) > mesh_cap_) return false;
      }
    }
    return true;
  }

  void descend(std::size_t next_clique, int current_max_load) {
    if (++nodes_ > kNodeBudget) {
      throw precondition_error("exhaustive dimension search exceeded its node budget");
    }
    if (current_max_load >= best_) return;  // cannot improve
    if (next_clique == cliques_.size()) {
      best_ = current_max_load;
      return;
    }
    const auto& clique = cliques_[next_clique];
    // Existing groups first, then exactly one fresh group: further fresh
    // groups would only relabel the same partition.
    for (std::size_t g = 0; g <= group_members_.size(); ++g) {
      const bool fresh = g == group_members_.size();
      if (fresh) {
        group_members_.emplace_back(space_.size(), false);
      } else if (!fits_mesh(g, clique)) {
        continue;
      }
      std::vector<PointId> added;
      const int new_max = std::max(current_max_load, place(g, clique, added));
      descend(next_clique + 1, new_max);
      unplace(g, added);
      if (fresh) {
        group_members_.pop_back();
        break;
      }
    }
  }

  static constexpr long kNodeBudget = 20'000'000;

  const FiniteMetricSpace& space_;
  std::vector<std::vector<PointId>> cliques_;
  int mesh_cap_;
  int best_ = 0;
  long nodes_ = 0;
  std::vector<std::vector<char>> group_members_;
  std::vector<int> load_;
};

}  // namespace

int dim_exact_tiny(const FiniteMetricSpace& space, DimQuery query) {
  check_query(query);
  if (space.size() > 10) {
    throw precondition_error("exhaustive dimension search is capped at 10 points, space has " +
                             std::to_string(space.size()));
  }
  // Every maximal clique of the threshold graph has diameter <= lambda
  // <= mesh_cap, so the all-separate partition is always admissible and the
  // search space is never empty.
  auto cliques = threshold_cliques(space, query.lambda);
  const int best = PartitionSearch(space, std::move(cliques), query.mesh_cap).run();
  return best - 1;
}

std::vector<BoundCurveRow> bound_curve(const FiniteMetricSpace& space,
                                       const std::vector<std::pair<int, Cover>>& family, int R) {
  std::vector<BoundCurveRow> rows;
  rows.reserve(family.size());
  for (const auto& [n, cover] : family) {
    const WitnessReport report = witness_report(space, cover, WitnessParams{n, R}, true);
    BoundCurveRow row;
    row.n = n;
    row.m = report.multiplicity;
    row.bound = report.bound_final;
    row.measured_sup_eta = report.measured_sup_eta;
    row.measured_sup_zeta = report.measured_sup_zeta;
    row.sup_pair_x = report.worst_x;
    row.sup_pair_y = report.worst_y;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace propa
