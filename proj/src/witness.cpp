#include "propa/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace propa {

namespace {

// Largest k with S_x(k) nonempty, straight from a containment row. For a
// valid cover this is >= 0, and it is kUnboundedRadius when some element is
// the whole space. Unlike the reported per-point statistic this value is
// never clamped to the diameter: deep levels k > diameter are still
// meaningful when an element has nothing outside it.
int row_ball_radius(const std::vector<int>& row) {
  return *std::max_element(row.begin(), row.end());
}

std::vector<ElementId> s_from_row(const std::vector<int>& row, int k) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] >= k) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

std::size_t s_size_from_row(const std::vector<int>& row, int k) {
  std::size_t count = 0;
  for (int reach : row) count += reach >= k;
  return count;
}

void require_depth(const std::vector<int>& row, PointId x, int needed, int n, int R) {
  const int have = row_ball_radius(row);
  if (have < needed) {
    throw precondition_error(
        "empty S_x(k) at point " + std::to_string(x) + ": its ball radius is " +
        std::to_string(have) + " but k up to " + std::to_string(needed) + " is needed for n = " +
        std::to_string(n) + ", R = " + std::to_string(R) +
        "; increase cover overlap or reduce n");
  }
}

L1Vector eta_from_row(const std::vector<int>& row, int n, PointId x) {
  std::vector<Rational> acc(row.size(), Rational(0));
  for (int k = n + 1; k <= 2 * n; ++k) {
    const std::size_t size = s_size_from_row(row, k);
    if (size == 0) {
      throw precondition_error(
          "empty S_x(" + std::to_string(k) + ") at point " + std::to_string(x) +
          ": its ball radius is " + std::to_string(row_ball_radius(row)) +
          "; increase cover overlap or reduce n");
    }
    const Rational share(1, static_cast<long>(n) * static_cast<long>(size));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= k) acc[i] += share;
    }
  }
  std::vector<L1Vector::Entry> entries;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (acc[i] != 0) entries.emplace_back(static_cast<std::uint32_t>(i), std::move(acc[i]));
  }
  return L1Vector::from_entries(std::move(entries));
}

L1Vector push_to_basepoints(const L1Vector& eta_vec, const Cover& cover) {
  std::vector<L1Vector::Entry> entries;
  entries.reserve(eta_vec.entries().size());
  for (const auto& [element, value] : eta_vec.entries()) {
    entries.emplace_back(cover.basepoints[element], value);
  }
  return L1Vector::from_entries(std::move(entries));  // merges basepoint collisions
}

void check_params(WitnessParams params) {
  if (params.n < 1) throw validation_error("scale n must be >= 1");
  if (params.R < 0) throw validation_error("displacement bound R must be >= 0");
}

// The averaged-ratio bound (2/n) * sum_{k=n+1}^{2n} (1 - |S_x(k+R)|/|S_x(k-R)|),
// exact. Anchored at the row of x.
Rational chain_bound_from_row(const std::vector<int>& row, int n, int R) {
  Rational sum(0);
  for (int k = n + 1; k <= 2 * n; ++k) {
    const std::size_t deep = s_size_from_row(row, k + R);
    const std::size_t wide = s_size_from_row(row, k - R);
    sum += 1 - Rational(deep, wide);
  }
  return Rational(2, n) * sum;
}

bool nesting_holds_for_rows(const std::vector<int>& row_x, const std::vector<int>& row_y, int n,
                            int R) {
  for (int k = n + 1; k <= 2 * n; ++k) {
    const auto deep = s_from_row(row_x, k + R);
    const auto sx = s_from_row(row_x, k);
    const auto sy = s_from_row(row_y, k);
    const auto wide = s_from_row(row_x, k - R);
    std::vector<ElementId> inter;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
    std::vector<ElementId> uni;
    std::set_union(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(uni));
    if (!std::includes(inter.begin(), inter.end(), deep.begin(), deep.end())) return false;
    if (!std::includes(uni.begin(), uni.end(), inter.begin(), inter.end())) return false;
    if (!std::includes(wide.begin(), wide.end(), uni.begin(), uni.end())) return false;
  }
  return true;
}

}  // namespace

std::vector<ElementId> s_set(const FiniteMetricSpace& space, const Cover& cover, PointId x, int k) {
  validate_cover(space, cover);
  if (k < 0) throw validation_error("ball level k must be >= 0");
  return s_from_row(containment_row(space, cover, x), k);
}

L1Vector eta(const FiniteMetricSpace& space, const Cover& cover, int n, PointId x) {
  validate_cover(space, cover);
  if (n < 1) throw validation_error("scale n must be >= 1");
  return eta_from_row(containment_row(space, cover, x), n, x);
}

L1Vector zeta(const FiniteMetricSpace& space, const Cover& cover, int n, PointId x) {
  validate_cover(space, cover);
  if (n < 1) throw validation_error("scale n must be >= 1");
  return push_to_basepoints(eta_from_row(containment_row(space, cover, x), n, x), cover);
}

NestingReport nesting_check(const FiniteMetricSpace& space, const Cover& cover, PointId x, PointId y,
                            int k, int R) {
  validate_cover(space, cover);
  if (R < 0) throw validation_error("displacement bound R must be >= 0");
  if (k - R < 0) throw precondition_error("nesting check needs k - R >= 0");
  if (space.dist(x, y) > R) {
    throw precondition_error("nesting check needs d(x, y) <= R, got d = " +
                             std::to_string(space.dist(x, y)));
  }
  const auto row_x = containment_row(space, cover, x);
  const auto row_y = containment_row(space, cover, y);
  const auto deep = s_from_row(row_x, k + R);
  const auto sx = s_from_row(row_x, k);
  const auto sy = s_from_row(row_y, k);
  const auto wide = s_from_row(row_x, k - R);
  std::vector<ElementId> inter;
  std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
  std::vector<ElementId> uni;
  std::set_union(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(uni));
  NestingReport report;
  report.deep_inside_intersection =
      std::includes(inter.begin(), inter.end(), deep.begin(), deep.end());
  report.intersection_inside_union =
      std::includes(uni.begin(), uni.end(), inter.begin(), inter.end());
  report.union_inside_wide = std::includes(wide.begin(), wide.end(), uni.begin(), uni.end());
  return report;
}

PairAudit pair_audit(const FiniteMetricSpace& space, const Cover& cover, WitnessParams params,
                     PointId x, PointId y) {
  validate_cover(space, cover);
  check_params(params);
  if (params.R >= params.n) {
    throw precondition_error("bound audit needs R < n (got n = " + std::to_string(params.n) +
                             ", R = " + std::to_string(params.R) + ")");
  }
  if (space.dist(x, y) > params.R) {
    throw precondition_error("pair audit needs d(x, y) <= R, got d = " +
                             std::to_string(space.dist(x, y)));
  }
  const auto row_x = containment_row(space, cover, x);
  const auto row_y = containment_row(space, cover, y);
  require_depth(row_x, x, 2 * params.n + params.R, params.n, params.R);
  require_depth(row_y, y, 2 * params.n + params.R, params.n, params.R);

  PairAudit audit;
  audit.x = x;
  audit.y = y;
  const L1Vector eta_x = eta_from_row(row_x, params.n, x);
  const L1Vector eta_y = eta_from_row(row_y, params.n, y);
  audit.eta_dist = l1_distance(eta_x, eta_y);
  audit.zeta_dist = l1_distance(push_to_basepoints(eta_x, cover), push_to_basepoints(eta_y, cover));
  audit.rhs_chain = chain_bound_from_row(row_x, params.n, params.R);
  audit.rhs_final = theoretical_bound(multiplicity(space, cover), params.R, params.n);
  audit.nesting_ok = nesting_holds_for_rows(row_x, row_y, params.n, params.R);

  if (audit.zeta_dist > audit.eta_dist || audit.eta_dist > audit.rhs_chain ||
      to_double(audit.rhs_chain) > audit.rhs_final + kBoundTolerance || !audit.nesting_ok) {
    throw std::logic_error("pair audit inequality chain violated at pair (" + std::to_string(x) +
                           ", " + std::to_string(y) + "); this is a bug");
  }
  return audit;
}

WitnessReport witness_report(const FiniteMetricSpace& space, const Cover& cover,
                             WitnessParams params, bool audit_bound) {
  validate_cover(space, cover);
  check_params(params);
  if (audit_bound && params.R >= params.n) {
    throw precondition_error("bound audit needs R < n (got n = " + std::to_string(params.n) +
                             ", R = " + std::to_string(params.R) +
                             "); pass construction-only mode to skip the audit");
  }

  WitnessReport report;
  report.params = params;
  report.bound_audited = audit_bound;
  report.multiplicity = multiplicity(space, cover);
  report.mesh = mesh(space, cover);
  report.bound_final = theoretical_bound(report.multiplicity, params.R, params.n);

  // One containment row per point; everything below reads only these.
  std::vector<std::vector<int>> rows(space.size());
  int clamped_min = kUnboundedRadius;
  const int needed = audit_bound ? 2 * params.n + params.R : 2 * params.n;
  for (PointId p = 0; p < space.size(); ++p) {
    rows[p] = containment_row(space, cover, p);
    require_depth(rows[p], p, needed, params.n, params.R);
    clamped_min = std::min(clamped_min, std::min(row_ball_radius(rows[p]), space.diameter()));
  }
  report.ball_lebesgue_global = clamped_min;

  const BigInt scale = factorial(static_cast<unsigned>(report.multiplicity)) * params.n;
  std::vector<L1Vector> zetas(space.size());
  std::vector<L1Vector> etas(space.size());
  for (PointId p = 0; p < space.size(); ++p) {
    etas[p] = eta_from_row(rows[p], params.n, p);
    zetas[p] = push_to_basepoints(etas[p], cover);
    for (const auto& [point, value] : zetas[p].entries()) {
      report.support_radius = std::max(report.support_radius, space.dist(p, point));
      if (!is_integral(value * scale)) report.integer_scaling_ok = false;
    }
  }

  bool have_worst = false;
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = x; y < space.size(); ++y) {
      if (space.dist(x, y) > params.R) continue;
      const Rational eta_dist = l1_distance(etas[x], etas[y]);
      const Rational zeta_dist = l1_distance(zetas[x], zetas[y]);
      report.measured_sup_eta = std::max(report.measured_sup_eta, eta_dist);
      if (audit_bound) {
        const Rational chain = chain_bound_from_row(rows[x], params.n, params.R);
        if (!nesting_holds_for_rows(rows[x], rows[y], params.n, params.R)) {
          report.nesting_ok = false;
        }
        if (zeta_dist > eta_dist || eta_dist > chain ||
            to_double(chain) > report.bound_final + kBoundTolerance) {
          throw std::logic_error("witness inequality chain violated at pair (" +
                                 std::to_string(x) + ", " + std::to_string(y) +
                                 "); this is a bug");
        }
      }
      // Lexicographically first attainer of the zeta supremum (x, then y).
      if (!have_worst || zeta_dist > report.measured_sup_zeta) {
        have_worst = true;
        report.measured_sup_zeta = zeta_dist;
        report.worst_x = x;
        report.worst_y = y;
        report.worst_eta_dist = eta_dist;
        report.worst_zeta_dist = zeta_dist;
      }
    }
  }
  if (audit_bound) {
    report.worst_chain = chain_bound_from_row(rows[report.worst_x], params.n, params.R);
  }
  return report;
}

bool integer_scaling_check(const FiniteMetricSpace& space, const Cover& cover, int n) {
  validate_cover(space, cover);
  if (n < 1) throw validation_error("scale n must be >= 1");
  const BigInt scale = factorial(static_cast<unsigned>(multiplicity(space, cover))) * n;
  for (PointId p = 0; p < space.size(); ++p) {
    const L1Vector zeta_p = push_to_basepoints(eta_from_row(containment_row(space, cover, p), n, p), cover);
    for (const auto& [point, value] : zeta_p.entries()) {
      if (!is_integral(value * scale)) return false;
    }
  }
  return true;
}

double theoretical_bound(int multiplicity, int R, int n) {
  if (multiplicity < 1) throw validation_error("multiplicity must be >= 1");
  if (R < 0) throw validation_error("displacement bound R must be >= 0");
  if (n < 1) throw validation_error("scale n must be >= 1");
  return 2.0 * (1.0 - std::pow(static_cast<double>(multiplicity),
                               -2.0 * static_cast<double>(R) / static_cast<double>(n)));
}

}  // namespace propa
