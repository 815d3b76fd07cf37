#pragma once

#include <optional>
#include <vector>

#include "propa/covers.hpp"
#include "propa/l1vector.hpp"
#include "propa/rational.hpp"
#include "propa/spaces.hpp"

namespace propa {

// Scale n and displacement bound R for a witness run. Bound auditing
// additionally requires R < n.
struct WitnessParams {
  int n = 1;
  int R = 0;
};

// S_x(k): the ids of cover elements containing the whole closed ball
// B(x, k). Decreasing in k; may be empty (emptiness is the caller's data).
std::vector<ElementId> s_set(const FiniteMetricSpace& space, const Cover& cover, PointId x, int k);

// eta_x at scale n: the average over k in [n+1, 2n] of the uniform measures
// on S_x(k); an exact probability vector over element ids. Throws
// precondition_error naming x, k and the point's ball radius when some
// S_x(k) in the range is empty.
L1Vector eta(const FiniteMetricSpace& space, const Cover& cover, int n, PointId x);

// zeta_x = eta_x pushed forward along basepoints (the mass of element i
// moves to basepoints[i]; collisions merge additively): an exact probability
// vector over point ids, supported inside B(x, mesh).
L1Vector zeta(const FiniteMetricSpace& space, const Cover& cover, int n, PointId x);

// The three inclusions tying the S-sets of two nearby points together:
//   S_x(k+R)  ⊆  S_x(k) ∩ S_y(k)  ⊆  S_x(k) ∪ S_y(k)  ⊆  S_x(k-R).
// All three must hold whenever d(x, y) <= R; a false field is a bug surfaced
// by property tests, not an expected outcome.
struct NestingReport {
  bool deep_inside_intersection = false;
  bool intersection_inside_union = false;
  bool union_inside_wide = false;
  bool all_hold() const {
    return deep_inside_intersection && intersection_inside_union && union_inside_wide;
  }
};

NestingReport nesting_check(const FiniteMetricSpace& space, const Cover& cover, PointId x, PointId y,
                            int k, int R);

// Everything the proof chain claims about one pair at distance <= R:
//   zeta_dist <= eta_dist <= rhs_chain <= rhs_final (+ float tolerance),
// where rhs_chain = (2/n) * sum_{k=n+1}^{2n} (1 - |S_x(k+R)|/|S_x(k-R)|)
// and rhs_final = 2 * (1 - m^(-2R/n)). The chain is anchored at x, so the
// audit of (x, y) and of (y, x) may produce different rhs_chain values; both
// are valid upper bounds.
struct PairAudit {
  PointId x = 0;
  PointId y = 0;
  Rational eta_dist;
  Rational zeta_dist;
  Rational rhs_chain;
  double rhs_final = 0.0;
  bool nesting_ok = false;  // the three inclusions, at every k in [n+1, 2n]
};

// Absolute tolerance granted to the floating-point side of comparisons
// against rhs_final; every other comparison is exact.
inline constexpr double kBoundTolerance = 1e-9;

PairAudit pair_audit(const FiniteMetricSpace& space, const Cover& cover, WitnessParams params,
                     PointId x, PointId y);

struct WitnessReport {
  WitnessParams params;
  int multiplicity = 0;
  int mesh = 0;
  int ball_lebesgue_global = 0;  // clamped per-point minimum, as in cover_stats
  bool bound_audited = true;     // false in construction-only mode
  Rational measured_sup_eta;     // sup of eta distances over pairs at distance <= R
  Rational measured_sup_zeta;    // sup of zeta distances over the same pairs
  double bound_final = 0.0;      // 2 * (1 - m^(-2R/n))
  int support_radius = 0;        // max over x of max distance from x to supp zeta_x
  PointId worst_x = 0;           // pair attaining measured_sup_zeta,
  PointId worst_y = 0;           //   lexicographically first among attainers
  Rational worst_eta_dist;
  Rational worst_zeta_dist;
  std::optional<Rational> worst_chain;  // rhs_chain at the worst pair (bound mode)
  bool nesting_ok = true;               // all pairs, all levels (bound mode)
  bool integer_scaling_ok = true;       // m! * n * zeta is integer-valued everywhere
};

// Runs the construction at every point and audits every pair at distance
// <= R. In bound mode (audit_bound = true) each pair's inequality chain is
// checked exactly and the precondition is a per-point ball radius >= 2n + R
// everywhere; construction-only mode needs just >= 2n and skips the chain.
WitnessReport witness_report(const FiniteMetricSpace& space, const Cover& cover,
                             WitnessParams params, bool audit_bound = true);

// True iff m! * n * zeta_x is integer-valued at every point (exact check).
bool integer_scaling_check(const FiniteMetricSpace& space, const Cover& cover, int n);

// 2 * (1 - m^(-2R/n)), the closed-form bound on zeta variation at
// displacement R. The one deliberately floating-point quantity here.
double theoretical_bound(int multiplicity, int R, int n);

}  // namespace propa
