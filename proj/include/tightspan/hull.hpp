#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightspan/metric.hpp"

namespace tightspan {

/// Stopping rule for the q-iteration inside p_map.
struct PMapLimits {
  int max_iter = 64;
  Rat residual_cap = dyadic(40);  // 2^-40
};

/// Outcome of the canonical retraction p applied to one function.
struct PMapReport {
  MetricFunction result;       // extremal, <= input pointwise
  int iterations = 0;          // number of q-steps that changed the iterate
  bool converged_exactly = false;
  Rat residual = 0;            // ||q(g) - g||_inf at stop; 0 when exact
};

/// f*(x) = max_z(d(x,z) - f(z)). f* <= f, with equality iff f is extremal.
MetricFunction star(const FinMetric& m, const MetricFunction& f);

/// q(f) = (f + f*) / 2. Stays in Delta(X), q(f) <= f, and q is 1-Lipschitz.
MetricFunction q_step(const FinMetric& m, const MetricFunction& f);

/// Dress's retraction p: iterates q until an exact fixed point, or until the
/// residual drops below limits.residual_cap or max_iter is reached, in which
/// case the iterate is finished off by extremalize_greedy. The result is
/// always extremal and <= f; converged_exactly records whether the q-limit
/// itself was reached.
PMapReport p_map(const FinMetric& m, const MetricFunction& f, const PMapLimits& limits = {});

/// Lowers each coordinate once, in the given order, to the least value
/// admissible in Delta(X) (the loop constraint keeps values >= 0). A single
/// pass yields an extremal function: lowering a later coordinate cannot break
/// tightness created at an earlier one. Deterministic given the order;
/// an empty order means ascending point ids.
MetricFunction extremalize_greedy(const FinMetric& m, const MetricFunction& f,
                                  const std::vector<PointId>& order = {});

/// gamma_xy(t) = p((1-t) d_x + t d_y): the conical geodesic bicombing on E(X).
PMapReport bicombing(const FinMetric& m, PointId x, PointId y, const Rat& t,
                     const PMapLimits& limits = {});

/// Rounds an extremal f on an integer-valued space to an extremal function
/// with values in (1/m)Z at sup-distance <= 1/(2m): start from the largest
/// (1/m)Z-valued minorant of f + 1/(2m), then lower uncovered coordinates in
/// ascending order.
MetricFunction round_extremal(const FinMetric& m, const MetricFunction& f, long grid_m);

/// Extends a 1-Lipschitz map A -> Delta1(X) over all of B by
/// fbar_b(x) = min_{a in A}(f_a(x) + d_B(a,b)). Returns one function per
/// point of B, restricting to the input on A.
std::vector<MetricFunction> lipschitz_extend(const FinMetric& x_space, const FinMetric& b_space,
                                             const std::vector<PointId>& a_ids,
                                             const std::vector<MetricFunction>& f_on_a);

/// h(f) = p(inf-extension of f): extends an extremal function on the
/// subspace X (given by x_ids into X') to an extremal function on X'.
/// The distance submatrix of X' over x_ids must equal X's matrix.
MetricFunction extend_extremal(const FinMetric& x_space, const FinMetric& xp_space,
                               const std::vector<PointId>& x_ids, const MetricFunction& f,
                               const PMapLimits& limits = {});

/// Result of the restriction-isometry hypothesis check of a subset X of Y.
struct RestrictionReport {
  bool hypothesis_holds = false;  // every cone C(x,y) of Y meets X
  std::optional<std::pair<PointId, PointId>> cone_witness;  // pair with empty trace
  // Filled only when the hypothesis holds: whether restriction gives a
  // bijective isometry between the hull vertex sets, with a description of
  // the first mismatch otherwise.
  bool vertex_bijection = false;
  std::string mismatch;
};

/// Checks the cone hypothesis for X ⊆ Y and, when it holds, verifies on the
/// computed hulls that f -> f|_X maps vertices bijectively and isometrically.
/// Requires an integer-valued metric for the hull computation.
RestrictionReport restrict_hull_check(const FinMetric& y_space,
                                      const std::vector<PointId>& x_ids,
                                      long long grid_budget = 1000000000LL);

}  // namespace tightspan
