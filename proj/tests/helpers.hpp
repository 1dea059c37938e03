#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightspan/complex.hpp"
#include "tightspan/graphs.hpp"
#include "tightspan/metric.hpp"

namespace tightspan::testing {

FinMetric two_point(long d = 1);
FinMetric k3();
FinMetric five_point_example();
FinMetric six_point_example();
/// triple (1,1,-2),(1,-2,1),(-2,1,1) in the hexagonal plane plus its three
/// pairwise midpoints, with l_inf distances
FinMetric hexplane_six_point();

struct CorpusSpace {
  std::string name;
  FinMetric metric;
};

/// Named spaces shared by the property and acceptance suites. All are
/// integer-valued graph metrics of at most 8 points.
std::vector<CorpusSpace> corpus();

/// Deterministic samples from Delta(X): ecc/2 plus nonnegative rational noise,
/// with occasional extremal-plus-noise samples.
std::vector<MetricFunction> sample_delta(const FinMetric& m, int count, uint64_t seed);

/// Deterministic samples from Delta1(X): convex combinations of distance
/// functions.
std::vector<MetricFunction> sample_delta1(const FinMetric& m, int count, uint64_t seed);

/// Independent oracle: all extremal functions with values on the half-integer
/// grid 0 <= f(x) <= ecc(x), decided directly from the defining identity
/// f(x) = max_y(d(x,y) - f(y)). Exponential; use on tiny spaces only.
std::vector<MetricFunction> oracle_grid_extremals(const FinMetric& m);

/// Independent tight-system oracle for hull vertices: enumerates candidate
/// equality graphs with exactly |X| pairs whose components are all odd
/// unicyclic, solves each linear tight system, and keeps the solutions lying
/// in Delta(X). Produces the complete duplicate-free vertex set.
std::vector<MetricFunction> oracle_vertices(const FinMetric& m);

/// Independent closure oracle: equality-graph bitmasks of the oracle vertices
/// closed under pairwise intersection, keeping covering sets. Returns the
/// admissible sets in sorted order.
std::vector<std::vector<std::pair<PointId, PointId>>> oracle_admissible_closure(const FinMetric& m);

/// All free trees with the given vertex count, up to isomorphism.
std::vector<Graph> all_free_trees(int n);

}  // namespace tightspan::testing
