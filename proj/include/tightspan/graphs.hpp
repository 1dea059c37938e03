#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightspan/metric.hpp"

namespace tightspan {

/// Finite simple undirected graph.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;

  /// throws InvalidInput on loops, duplicate or out-of-range edges
  void validate() const;
  std::vector<std::vector<int>> adjacency() const;
};

struct GraphMetricResult {
  FinMetric metric;
  bool discretely_geodesic = false;  // true by construction for connected graphs
};

/// All-pairs BFS metric of a connected graph. Throws Disconnected otherwise.
GraphMetricResult graph_metric(const Graph& g);

/// Integer metric admitting a unit-step chain between every pair:
/// for all x,y with d(x,y) >= 2 some v has d(x,v) = 1 and d(v,y) = d(x,y)-1.
bool is_discretely_geodesic(const FinMetric& m);

struct StabilityWitness {
  PointId x = -1, y = -1, y_prime = -1;
  PointId v = -1;  // interval point with no partner within beta
};

struct StabilityReport {
  int beta_checked = 0;
  bool holds = false;
  std::optional<StabilityWitness> witness;
};

/// Restricts stability checks on truncated balls to triples whose intervals
/// provably stay in the interior: every interval point at distance
/// <= radius - d(x,y) from the center.
struct InteriorFilter {
  PointId center = 0;
  long radius = 0;
};

/// Exhaustive check of beta-stable intervals: for every triple x,y,y' with
/// d(y,y') = 1 and every v in I(x,y), some v' in I(x,y') has d(v,v') <= beta.
/// Ordered triples cover both Hausdorff directions.
StabilityReport check_stable_intervals(const FinMetric& m, int beta,
                                       const std::optional<InteriorFilter>& interior = {});

/// Least beta for which check_stable_intervals holds; at most the diameter.
int min_beta(const FinMetric& m, const std::optional<InteriorFilter>& interior = {});

struct ConeTypeTable {
  PointId apex = 0;
  int beta = 0;
  std::vector<std::vector<PointId>> cones;  // distinct cones C(x,v), sorted
  int f_class_count = 0;                    // distinct F_xv on B(v,beta)
  bool lemma_checked = false;  // F-class equality => cone equality was verified
};

/// Distinct cones at an apex together with the Cannon-style F-classes on
/// B(v,beta). When the space is discretely geodesic with beta-stable
/// intervals, verifies that equal F-classes give equal cones.
ConeTypeTable cone_types(const FinMetric& m, PointId v, int beta);

/// Least delta satisfying the four-point condition
/// d(w,x) + d(y,z) <= max{d(w,y) + d(x,z), d(x,y) + d(w,z)} + delta
/// over all ordered quadruples. Exact, O(n^4).
Rat delta_hyperbolicity(const FinMetric& m);

/// A point v in I(x,y) with d(z,v) <= beta * 2 (x|y)_z, found by walking a
/// discrete geodesic from z towards y and re-anchoring via interval
/// stability. Requires beta-stable intervals (throws otherwise).
PointId interval_point_near(const FinMetric& m, PointId x, PointId y, PointId z, int beta);

/// A generated example space: metric, optionally the generating graph, and
/// ball metadata for truncated families.
struct GeneratedSpace {
  std::string name;
  FinMetric metric;
  std::optional<Graph> graph;
  std::optional<PointId> center;
  std::optional<long> radius;
};

/// Families: path:m, cycle:m, complete:m, hypercube:n, chained_cubes:N,
/// zn_ball:n,R[,l1|linf], free_ball:rank,R. Sizes above `budget` vertices
/// are refused.
GeneratedSpace generate(const std::string& family, const std::vector<long>& params,
                        long long budget = 4096);

/// Parses "family:p1,p2,..." and calls generate.
GeneratedSpace generate_spec(const std::string& spec, long long budget = 4096);

}  // namespace tightspan
