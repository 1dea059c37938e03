#pragma once

#include <compare>
#include <vector>

#include "tightspan/metric.hpp"

namespace tightspan {

/// Unordered point pair, stored with first <= second. Loops {x,x} allowed.
using PointPair = std::pair<PointId, PointId>;

inline PointPair make_pair_sorted(PointId a, PointId b) {
  return a <= b ? PointPair{a, b} : PointPair{b, a};
}

/// A(f): the set of unordered pairs {x,y} (loops included) with
/// f(x) + f(y) = d(x,y). Pairs are kept sorted, so graphs compare as sets.
struct EqualityGraph {
  std::vector<PointPair> pairs;

  bool operator==(const EqualityGraph&) const = default;
  auto operator<=>(const EqualityGraph&) const = default;

  bool contains(const PointPair& p) const;
  /// true iff every point of a space of size n is incident to some pair
  bool covers_all(int n_points) const;
  /// true iff every pair of this graph is a pair of g
  bool subset_of(const EqualityGraph& g) const;

  static EqualityGraph intersect(const EqualityGraph& a, const EqualityGraph& b);
};

/// Computes A(f). Requires f extremal (throws NotExtremal otherwise).
EqualityGraph equality_graph(const FinMetric& m, const MetricFunction& f);

/// A(f) for any function, no extremality requirement. Used internally and by
/// oracles; equality_graph is the checked public entry point.
EqualityGraph tight_pairs(const FinMetric& m, const MetricFunction& f);

struct ParityComponent {
  std::vector<PointId> points;  // sorted
  bool odd = false;             // contains an odd cycle (loops count)
  // bipartition for even components; side_pos contains the least point
  std::vector<PointId> side_pos;
  std::vector<PointId> side_neg;
};

/// Parity decomposition of the graph (X, A). rank = number of even components.
struct ParityPartition {
  std::vector<ParityComponent> components;  // ordered by least point
  int rank = 0;
};

/// Decomposes (X, A) into components and classifies each as odd or even
/// (bipartite). Requires the admissibility condition ∪A = X.
ParityPartition parity_analysis(const EqualityGraph& a, int n_points);

}  // namespace tightspan
