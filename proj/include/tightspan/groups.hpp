#pragma once

#include <vector>

#include "tightspan/complex.hpp"
#include "tightspan/metric.hpp"

namespace tightspan {

/// A distance-preserving permutation, stored as the image list x -> L[x].
using Isometry = std::vector<PointId>;

Isometry identity_isometry(int n);
Isometry compose(const Isometry& a, const Isometry& b);  // a after b
Isometry inverse(const Isometry& a);

/// All distance-preserving permutations of the space, found by backtracking
/// over distance-profile-compatible assignments. Sorted lexicographically.
std::vector<Isometry> isometry_group(const FinMetric& m);

bool is_isometry(const FinMetric& m, const Isometry& perm);

/// Whether the list forms a permutation group (identity, closure, inverses).
bool is_permutation_group(const std::vector<Isometry>& elements, int n);

/// The induced map on functions: (L f)(x) = f(L^{-1} x). Preserves Delta(X),
/// E(X) and the sup metric.
MetricFunction induced_map(const Isometry& perm, const MetricFunction& f);

struct CellOrbit {
  int dim = 0;
  int representative_cell = 0;  // least cell id in the orbit
  int size = 0;
  int stabilizer_order = 0;
};

struct ActionReport {
  int group_order = 0;
  std::vector<CellOrbit> cell_orbits;               // sorted by representative
  std::vector<std::pair<int, int>> simplex_orbits;  // (simplex dim, orbit count)
  bool simplicial_rigidity = false;
};

/// Verifies the group acts cellularly on the complex (every element maps each
/// admissible set to a cell's admissible set), computes cell orbits with
/// stabilizer orders, simplex orbit counts on the barycentric subdivision,
/// and checks that setwise-fixed subdivision simplices are pointwise fixed.
ActionReport act_on_complex(const HullComplex& complex, const std::vector<Isometry>& group);

/// An extremal function constant on every orbit of the subgroup, hence fixed
/// by all induced maps: a minimal element of Delta over the orbit-pair
/// function D(Lx, Ly) = max{d(x',y')}, lifted back to X. Deterministic via
/// greedy descent in orbit order.
MetricFunction fixed_point_function(const FinMetric& m, const std::vector<Isometry>& subgroup);

}  // namespace tightspan
