#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tightspan/equality.hpp"
#include "tightspan/metric.hpp"

namespace tightspan {

/// Enumeration limits for the half-integer vertex grid.
struct EnumOptions {
  long long budget = 1000000000LL;  // cap on prod(2 ecc(x) + 1)
  int threads = 1;
};

/// All rank-0 extremal functions of an integer-valued space: the vertices of
/// the polyhedral structure on E(X). Exhaustive over the half-integer grid
/// 0 <= f(x) <= ecc(x); complete, duplicate-free, ordered lexicographically.
std::vector<MetricFunction> enumerate_vertices(const FinMetric& m, const EnumOptions& opt = {});

/// One cell P(A) of the complex.
struct Cell {
  EqualityGraph admissible;      // A, with ∪A = X
  std::vector<int> vertex_ids;   // hull vertices v with A ⊆ A(v), sorted
  int dim = 0;                   // rank of A
  MetricFunction representative; // average of the vertex functions; A(rep) = A
};

/// The polyhedral structure of E(X) for a finite integer-valued space.
struct HullComplex {
  FinMetric metric;
  std::vector<MetricFunction> vertices;           // rank-0 extremal functions
  std::vector<EqualityGraph> vertex_graphs;       // A(v) per vertex
  std::vector<Cell> cells;                        // sorted by (dim, A)
  std::vector<std::pair<int, int>> face_pairs;    // (face cell, parent cell), proper
  std::vector<std::string> cell_class;            // isometry class labels, per cell

  int dim_of_vertex_cell(int vertex_id) const;
  /// index of the cell with the given admissible set, or -1
  int find_cell(const EqualityGraph& a) const;
};

/// Builds the full complex: enumerates vertices, closes their equality graphs
/// under pairwise intersection (keeping admissible sets), forms cells with
/// vertex sets, dimensions and representatives, and derives the face poset
/// from reverse inclusion. Verifies that cells cover all vertices and that
/// pairwise cell intersections are again cells.
HullComplex build_complex(const FinMetric& m, const EnumOptions& opt = {});

/// The inequality system cutting out I_f(P(A)) in l_inf^n per the
/// even-component coordinates: sigma t_k >= cbar[k][sigma] and
/// sigma t_k + tau t_l >= cpair[(k,l)][sigma][tau], 2n^2 relations in total.
struct PolytopeSystem {
  int n = 0;
  std::vector<PointId> reference_points;  // x_k, least id of each even component
  std::vector<Rat> reference_values;      // f(x_k) for the representative f
  // index 0 = sigma(+1), 1 = sigma(-1)
  std::vector<std::array<Rat, 2>> cbar;
  // keyed by (k,l), k < l; [sigma][tau]
  std::map<std::pair<int, int>, std::array<std::array<Rat, 2>, 2>> cpair;

  bool operator==(const PolytopeSystem&) const;

  /// flattened constants in a fixed order, the comparison key
  std::vector<Rat> flatten() const;
  /// the system after the signed coordinate permutation t'_k = sign[k] * t_{perm[k]}
  PolytopeSystem transformed(const std::vector<int>& perm, const std::vector<int>& sign) const;
  /// coordinates I_f(g) = (g(x_k) - f(x_k))_k of a hull function
  std::vector<Rat> coords(const MetricFunction& g) const;
};

/// Computes the polytope system of a cell of dimension >= 1 and verifies that
/// all cell vertices satisfy it with the tight/slack pattern implied by their
/// equality graphs. All constants are strictly negative.
PolytopeSystem cell_system(const HullComplex& complex, int cell_id);

/// Assigns isometry-class labels per cell: the canonical form of a cell is
/// the lexicographically least flattened PolytopeSystem over all signed
/// coordinate permutations; equal canonical forms get equal labels.
/// Labels are "d<dim>.c<index>" with indices ordered by canonical form.
/// Returns the number of classes per dimension.
std::map<int, int> isometry_classes(HullComplex& complex);

/// First barycentric subdivision: one vertex per cell (the barycenter of its
/// vertex set) and one simplex per strictly ascending chain of cells.
struct Subdivision {
  std::vector<MetricFunction> barycenters;    // indexed by cell id
  std::vector<std::vector<int>> simplices;    // chains of cell ids, ascending by inclusion
  std::vector<char> maximal;                  // per simplex
  int maximal_count() const;
};

Subdivision barycentric_subdivision(const HullComplex& complex);

int hull_dimension(const HullComplex& complex);

}  // namespace tightspan
