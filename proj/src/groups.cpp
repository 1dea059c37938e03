#include "tightspan/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tightspan {

Isometry identity_isometry(int n) {
  Isometry id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  Isometry out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Isometry inverse(const Isometry& a) {
  Isometry out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<PointId>(i);
  return out;
}

bool is_isometry(const FinMetric& m, const Isometry& perm) {
  if (static_cast<int>(perm.size()) != m.size()) return false;
  std::vector<char> hit(m.size(), 0);
  for (PointId x : perm) {
    if (x < 0 || x >= m.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (PointId x = 0; x < m.size(); ++x) {
    for (PointId y = x + 1; y < m.size(); ++y) {
      if (m.dist(perm[x], perm[y]) != m.dist(x, y)) return false;
    }
  }
  return true;
}

namespace {

void isometry_backtrack(const FinMetric& m, Isometry& image, std::vector<char>& used,
                        PointId next, std::vector<Isometry>& out) {
  const int n = m.size();
  if (next == n) {
    out.push_back(image);
    return;
  }
  for (PointId candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) continue;
    bool ok = true;
    for (PointId prev = 0; prev < next && ok; ++prev) {
      if (m.dist(image[prev], candidate) != m.dist(prev, next)) ok = false;
    }
    if (!ok) continue;
    image[next] = candidate;
    used[candidate] = 1;
    isometry_backtrack(m, image, used, next + 1, out);
    used[candidate] = 0;
  }
}

}  // namespace

std::vector<Isometry> isometry_group(const FinMetric& m) {
  std::vector<Isometry> out;
  Isometry image(m.size(), -1);
  std::vector<char> used(m.size(), 0);
  isometry_backtrack(m, image, used, 0, out);
  return out;  // backtracking emits in lexicographic order
}

bool is_permutation_group(const std::vector<Isometry>& elements, int n) {
  if (elements.empty()) return false;
  std::set<Isometry> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) return false;
  if (!set.count(identity_isometry(n))) return false;
  for (const auto& a : elements) {
    if (static_cast<int>(a.size()) != n) return false;
    if (!set.count(inverse(a))) return false;
    for (const auto& b : elements) {
      if (!set.count(compose(a, b))) return false;
    }
  }
  return true;
}

MetricFunction induced_map(const Isometry& perm, const MetricFunction& f) {
  Isometry inv = inverse(perm);
  MetricFunction out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = f[inv[x]];
  return out;
}

namespace {

EqualityGraph map_graph(const Isometry& perm, const EqualityGraph& a) {
  EqualityGraph out;
  out.pairs.reserve(a.pairs.size());
  for (const auto& [x, y] : a.pairs) out.pairs.push_back(make_pair_sorted(perm[x], perm[y]));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace

ActionReport act_on_complex(const HullComplex& complex, const std::vector<Isometry>& group) {
  const int n = complex.metric.size();
  if (!is_permutation_group(group, n)) {
    throw Error(Error::Kind::NotAGroup, "act_on_complex needs a permutation group");
  }
  for (const auto& g : group) {
    if (!is_isometry(complex.metric, g)) {
      throw Error(Error::Kind::NotAGroup, "group element is not an isometry");
    }
  }
  ActionReport rep;
  rep.group_order = static_cast<int>(group.size());

  const int n_cells = static_cast<int>(complex.cells.size());
  // cell_image[g][c]: index of the cell that group element g sends cell c to
  std::vector<std::vector<int>> cell_image(group.size(), std::vector<int>(n_cells, -1));
  for (size_t g = 0; g < group.size(); ++g) {
    for (int c = 0; c < n_cells; ++c) {
      EqualityGraph mapped = map_graph(group[g], complex.cells[c].admissible);
      int target = complex.find_cell(mapped);
      if (target < 0) {
        throw Error(Error::Kind::NotCellular, "group element does not permute the cells");
      }
      if (complex.cells[target].dim != complex.cells[c].dim) {
        throw Error(Error::Kind::NotCellular, "cell image has a different dimension");
      }
      cell_image[g][c] = target;
    }
  }

  std::vector<int> orbit_of(n_cells, -1);
  for (int c = 0; c < n_cells; ++c) {
    if (orbit_of[c] >= 0) continue;
    CellOrbit orbit;
    orbit.dim = complex.cells[c].dim;
    orbit.representative_cell = c;
    std::set<int> members;
    int stab = 0;
    for (size_t g = 0; g < group.size(); ++g) {
      members.insert(cell_image[g][c]);
      if (cell_image[g][c] == c) ++stab;
    }
    for (int mcell : members) orbit_of[mcell] = static_cast<int>(rep.cell_orbits.size());
    orbit.size = static_cast<int>(members.size());
    orbit.stabilizer_order = stab;
    if (orbit.size * orbit.stabilizer_order != rep.group_order) {
      throw std::logic_error("orbit-stabilizer mismatch on cells");
    }
    rep.cell_orbits.push_back(orbit);
  }

  // orbits of subdivision simplices (chains of cells), plus rigidity: a
  // setwise-fixed chain must have every barycenter fixed exactly
  Subdivision sub = barycentric_subdivision(complex);
  std::map<std::vector<int>, int> simplex_index;
  for (size_t s = 0; s < sub.simplices.size(); ++s) {
    simplex_index[sub.simplices[s]] = static_cast<int>(s);
  }
  rep.simplicial_rigidity = true;
  std::vector<int> simplex_orbit(sub.simplices.size(), -1);
  std::map<int, int> orbit_count_by_dim;
  for (size_t s = 0; s < sub.simplices.size(); ++s) {
    if (simplex_orbit[s] >= 0) continue;
    int new_orbit = static_cast<int>(s);
    for (size_t g = 0; g < group.size(); ++g) {
      std::vector<int> image;
      for (int c : sub.simplices[s]) image.push_back(cell_image[g][c]);
      std::sort(image.begin(), image.end());
      auto it = simplex_index.find(image);
      if (it == simplex_index.end()) {
        throw Error(Error::Kind::NotCellular, "chain image is not a subdivision simplex");
      }
      simplex_orbit[it->second] = new_orbit;
      if (it->second == static_cast<int>(s)) {
        // setwise fixed: each cell of the chain is fixed (dimensions are
        // distinct along a chain), so its barycenter must be too
        for (int c : sub.simplices[s]) {
          if (induced_map(group[g], sub.barycenters[c]) != sub.barycenters[c]) {
            rep.simplicial_rigidity = false;
          }
        }
      }
    }
    orbit_count_by_dim[static_cast<int>(sub.simplices[s].size()) - 1] += 1;
  }
  for (const auto& [dim, count] : orbit_count_by_dim) rep.simplex_orbits.push_back({dim, count});
  return rep;
}

MetricFunction fixed_point_function(const FinMetric& m, const std::vector<Isometry>& subgroup) {
  if (!is_permutation_group(subgroup, m.size())) {
    throw Error(Error::Kind::NotAGroup, "fixed_point_function needs a permutation group");
  }
  for (const auto& g : subgroup) {
    if (!is_isometry(m, g)) {
      throw Error(Error::Kind::NotAGroup, "subgroup element is not an isometry");
    }
  }
  // orbit partition, orbits ordered by least member
  std::vector<int> orbit_of(m.size(), -1);
  std::vector<std::vector<PointId>> orbits;
  for (PointId x = 0; x < m.size(); ++x) {
    if (orbit_of[x] >= 0) continue;
    std::set<PointId> members;
    for (const auto& g : subgroup) members.insert(g[x]);
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back(members.begin(), members.end());
    for (PointId y : orbits.back()) orbit_of[y] = id;
  }
  const int k = static_cast<int>(orbits.size());

  // D(o1,o2) = max d over the orbit pair; D(o,o) = diam(o) may be positive
  std::vector<std::vector<Rat>> orbit_dist(k, std::vector<Rat>(k, Rat(0)));
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      Rat best = 0;
      for (PointId x : orbits[a]) {
        for (PointId y : orbits[b]) best = std::max(best, m.dist(x, y));
      }
      orbit_dist[a][b] = orbit_dist[b][a] = best;
    }
  }
  // start from the D-eccentricity function and run one greedy lowering pass;
  // the loop constraint is 2 F(o) >= D(o,o)
  std::vector<Rat> big_f(k);
  for (int a = 0; a < k; ++a) {
    Rat e = 0;
    for (int b = 0; b < k; ++b) e = std::max(e, orbit_dist[a][b]);
    big_f[a] = e;
  }
  for (int a = 0; a < k; ++a) {
    Rat low = orbit_dist[a][a] / 2;
    for (int b = 0; b < k; ++b) {
      if (b != a) low = std::max(low, Rat(orbit_dist[a][b] - big_f[b]));
    }
    big_f[a] = low;
  }

  MetricFunction f(m.size());
  for (PointId x = 0; x < m.size(); ++x) f[x] = big_f[orbit_of[x]];
  auto cls = classify_function(m, f);
  if (!cls.extremal) {
    throw std::logic_error("orbit-minimal function failed to be extremal");
  }
  return f;
}

}  // namespace tightspan
