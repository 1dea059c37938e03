#include "tightspan/complex.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

namespace tightspan {

namespace {

// Doubled-integer view of the vertex search: candidates are 2*f with
// f half-integer, so all constraints become integer comparisons.
struct GridSearch {
  int n;
  std::vector<long> d2;   // 2 * d(x,y)
  std::vector<long> ub2;  // 2 * ecc(x)

  long dd(int x, int y) const { return d2[static_cast<size_t>(x) * n + y]; }

  bool leaf_is_vertex(const std::vector<long>& f2) const {
    // extremal on a finite space: in Delta (guaranteed by the search) and
    // every point in a tight pair; vertex: additionally rank 0
    for (int x = 0; x < n; ++x) {
      bool covered = f2[x] == 0;
      for (int y = 0; y < n && !covered; ++y) {
        if (y != x && f2[x] + f2[y] == dd(x, y)) covered = true;
      }
      if (!covered) return false;
    }
    // parity over tight pairs: all components must contain an odd cycle
    std::vector<int> parent(n), par(n, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> odd(n, 0);
    auto find = [&](int v) {
      int p = 0;
      int r = v;
      while (parent[r] != r) {
        p ^= par[r];
        r = parent[r];
      }
      return std::pair<int, int>(r, p);
    };
    for (int x = 0; x < n; ++x) {
      if (f2[x] == 0) odd[find(x).first] = 1;
      for (int y = x + 1; y < n; ++y) {
        if (f2[x] + f2[y] != dd(x, y)) continue;
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) {
          if ((px ^ py) != 1) odd[rx] = 1;
        } else {
          parent[ry] = rx;
          par[ry] = px ^ py ^ 1;
          odd[rx] |= odd[ry];
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!odd[find(x).first]) return false;
    }
    return true;
  }

  void dfs(int i, std::vector<long>& f2, std::vector<std::vector<long>>& out) const {
    if (i == n) {
      if (leaf_is_vertex(f2)) out.push_back(f2);
      return;
    }
    long lb = 0;
    for (int j = 0; j < i; ++j) lb = std::max(lb, dd(i, j) - f2[j]);
    for (long v = lb; v <= ub2[i]; ++v) {
      f2[i] = v;
      dfs(i + 1, f2, out);
    }
  }
};

}  // namespace

std::vector<MetricFunction> enumerate_vertices(const FinMetric& m, const EnumOptions& opt) {
  if (!m.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric, "vertex enumeration needs an integer metric");
  }
  GridSearch gs;
  gs.n = m.size();
  gs.d2.resize(static_cast<size_t>(gs.n) * gs.n);
  gs.ub2.resize(gs.n);
  __int128 candidates = 1;
  for (int x = 0; x < gs.n; ++x) {
    for (int y = 0; y < gs.n; ++y) gs.d2[static_cast<size_t>(x) * gs.n + y] = 2 * m.idist(x, y);
    gs.ub2[x] = 2 * m.int_eccentricity(x);
    candidates *= (gs.ub2[x] + 1);
    if (candidates > opt.budget) {
      throw Error(Error::Kind::BudgetExceeded, "vertex grid exceeds the candidate budget");
    }
  }

  std::vector<std::vector<long>> found;
  const long top = gs.n > 0 ? gs.ub2[0] : -1;
  const int workers = std::max(1, opt.threads);
  if (workers == 1 || gs.n < 2 || top < 1) {
    std::vector<long> f2(gs.n);
    if (gs.n == 0) return {};
    gs.dfs(0, f2, found);
  } else {
    // split on the first coordinate; chunks merge back in value order, so the
    // output is identical for every thread count
    std::vector<std::vector<std::vector<long>>> per_value(top + 1);
    std::atomic<long> next{0};
    auto work = [&]() {
      for (;;) {
        long v = next.fetch_add(1);
        if (v > top) return;
        std::vector<long> f2(gs.n);
        f2[0] = v;
        gs.dfs(1, f2, per_value[v]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& chunk : per_value) {
      for (auto& f2 : chunk) found.push_back(std::move(f2));
    }
  }

  std::vector<MetricFunction> out;
  out.reserve(found.size());
  for (const auto& f2 : found) {
    MetricFunction f(gs.n);
    for (int x = 0; x < gs.n; ++x) f[x] = make_rat(f2[x], 2);
    out.push_back(std::move(f));
  }
  return out;
}

int HullComplex::dim_of_vertex_cell(int vertex_id) const {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].dim == 0 && cells[i].vertex_ids == std::vector<int>{vertex_id}) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int HullComplex::find_cell(const EqualityGraph& a) const {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].admissible == a) return static_cast<int>(i);
  }
  return -1;
}

HullComplex build_complex(const FinMetric& m, const EnumOptions& opt) {
  HullComplex hc;
  hc.metric = m;
  hc.vertices = enumerate_vertices(m, opt);
  for (const auto& v : hc.vertices) hc.vertex_graphs.push_back(tight_pairs(m, v));

  // Close the vertex graphs under pairwise intersection. Once a set fails
  // admissibility it never recovers (intersection shrinks the union), so
  // pruning non-admissible sets keeps the closure complete.
  std::set<EqualityGraph> seen;
  std::vector<EqualityGraph> family;
  for (const auto& a : hc.vertex_graphs) {
    if (seen.insert(a).second) family.push_back(a);
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      EqualityGraph meet = EqualityGraph::intersect(family[i], family[j]);
      if (!meet.covers_all(m.size())) continue;
      if (seen.insert(meet).second) family.push_back(meet);
    }
  }

  for (const auto& a : family) {
    Cell cell;
    cell.admissible = a;
    for (size_t v = 0; v < hc.vertices.size(); ++v) {
      if (a.subset_of(hc.vertex_graphs[v])) cell.vertex_ids.push_back(static_cast<int>(v));
    }
    cell.dim = parity_analysis(a, m.size()).rank;
    MetricFunction rep(m.size(), Rat(0));
    for (int v : cell.vertex_ids) {
      for (int x = 0; x < m.size(); ++x) rep[x] += hc.vertices[v][x];
    }
    const Rat count(static_cast<long>(cell.vertex_ids.size()));
    for (int x = 0; x < m.size(); ++x) rep[x] /= count;
    cell.representative = std::move(rep);
    if (tight_pairs(m, cell.representative) != a) {
      throw std::logic_error("cell representative does not realize the admissible set");
    }
    hc.cells.push_back(std::move(cell));
  }
  std::sort(hc.cells.begin(), hc.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.admissible < b.admissible;
  });

  for (size_t i = 0; i < hc.cells.size(); ++i) {
    for (size_t j = 0; j < hc.cells.size(); ++j) {
      if (i == j) continue;
      const auto& ai = hc.cells[i].admissible;
      const auto& aj = hc.cells[j].admissible;
      if (ai.pairs.size() > aj.pairs.size() && aj.subset_of(ai)) {
        hc.face_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }

  // structural checks: cells cover the vertices, intersections are cells
  for (size_t v = 0; v < hc.vertices.size(); ++v) {
    if (hc.dim_of_vertex_cell(static_cast<int>(v)) < 0) {
      throw std::logic_error("hull vertex not covered by a 0-cell");
    }
  }
  for (size_t i = 0; i < hc.cells.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> common;
      std::set_intersection(hc.cells[i].vertex_ids.begin(), hc.cells[i].vertex_ids.end(),
                            hc.cells[j].vertex_ids.begin(), hc.cells[j].vertex_ids.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      EqualityGraph meet = hc.vertex_graphs[common[0]];
      for (size_t k = 1; k < common.size(); ++k) {
        meet = EqualityGraph::intersect(meet, hc.vertex_graphs[common[k]]);
      }
      int c = hc.find_cell(meet);
      if (c < 0 || hc.cells[c].vertex_ids != common ||
          !hc.cells[i].admissible.subset_of(meet) || !hc.cells[j].admissible.subset_of(meet)) {
        throw std::logic_error("pairwise cell intersection is not a cell");
      }
    }
  }
  hc.cell_class.assign(hc.cells.size(), std::string());
  return hc;
}

bool PolytopeSystem::operator==(const PolytopeSystem& other) const {
  return n == other.n && cbar == other.cbar && cpair == other.cpair;
}

std::vector<Rat> PolytopeSystem::flatten() const {
  std::vector<Rat> out;
  for (const auto& c : cbar) {
    out.push_back(c[0]);
    out.push_back(c[1]);
  }
  for (const auto& [key, c] : cpair) {
    out.push_back(c[0][0]);
    out.push_back(c[0][1]);
    out.push_back(c[1][0]);
    out.push_back(c[1][1]);
  }
  return out;
}

PolytopeSystem PolytopeSystem::transformed(const std::vector<int>& perm,
                                           const std::vector<int>& sign) const {
  PolytopeSystem out;
  out.n = n;
  out.cbar.resize(n);
  auto flip = [](int index, int s) { return s == 1 ? index : 1 - index; };
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < 2; ++s) out.cbar[k][s] = cbar[perm[k]][flip(s, sign[k])];
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      std::array<std::array<Rat, 2>, 2> c;
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          int js = flip(s, sign[k]);
          int jt = flip(t, sign[l]);
          if (perm[k] < perm[l]) {
            c[s][t] = cpair.at({perm[k], perm[l]})[js][jt];
          } else {
            c[s][t] = cpair.at({perm[l], perm[k]})[jt][js];
          }
        }
      }
      out.cpair[{k, l}] = c;
    }
  }
  return out;
}

std::vector<Rat> PolytopeSystem::coords(const MetricFunction& g) const {
  std::vector<Rat> t(n);
  for (int k = 0; k < n; ++k) t[k] = g[reference_points[k]] - reference_values[k];
  return t;
}

PolytopeSystem cell_system(const HullComplex& complex, int cell_id) {
  const Cell& cell = complex.cells.at(cell_id);
  if (cell.dim < 1) {
    throw Error(Error::Kind::ZeroDimensional, "cell_system needs a cell of dimension >= 1");
  }
  const FinMetric& m = complex.metric;
  const MetricFunction& f = cell.representative;
  ParityPartition parts = parity_analysis(cell.admissible, m.size());

  std::vector<const ParityComponent*> evens;
  std::vector<PointId> odd_points;
  for (const auto& comp : parts.components) {
    if (comp.odd) {
      odd_points.insert(odd_points.end(), comp.points.begin(), comp.points.end());
    } else {
      evens.push_back(&comp);
    }
  }
  std::sort(odd_points.begin(), odd_points.end());

  PolytopeSystem sys;
  sys.n = cell.dim;
  sys.cbar.resize(sys.n);
  for (int k = 0; k < sys.n; ++k) {
    sys.reference_points.push_back(evens[k]->points.front());
    sys.reference_values.push_back(f[evens[k]->points.front()]);
  }

  auto side = [&](int k, int s) -> const std::vector<PointId>& {
    return s == 0 ? evens[k]->side_pos : evens[k]->side_neg;
  };
  // lists of pairs realizing each constraint, for the tightness check below
  auto same_side_sup = [&](int k, int s) {
    Rat best;
    bool first = true;
    for (size_t i = 0; i < side(k, s).size(); ++i) {
      for (size_t j = i; j < side(k, s).size(); ++j) {
        PointId x = side(k, s)[i], y = side(k, s)[j];
        Rat v = (m.dist(x, y) - f[x] - f[y]) / 2;
        if (first || v > best) best = v;
        first = false;
      }
    }
    return best;
  };
  auto to_odd_sup = [&](int k, int s) {
    Rat best;
    bool first = true;
    for (PointId x : side(k, s)) {
      for (PointId y : odd_points) {
        Rat v = m.dist(x, y) - f[x] - f[y];
        if (first || v > best) best = v;
        first = false;
      }
    }
    return best;
  };

  for (int k = 0; k < sys.n; ++k) {
    for (int s = 0; s < 2; ++s) {
      Rat c = same_side_sup(k, s);
      if (!odd_points.empty()) c = std::max(c, to_odd_sup(k, s));
      if (c >= 0) throw std::logic_error("polytope constant not strictly negative");
      sys.cbar[k][s] = c;
    }
  }
  for (int k = 0; k < sys.n; ++k) {
    for (int l = k + 1; l < sys.n; ++l) {
      std::array<std::array<Rat, 2>, 2> c;
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          Rat best;
          bool first = true;
          for (PointId x : side(k, s)) {
            for (PointId y : side(l, t)) {
              Rat v = m.dist(x, y) - f[x] - f[y];
              if (first || v > best) best = v;
              first = false;
            }
          }
          if (best >= 0) throw std::logic_error("polytope constant not strictly negative");
          c[s][t] = best;
        }
      }
      sys.cpair[{k, l}] = c;
    }
  }

  // Every cell vertex must satisfy the system, tight exactly where its
  // equality graph supplies a pair from the constraint's range.
  auto has_tight_pair_same = [&](const EqualityGraph& a, int k, int s) {
    for (size_t i = 0; i < side(k, s).size(); ++i) {
      for (size_t j = i; j < side(k, s).size(); ++j) {
        if (a.contains(make_pair_sorted(side(k, s)[i], side(k, s)[j]))) return true;
      }
    }
    for (PointId x : side(k, s)) {
      for (PointId y : odd_points) {
        if (a.contains(make_pair_sorted(x, y))) return true;
      }
    }
    return false;
  };
  auto has_tight_pair_cross = [&](const EqualityGraph& a, int k, int s, int l, int t) {
    for (PointId x : side(k, s)) {
      for (PointId y : side(l, t)) {
        if (a.contains(make_pair_sorted(x, y))) return true;
      }
    }
    return false;
  };
  for (int vid : cell.vertex_ids) {
    const auto& a = complex.vertex_graphs[vid];
    std::vector<Rat> t = sys.coords(complex.vertices[vid]);
    for (int k = 0; k < sys.n; ++k) {
      for (int s = 0; s < 2; ++s) {
        Rat lhs = s == 0 ? t[k] : Rat(-t[k]);
        if (lhs < sys.cbar[k][s]) throw std::logic_error("cell vertex violates its system");
        if ((lhs == sys.cbar[k][s]) != has_tight_pair_same(a, k, s)) {
          throw std::logic_error("tight/slack pattern mismatch on a single-coordinate relation");
        }
      }
    }
    for (int k = 0; k < sys.n; ++k) {
      for (int l = k + 1; l < sys.n; ++l) {
        for (int s = 0; s < 2; ++s) {
          for (int u = 0; u < 2; ++u) {
            Rat lhs = (s == 0 ? t[k] : Rat(-t[k])) + (u == 0 ? t[l] : Rat(-t[l]));
            const Rat& rhs = sys.cpair.at({k, l})[s][u];
            if (lhs < rhs) throw std::logic_error("cell vertex violates its system");
            if ((lhs == rhs) != has_tight_pair_cross(a, k, s, l, u)) {
              throw std::logic_error("tight/slack pattern mismatch on a pair relation");
            }
          }
        }
      }
    }
  }
  return sys;
}

namespace {

std::vector<Rat> canonical_form(const PolytopeSystem& sys) {
  const int n = sys.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Rat> best;
  bool first = true;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> sign(n);
      for (int k = 0; k < n; ++k) sign[k] = (mask >> k) & 1 ? -1 : 1;
      std::vector<Rat> flat = sys.transformed(perm, sign).flatten();
      if (first || flat < best) {
        best = std::move(flat);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::map<int, int> isometry_classes(HullComplex& complex) {
  std::map<int, std::vector<std::pair<std::vector<Rat>, int>>> by_dim;
  for (size_t i = 0; i < complex.cells.size(); ++i) {
    std::vector<Rat> key;
    if (complex.cells[i].dim >= 1) {
      key = canonical_form(cell_system(complex, static_cast<int>(i)));
    }
    by_dim[complex.cells[i].dim].push_back({std::move(key), static_cast<int>(i)});
  }
  std::map<int, int> class_counts;
  complex.cell_class.assign(complex.cells.size(), std::string());
  for (auto& [dim, entries] : by_dim) {
    std::vector<std::vector<Rat>> forms;
    for (const auto& [key, id] : entries) forms.push_back(key);
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    class_counts[dim] = static_cast<int>(forms.size());
    for (const auto& [key, id] : entries) {
      size_t rank = std::lower_bound(forms.begin(), forms.end(), key) - forms.begin();
      complex.cell_class[id] = "d" + std::to_string(dim) + ".c" + std::to_string(rank);
    }
  }
  return class_counts;
}

int Subdivision::maximal_count() const {
  return static_cast<int>(std::count(maximal.begin(), maximal.end(), 1));
}

Subdivision barycentric_subdivision(const HullComplex& complex) {
  Subdivision sub;
  for (const auto& cell : complex.cells) sub.barycenters.push_back(cell.representative);

  const int n_cells = static_cast<int>(complex.cells.size());
  std::vector<std::vector<char>> below(n_cells, std::vector<char>(n_cells, 0));
  for (const auto& [child, parent] : complex.face_pairs) below[child][parent] = 1;

  std::vector<int> chain;
  auto emit = [&]() {
    bool extendable = false;
    for (int c = 0; c < n_cells && !extendable; ++c) {
      if (below[c][chain.front()]) extendable = true;          // below the chain
      if (below[chain.back()][c]) extendable = true;           // above the chain
      for (size_t i = 0; i + 1 < chain.size() && !extendable; ++i) {
        if (below[chain[i]][c] && below[c][chain[i + 1]]) extendable = true;
      }
    }
    sub.simplices.push_back(chain);
    sub.maximal.push_back(extendable ? 0 : 1);
  };
  // chains ascend by inclusion: the cell order sorts by dimension first,
  // so successors always have larger index
  std::function<void(int)> grow = [&](int last) {
    emit();
    for (int next = last + 1; next < n_cells; ++next) {
      if (below[last][next]) {
        chain.push_back(next);
        grow(next);
        chain.pop_back();
      }
    }
  };
  for (int c = 0; c < n_cells; ++c) {
    chain = {c};
    grow(c);
  }
  return sub;
}

int hull_dimension(const HullComplex& complex) {
  int dim = 0;
  for (const auto& cell : complex.cells) dim = std::max(dim, cell.dim);
  return dim;
}

}  // namespace tightspan
