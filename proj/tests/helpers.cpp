#include "helpers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace tightspan::testing {

FinMetric two_point(long d) {
  return FinMetric::require({{Rat(0), Rat(d)}, {Rat(d), Rat(0)}}, {"a", "b"});
}

FinMetric k3() {
  return FinMetric::require(
      {{Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(1)}, {Rat(1), Rat(1), Rat(0)}},
      {"x", "y", "z"});
}

FinMetric five_point_example() {
  // x1, x2, y1, y2, y3: d(x1,x2) = 2, d(x_i,y_j) = 1, d(y_j,y_k) = 2
  const int n = 5;
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, Rat(0)));
  auto set = [&](int a, int b, long v) { rows[a][b] = rows[b][a] = Rat(v); };
  set(0, 1, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 2; y < 5; ++y) set(x, y, 1);
  }
  set(2, 3, 2);
  set(2, 4, 2);
  set(3, 4, 2);
  return FinMetric::require(rows, {"x1", "x2", "y1", "y2", "y3"});
}

FinMetric six_point_example() {
  // x1, x2, y1, y2, y3, z: all distances 1 except d(x_i,z) = 2, d(y_j,y_k) = 2
  const int n = 6;
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n, Rat(1)));
  for (int i = 0; i < n; ++i) rows[i][i] = Rat(0);
  auto set = [&](int a, int b, long v) { rows[a][b] = rows[b][a] = Rat(v); };
  set(0, 5, 2);
  set(1, 5, 2);
  set(2, 3, 2);
  set(2, 4, 2);
  set(3, 4, 2);
  return FinMetric::require(rows, {"x1", "x2", "y1", "y2", "y3", "z"});
}

FinMetric hexplane_six_point() {
  std::vector<std::vector<Rat>> pts = {
      {Rat(1), Rat(1), Rat(-2)},          {Rat(1), Rat(-2), Rat(1)},
      {Rat(-2), Rat(1), Rat(1)},          {Rat(1), Rat(-1, 2), Rat(-1, 2)},
      {Rat(-1, 2), Rat(1), Rat(-1, 2)},   {Rat(-1, 2), Rat(-1, 2), Rat(1)},
  };
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat d = 0;
      for (int c = 0; c < 3; ++c) d = std::max(d, rat_abs(pts[i][c] - pts[j][c]));
      rows[i][j] = d;
    }
  }
  return FinMetric::require(rows, {"p1", "p2", "p3", "m12", "m13", "m23"});
}

std::vector<CorpusSpace> corpus() {
  std::vector<CorpusSpace> out;
  auto add_gen = [&](const std::string& spec) {
    GeneratedSpace g = generate_spec(spec);
    out.push_back({g.name, g.metric});
  };
  add_gen("path:2");
  add_gen("path:3");
  add_gen("path:5");
  add_gen("cycle:3");
  add_gen("cycle:4");
  add_gen("cycle:5");
  add_gen("cycle:6");
  add_gen("complete:4");
  add_gen("hypercube:2");
  add_gen("hypercube:3");
  out.push_back({"five_point", five_point_example()});
  out.push_back({"six_point", six_point_example()});
  // star K_{1,3} and a 7-vertex binary tree
  {
    Graph star;
    star.n = 4;
    star.edges = {{0, 1}, {0, 2}, {0, 3}};
    out.push_back({"star:3", graph_metric(star).metric});
  }
  {
    Graph tree;
    tree.n = 7;
    tree.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
    out.push_back({"binary_tree:7", graph_metric(tree).metric});
  }
  // two fixed irregular connected graphs
  {
    Graph g;
    g.n = 6;
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}};
    out.push_back({"theta:6", graph_metric(g).metric});
  }
  {
    Graph g;
    g.n = 7;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
    out.push_back({"barbell:7", graph_metric(g).metric});
  }
  return out;
}

std::vector<MetricFunction> sample_delta(const FinMetric& m, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 12);
  std::uniform_int_distribution<int> den_pick(0, 2);
  const long dens[3] = {1, 2, 4};
  std::vector<MetricFunction> out;
  MetricFunction half_ecc(m.size());
  for (PointId x = 0; x < m.size(); ++x) half_ecc[x] = m.eccentricity(x) / 2;
  for (int i = 0; i < count; ++i) {
    MetricFunction f(m.size());
    for (PointId x = 0; x < m.size(); ++x) {
      f[x] = half_ecc[x] + make_rat(num(rng), dens[den_pick(rng)]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MetricFunction> sample_delta1(const FinMetric& m, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m.size() - 1);
  std::uniform_int_distribution<int> weight(0, 4);
  std::vector<MetricFunction> out;
  for (int i = 0; i < count; ++i) {
    // convex combination of two or three distance functions
    int k = 2 + (i % 2);
    std::vector<PointId> anchors;
    std::vector<long> w;
    long total = 0;
    for (int j = 0; j < k; ++j) {
      anchors.push_back(pick(rng));
      long wj = 1 + weight(rng);
      w.push_back(wj);
      total += wj;
    }
    MetricFunction f(m.size(), Rat(0));
    for (int j = 0; j < k; ++j) {
      for (PointId x = 0; x < m.size(); ++x) {
        f[x] += make_rat(w[j], total) * m.dist(anchors[j], x);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MetricFunction> oracle_grid_extremals(const FinMetric& m) {
  const int n = m.size();
  std::vector<long> ub(n);
  for (PointId x = 0; x < n; ++x) ub[x] = 2 * rat_to_long(m.eccentricity(x));
  std::vector<MetricFunction> out;
  std::vector<long> f2(n, 0);
  for (;;) {
    MetricFunction f(n);
    for (int x = 0; x < n; ++x) f[x] = make_rat(f2[x], 2);
    bool extremal = true;
    for (PointId x = 0; x < n && extremal; ++x) {
      Rat sup = m.dist(x, 0) - f[0];
      for (PointId y = 1; y < n; ++y) sup = std::max(sup, Rat(m.dist(x, y) - f[y]));
      if (sup != f[x]) extremal = false;
    }
    if (extremal) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f2[i] == ub[i]) f2[i--] = 0;
    if (i < 0) break;
    ++f2[i];
  }
  return out;
}

namespace {

// Pair universe for the mask oracles: index p <-> unordered pair (x,y), x <= y.
struct PairUniverse {
  int n;
  std::vector<std::pair<int, int>> pairs;
  explicit PairUniverse(int n_pts) : n(n_pts) {
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) pairs.push_back({x, y});
    }
  }
};

// Components all odd-unicyclic <=> mask covers X, has exactly n pairs, and
// no component is bipartite-without-loops with fewer pairs than points.
bool mask_is_rank0_cover(const PairUniverse& u, uint64_t mask) {
  std::vector<int> parent(u.n);
  std::vector<int> par(u.n, 0);
  std::vector<char> odd(u.n, 0), covered(u.n, 0);
  for (int i = 0; i < u.n; ++i) parent[i] = i;
  auto find = [&](int v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= par[v];
      v = parent[v];
    }
    return std::pair<int, int>(v, p);
  };
  for (size_t p = 0; p < u.pairs.size(); ++p) {
    if (!(mask >> p & 1)) continue;
    auto [x, y] = u.pairs[p];
    covered[x] = covered[y] = 1;
    if (x == y) {
      odd[find(x).first] = 1;
      continue;
    }
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
  for (int v = 0; v < u.n; ++v) {
    if (!covered[v] || !odd[find(v).first]) return false;
  }
  return true;
}

// Solves the tight system of a rank-0 cover in doubled integer units.
// Returns false if inconsistent or outside Delta(X).
bool solve_mask(const FinMetric& m, const PairUniverse& u, uint64_t mask,
                std::vector<long>& g2) {
  const int n = u.n;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, pair idx)
  std::vector<int> loops;
  for (size_t p = 0; p < u.pairs.size(); ++p) {
    if (!(mask >> p & 1)) continue;
    auto [x, y] = u.pairs[p];
    if (x == y) {
      loops.push_back(x);
    } else {
      adj[x].push_back({y, static_cast<int>(p)});
      adj[y].push_back({x, static_cast<int>(p)});
    }
  }
  // g2(v) = sign[v] * t2 + c2[v] within each component
  std::vector<int> sign(n, 0);
  std::vector<long> c2(n, 0);
  std::vector<int> comp(n, -1);
  g2.assign(n, 0);
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    std::vector<int> stack{root};
    std::vector<int> members;
    comp[root] = root;
    sign[root] = 1;
    c2[root] = 0;
    bool have_t = false;
    long t2 = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto [w, p] : adj[v]) {
        long d2 = 2 * m.idist(u.pairs[p].first, u.pairs[p].second);
        if (comp[w] < 0) {
          comp[w] = root;
          sign[w] = -sign[v];
          c2[w] = d2 - c2[v];
          stack.push_back(w);
        } else {
          // closing edge: sign[v] t + c[v] + sign[w] t + c[w] = d2
          int s = sign[v] + sign[w];
          long rhs = d2 - c2[v] - c2[w];
          if (s == 0) {
            if (rhs != 0) return false;
          } else {
            if (rhs % s != 0) return false;
            long t = rhs / s;
            if (have_t && t != t2) return false;
            t2 = t;
            have_t = true;
          }
        }
      }
    }
    for (int v : members) {
      if (std::find(loops.begin(), loops.end(), v) != loops.end()) {
        // loop: 2 g2(v) = 0
        int s = 2 * sign[v];
        long rhs = -2 * c2[v];
        if (rhs % s != 0) return false;
        long t = rhs / s;
        if (have_t && t != t2) return false;
        t2 = t;
        have_t = true;
      }
    }
    if (!have_t) return false;  // even component slipped through
    for (int v : members) g2[v] = sign[v] * t2 + c2[v];
  }
  for (int x = 0; x < n; ++x) {
    if (g2[x] < 0) return false;
    for (int y = x + 1; y < n; ++y) {
      if (g2[x] + g2[y] < 2 * m.idist(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::vector<long>> oracle_vertices_doubled(const FinMetric& m) {
  if (!m.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric, "oracle needs an integer metric");
  }
  const int n = m.size();
  PairUniverse u(n);
  const int np = static_cast<int>(u.pairs.size());
  std::vector<std::vector<long>> found;
  // every vertex admits a covering candidate with exactly n pairs: a spanning
  // tree plus one odd closing edge per component of its equality graph
  std::vector<int> chosen;
  std::vector<long> g2;
  std::function<void(int, int)> pick = [&](int start, int remaining) {
    if (remaining == 0) {
      uint64_t mask = 0;
      for (int p : chosen) mask |= 1ull << p;
      if (mask_is_rank0_cover(u, mask) && solve_mask(m, u, mask, g2)) found.push_back(g2);
      return;
    }
    for (int p = start; p <= np - remaining; ++p) {
      chosen.push_back(p);
      pick(p + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  pick(0, n);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

std::vector<MetricFunction> oracle_vertices(const FinMetric& m) {
  auto doubled = oracle_vertices_doubled(m);
  std::vector<MetricFunction> out;
  for (const auto& g2 : doubled) {
    MetricFunction f(m.size());
    for (int x = 0; x < m.size(); ++x) f[x] = make_rat(g2[x], 2);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<std::pair<PointId, PointId>>> oracle_admissible_closure(
    const FinMetric& m) {
  const int n = m.size();
  PairUniverse u(n);
  auto doubled = oracle_vertices_doubled(m);
  std::vector<uint32_t> cover_mask(u.pairs.size());
  for (size_t p = 0; p < u.pairs.size(); ++p) {
    cover_mask[p] = (1u << u.pairs[p].first) | (1u << u.pairs[p].second);
  }
  auto covers = [&](uint64_t mask) {
    uint32_t pts = 0;
    for (size_t p = 0; p < u.pairs.size(); ++p) {
      if (mask >> p & 1) pts |= cover_mask[p];
    }
    return pts == (1u << n) - 1;
  };
  std::set<uint64_t> family;
  std::vector<uint64_t> list;
  for (const auto& g2 : doubled) {
    uint64_t mask = 0;
    for (size_t p = 0; p < u.pairs.size(); ++p) {
      auto [x, y] = u.pairs[p];
      if (g2[x] + g2[y] == 2 * m.idist(x, y)) mask |= 1ull << p;
    }
    if (family.insert(mask).second) list.push_back(mask);
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      uint64_t meet = list[i] & list[j];
      if (covers(meet) && family.insert(meet).second) list.push_back(meet);
    }
  }
  std::vector<std::vector<std::pair<PointId, PointId>>> out;
  for (uint64_t mask : family) {
    std::vector<std::pair<PointId, PointId>> a;
    for (size_t p = 0; p < u.pairs.size(); ++p) {
      if (mask >> p & 1) a.push_back(u.pairs[p]);
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> children;
  for (int w : adj[v]) {
    if (w != parent) children.push_back(ahu_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  return code + ")";
}

std::string free_tree_canon(const Graph& g) {
  auto adj = g.adjacency();
  // strip leaves until one or two centers remain
  std::vector<int> degree(g.n);
  for (int v = 0; v < g.n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  std::vector<char> removed(g.n, 0);
  int remaining = g.n;
  for (int v = 0; v < g.n; ++v) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v]) {
        if (!removed[w] && --degree[w] == 1) next.push_back(w);
      }
    }
    layer = next;
  }
  std::string best;
  for (int c = 0; c < g.n; ++c) {
    if (removed[c]) continue;
    std::string code = ahu_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    Graph g;
    g.n = 1;
    out.push_back(g);
    return out;
  }
  // Beyer-Hedetniemi iteration over rooted level sequences, deduplicated to
  // free trees by a centered canonical code
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
  std::set<std::string> seen;
  for (;;) {
    Graph g;
    g.n = n;
    for (int i = 1; i < n; ++i) {
      int parent = -1;
      for (int j = i - 1; j >= 0; --j) {
        if (level[j] == level[i] - 1) {
          parent = j;
          break;
        }
      }
      g.edges.push_back({parent, i});
    }
    if (seen.insert(free_tree_canon(g)).second) out.push_back(g);

    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

}  // namespace tightspan::testing
