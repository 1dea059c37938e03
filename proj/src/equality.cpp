#include "tightspan/equality.hpp"

#include <algorithm>
#include <numeric>

namespace tightspan {

bool EqualityGraph::contains(const PointPair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

bool EqualityGraph::covers_all(int n_points) const {
  std::vector<char> seen(n_points, 0);
  for (const auto& [a, b] : pairs) {
    seen[a] = 1;
    seen[b] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool EqualityGraph::subset_of(const EqualityGraph& g) const {
  return std::includes(g.pairs.begin(), g.pairs.end(), pairs.begin(), pairs.end());
}

EqualityGraph EqualityGraph::intersect(const EqualityGraph& a, const EqualityGraph& b) {
  EqualityGraph out;
  std::set_intersection(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
                        std::back_inserter(out.pairs));
  return out;
}

EqualityGraph tight_pairs(const FinMetric& m, const MetricFunction& f) {
  check_length(m, f);
  EqualityGraph a;
  for (PointId x = 0; x < m.size(); ++x) {
    for (PointId y = x; y < m.size(); ++y) {
      if (f[x] + f[y] == m.dist(x, y)) a.pairs.push_back({x, y});
    }
  }
  return a;
}

EqualityGraph equality_graph(const FinMetric& m, const MetricFunction& f) {
  auto cls = classify_function(m, f);
  if (!cls.extremal) {
    throw Error(Error::Kind::NotExtremal, "equality_graph requires an extremal function");
  }
  return tight_pairs(m, f);
}

namespace {

// Union-find with parity relative to the root: par[i] = parity of the path
// from i to its representative.
struct ParityDsu {
  std::vector<int> parent;
  std::vector<char> par;
  std::vector<char> has_odd_cycle;

  explicit ParityDsu(int n) : parent(n), par(n, 0), has_odd_cycle(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<int, char> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    par[x] = static_cast<char>(par[x] ^ p);
    return {root, par[x]};
  }

  void join(int a, int b, char edge_parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if (static_cast<char>(pa ^ pb) != edge_parity) has_odd_cycle[ra] = 1;
      return;
    }
    parent[rb] = ra;
    par[rb] = static_cast<char>(pa ^ pb ^ edge_parity);
    has_odd_cycle[ra] = static_cast<char>(has_odd_cycle[ra] | has_odd_cycle[rb]);
  }
};

}  // namespace

ParityPartition parity_analysis(const EqualityGraph& a, int n_points) {
  if (!a.covers_all(n_points)) {
    throw Error(Error::Kind::NotAdmissible, "equality graph leaves a point uncovered");
  }
  ParityDsu dsu(n_points);
  for (const auto& [x, y] : a.pairs) {
    if (x == y) {
      dsu.has_odd_cycle[dsu.find(x).first] = 1;  // loop = odd cycle of length 1
    } else {
      dsu.join(x, y, 1);
    }
  }

  ParityPartition out;
  std::vector<int> comp_of(n_points, -1);
  for (PointId x = 0; x < n_points; ++x) {
    auto [root, p] = dsu.find(x);
    int& c = comp_of[root];
    if (c < 0) {
      c = static_cast<int>(out.components.size());
      out.components.push_back({});
      out.components[c].odd = dsu.has_odd_cycle[root] != 0;
    }
    auto& comp = out.components[c];
    comp.points.push_back(x);
    if (!comp.odd) {
      // orient sides so that the least point (first added) lands in side_pos
      char base = dsu.find(comp.points.front()).second;
      (p == base ? comp.side_pos : comp.side_neg).push_back(x);
    }
  }
  for (const auto& comp : out.components) {
    if (!comp.odd) ++out.rank;
  }
  return out;
}

}  // namespace tightspan
