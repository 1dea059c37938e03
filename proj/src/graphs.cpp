#include "tightspan/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tightspan {

void Graph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(Error::Kind::InvalidInput, "edge endpoint out of range");
    }
    if (a == b) throw Error(Error::Kind::InvalidInput, "self-loop in graph");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw Error(Error::Kind::InvalidInput, "duplicate edge in graph");
    }
  }
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

GraphMetricResult graph_metric(const Graph& g) {
  g.validate();
  if (g.n == 0) throw Error(Error::Kind::InvalidInput, "empty graph");
  auto adj = g.adjacency();
  std::vector<std::vector<Rat>> rows(g.n, std::vector<Rat>(g.n));
  std::vector<long> dist(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1L);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int t = 0; t < g.n; ++t) {
      if (dist[t] < 0) throw Error(Error::Kind::Disconnected, "graph is not connected");
      rows[s][t] = Rat(dist[t]);
    }
  }
  GraphMetricResult out{FinMetric::require(std::move(rows), g.labels), true};
  return out;
}

bool is_discretely_geodesic(const FinMetric& m) {
  if (!m.integer_valued()) return false;
  for (PointId x = 0; x < m.size(); ++x) {
    for (PointId y = 0; y < m.size(); ++y) {
      long d = m.idist(x, y);
      if (d < 2) continue;
      bool step = false;
      for (PointId v = 0; v < m.size() && !step; ++v) {
        if (m.idist(x, v) == 1 && m.idist(v, y) == d - 1) step = true;
      }
      if (!step) return false;
    }
  }
  return true;
}

namespace {

std::vector<PointId> int_interval(const FinMetric& m, PointId x, PointId y) {
  std::vector<PointId> out;
  long d = m.idist(x, y);
  for (PointId v = 0; v < m.size(); ++v) {
    if (m.idist(x, v) + m.idist(v, y) == d) out.push_back(v);
  }
  return out;
}

bool interval_interior(const FinMetric& m, const std::vector<PointId>& ivl, long span,
                       const InteriorFilter& filter) {
  for (PointId v : ivl) {
    if (m.idist(filter.center, v) > filter.radius - span) return false;
  }
  return true;
}

}  // namespace

StabilityReport check_stable_intervals(const FinMetric& m, int beta,
                                       const std::optional<InteriorFilter>& interior) {
  if (!m.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric, "stability needs an integer-valued metric");
  }
  StabilityReport rep;
  rep.beta_checked = beta;
  rep.holds = true;
  for (PointId y = 0; y < m.size(); ++y) {
    for (PointId yp = 0; yp < m.size(); ++yp) {
      if (m.idist(y, yp) != 1) continue;
      for (PointId x = 0; x < m.size(); ++x) {
        auto ixy = int_interval(m, x, y);
        auto ixyp = int_interval(m, x, yp);
        if (interior) {
          if (!interval_interior(m, ixy, m.idist(x, y), *interior) ||
              !interval_interior(m, ixyp, m.idist(x, yp), *interior)) {
            continue;
          }
        }
        for (PointId v : ixy) {
          bool close = false;
          for (PointId vp : ixyp) {
            if (m.idist(v, vp) <= beta) {
              close = true;
              break;
            }
          }
          if (!close) {
            rep.holds = false;
            rep.witness = StabilityWitness{x, y, yp, v};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

int min_beta(const FinMetric& m, const std::optional<InteriorFilter>& interior) {
  if (!m.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric, "min_beta needs an integer-valued metric");
  }
  // max over admitted (x,y,y',v in I(x,y)) of min over v' in I(x,y') of d(v,v')
  long best = 0;
  for (PointId y = 0; y < m.size(); ++y) {
    for (PointId yp = 0; yp < m.size(); ++yp) {
      if (m.idist(y, yp) != 1) continue;
      for (PointId x = 0; x < m.size(); ++x) {
        auto ixy = int_interval(m, x, y);
        auto ixyp = int_interval(m, x, yp);
        if (interior) {
          if (!interval_interior(m, ixy, m.idist(x, y), *interior) ||
              !interval_interior(m, ixyp, m.idist(x, yp), *interior)) {
            continue;
          }
        }
        for (PointId v : ixy) {
          long nearest = m.idist(v, ixyp.front());
          for (PointId vp : ixyp) nearest = std::min(nearest, m.idist(v, vp));
          best = std::max(best, nearest);
        }
      }
    }
  }
  return static_cast<int>(best);
}

ConeTypeTable cone_types(const FinMetric& m, PointId v, int beta) {
  check_point(m, v);
  ConeTypeTable table;
  table.apex = v;
  table.beta = beta;

  std::set<std::vector<PointId>> cone_set;
  std::vector<std::vector<PointId>> cone_of(m.size());
  for (PointId x = 0; x < m.size(); ++x) {
    cone_of[x] = cone(m, x, v);
    cone_set.insert(cone_of[x]);
  }
  table.cones.assign(cone_set.begin(), cone_set.end());

  std::vector<PointId> ball;
  for (PointId u = 0; u < m.size(); ++u) {
    if (m.dist(u, v) <= beta) ball.push_back(u);
  }
  std::map<std::vector<Rat>, std::vector<PointId>> f_classes;
  for (PointId x = 0; x < m.size(); ++x) {
    std::vector<Rat> fx;
    fx.reserve(ball.size());
    for (PointId u : ball) fx.push_back(m.dist(x, u) - m.dist(x, v));
    f_classes[std::move(fx)].push_back(x);
  }
  table.f_class_count = static_cast<int>(f_classes.size());

  if (m.integer_valued() && is_discretely_geodesic(m) &&
      check_stable_intervals(m, beta).holds) {
    table.lemma_checked = true;
    for (const auto& [fx, members] : f_classes) {
      for (size_t i = 1; i < members.size(); ++i) {
        if (cone_of[members[i]] != cone_of[members[0]]) {
          throw std::logic_error("equal F-classes with distinct cones under stability");
        }
      }
    }
  }
  return table;
}

Rat delta_hyperbolicity(const FinMetric& m) {
  const int n = m.size();
  if (m.integer_valued()) {
    long delta = 0;
    for (PointId w = 0; w < n; ++w) {
      for (PointId x = w; x < n; ++x) {
        long dwx = m.idist(w, x);
        for (PointId y = 0; y < n; ++y) {
          long dwy = m.idist(w, y), dxy = m.idist(x, y);
          for (PointId z = y; z < n; ++z) {
            long lhs = dwx + m.idist(y, z);
            long rhs = std::max(dwy + m.idist(x, z), dxy + m.idist(w, z));
            delta = std::max(delta, lhs - rhs);
          }
        }
      }
    }
    return Rat(delta);
  }
  Rat delta = 0;
  for (PointId w = 0; w < n; ++w) {
    for (PointId x = w; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = y; z < n; ++z) {
          Rat lhs = m.dist(w, x) + m.dist(y, z);
          Rat rhs = std::max(Rat(m.dist(w, y) + m.dist(x, z)),
                             Rat(m.dist(x, y) + m.dist(w, z)));
          delta = std::max(delta, Rat(lhs - rhs));
        }
      }
    }
  }
  return delta;
}

PointId interval_point_near(const FinMetric& m, PointId x, PointId y, PointId z, int beta) {
  check_point(m, x);
  check_point(m, y);
  check_point(m, z);
  if (!m.integer_valued() || !is_discretely_geodesic(m)) {
    throw Error(Error::Kind::InvalidInput, "interval_point_near needs a discretely geodesic space");
  }
  if (!check_stable_intervals(m, beta).holds) {
    throw Error(Error::Kind::StabilityHypothesisFails,
                "space does not have beta-stable intervals");
  }
  PointId cur = z;
  long product = m.idist(cur, x) + m.idist(cur, y) - m.idist(x, y);  // 2 (x|y)_cur
  while (product > 0) {
    // discrete geodesic from cur to y, lowest point id at each step
    std::vector<PointId> geo{cur};
    while (geo.back() != y) {
      long rem = m.idist(geo.back(), y);
      PointId step = -1;
      for (PointId u = 0; u < m.size(); ++u) {
        if (m.idist(geo.back(), u) == 1 && m.idist(u, y) == rem - 1) {
          step = u;
          break;
        }
      }
      if (step < 0) throw std::logic_error("no unit step on a discrete geodesic");
      geo.push_back(step);
    }
    size_t k = 0;
    for (size_t i = 0; i < geo.size(); ++i) {
      if (m.idist(x, cur) + m.idist(cur, geo[i]) == m.idist(x, geo[i])) k = i;
    }
    if (k + 1 >= geo.size()) throw std::logic_error("geodesic walk lost the anchor point");
    PointId y_next = geo[k + 1];
    PointId z_next = -1;
    for (PointId u = 0; u < m.size(); ++u) {
      if (m.idist(cur, u) <= beta &&
          m.idist(x, u) + m.idist(u, y_next) == m.idist(x, y_next)) {
        z_next = u;
        break;
      }
    }
    if (z_next < 0) throw std::logic_error("stability promised a nearby interval point");
    long next_product = m.idist(z_next, x) + m.idist(z_next, y) - m.idist(x, y);
    if (next_product >= product) throw std::logic_error("Gromov product failed to decrease");
    cur = z_next;
    product = next_product;
  }
  return cur;
}

namespace {

GeneratedSpace from_graph(std::string name, Graph g) {
  GeneratedSpace out;
  out.name = std::move(name);
  out.metric = graph_metric(g).metric;
  out.graph = std::move(g);
  return out;
}

GeneratedSpace make_path(long k) {
  if (k < 1) throw Error(Error::Kind::InvalidInput, "path needs at least 1 vertex");
  Graph g;
  g.n = static_cast<int>(k);
  for (int i = 0; i + 1 < g.n; ++i) g.edges.push_back({i, i + 1});
  return from_graph("path:" + std::to_string(k), std::move(g));
}

GeneratedSpace make_cycle(long k) {
  if (k < 3) throw Error(Error::Kind::InvalidInput, "cycle needs at least 3 vertices");
  Graph g;
  g.n = static_cast<int>(k);
  for (int i = 0; i < g.n; ++i) g.edges.push_back({i, (i + 1) % g.n});
  return from_graph("cycle:" + std::to_string(k), std::move(g));
}

GeneratedSpace make_complete(long k) {
  if (k < 2) throw Error(Error::Kind::InvalidInput, "complete needs at least 2 vertices");
  Graph g;
  g.n = static_cast<int>(k);
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) g.edges.push_back({i, j});
  }
  return from_graph("complete:" + std::to_string(k), std::move(g));
}

std::string bits_label(long v, long n) {
  std::string s;
  for (long b = n - 1; b >= 0; --b) s += ((v >> b) & 1) ? '1' : '0';
  return s;
}

GeneratedSpace make_hypercube(long n, long long budget) {
  if (n < 1) throw Error(Error::Kind::InvalidInput, "hypercube needs dimension >= 1");
  if (n > 20 || (1LL << n) > budget) {
    throw Error(Error::Kind::BudgetExceeded, "hypercube exceeds size budget");
  }
  Graph g;
  g.n = 1 << n;
  for (int v = 0; v < g.n; ++v) {
    g.labels.push_back(bits_label(v, n));
    for (long b = 0; b < n; ++b) {
      int u = v ^ (1 << b);
      if (u > v) g.edges.push_back({v, u});
    }
  }
  return from_graph("hypercube:" + std::to_string(n), std::move(g));
}

GeneratedSpace make_chained_cubes(long big_n, long long budget) {
  if (big_n < 1) throw Error(Error::Kind::InvalidInput, "chained_cubes needs N >= 1");
  long long total = 0;
  for (long k = 1; k <= big_n; ++k) total += (1LL << k);
  total -= big_n - 1;
  if (big_n > 16 || total > budget) {
    throw Error(Error::Kind::BudgetExceeded, "chained cubes exceed size budget");
  }
  Graph g;
  g.n = static_cast<int>(total);
  int base = 0;  // id of the all-zeros corner of the current cube
  for (long k = 1; k <= big_n; ++k) {
    const int cube = 1 << k;
    // vertex v of cube k gets global id base + v; the all-ones corner of
    // cube k coincides with the all-zeros corner of cube k+1
    for (int v = 0; v < cube; ++v) {
      for (long b = 0; b < k; ++b) {
        int u = v ^ (1 << b);
        if (u > v) g.edges.push_back({base + v, base + u});
      }
    }
    base += cube - 1;
  }
  for (int i = 0; i < g.n; ++i) g.labels.push_back("v" + std::to_string(i));
  return from_graph("chained_cubes:" + std::to_string(big_n), std::move(g));
}

GeneratedSpace make_zn_ball(long n, long radius, bool l1, long long budget) {
  if (n < 1 || radius < 0) throw Error(Error::Kind::InvalidInput, "zn_ball needs n >= 1, R >= 0");
  std::vector<std::vector<long>> points;
  std::vector<long> cur(n, -radius);
  for (;;) {
    long norm = 0;
    if (l1) {
      for (long c : cur) norm += std::labs(c);
    } else {
      for (long c : cur) norm = std::max(norm, std::labs(c));
    }
    if (norm <= radius) {
      points.push_back(cur);
      if (static_cast<long long>(points.size()) > budget) {
        throw Error(Error::Kind::BudgetExceeded, "lattice ball exceeds size budget");
      }
    }
    long i = n - 1;
    while (i >= 0 && cur[i] == radius) cur[i--] = -radius;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(points.begin(), points.end());

  GeneratedSpace out;
  out.name = std::string("zn_ball:") + std::to_string(n) + "," + std::to_string(radius) + "," +
             (l1 ? "l1" : "linf");
  const int count = static_cast<int>(points.size());
  std::vector<std::vector<Rat>> rows(count, std::vector<Rat>(count));
  std::vector<std::string> labels;
  Graph g;
  g.n = count;
  for (int i = 0; i < count; ++i) {
    std::string label = "(";
    for (long c = 0; c < n; ++c) {
      if (c) label += ",";
      label += std::to_string(points[i][c]);
    }
    labels.push_back(label + ")");
    for (int j = 0; j < count; ++j) {
      long d = 0;
      for (long c = 0; c < n; ++c) {
        long diff = std::labs(points[i][c] - points[j][c]);
        d = l1 ? d + diff : std::max(d, diff);
      }
      rows[i][j] = Rat(d);
      if (j > i && d == 1) g.edges.push_back({i, j});
    }
    if (std::all_of(points[i].begin(), points[i].end(), [](long c) { return c == 0; })) {
      out.center = i;
    }
  }
  g.labels = labels;
  out.metric = FinMetric::require(std::move(rows), std::move(labels));
  out.graph = std::move(g);
  out.radius = radius;
  return out;
}

GeneratedSpace make_free_ball(long rank, long radius, long long budget) {
  if (rank < 1 || radius < 0) {
    throw Error(Error::Kind::InvalidInput, "free_ball needs rank >= 1, R >= 0");
  }
  // reduced words over a..z and inverses A..Z; BFS order from the identity
  std::vector<std::string> words{""};
  std::vector<std::pair<int, int>> edges;
  std::vector<char> gens;
  for (long r = 0; r < rank; ++r) {
    gens.push_back(static_cast<char>('a' + r));
    gens.push_back(static_cast<char>('A' + r));
  }
  auto inverse_of = [](char c) -> char {
    return (c >= 'a') ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a');
  };
  for (size_t head = 0; head < words.size(); ++head) {
    std::string w = words[head];
    if (static_cast<long>(w.size()) == radius) continue;
    for (char gch : gens) {
      if (!w.empty() && w.back() == inverse_of(gch)) continue;
      std::string next = w + gch;
      int id = static_cast<int>(words.size());
      words.push_back(next);
      edges.push_back({static_cast<int>(head), id});
      if (static_cast<long long>(words.size()) > budget) {
        throw Error(Error::Kind::BudgetExceeded, "free group ball exceeds size budget");
      }
    }
  }
  Graph g;
  g.n = static_cast<int>(words.size());
  g.edges = std::move(edges);
  for (auto& w : words) g.labels.push_back(w.empty() ? "e" : w);
  GeneratedSpace out = from_graph(
      "free_ball:" + std::to_string(rank) + "," + std::to_string(radius), std::move(g));
  out.center = 0;
  out.radius = radius;
  return out;
}

}  // namespace

GeneratedSpace generate(const std::string& family, const std::vector<long>& params,
                        long long budget) {
  auto need = [&](size_t count) {
    if (params.size() < count) {
      throw Error(Error::Kind::InvalidInput, "generator '" + family + "' needs more parameters");
    }
  };
  if (family == "path") {
    need(1);
    if (params[0] > budget) throw Error(Error::Kind::BudgetExceeded, "path exceeds budget");
    return make_path(params[0]);
  }
  if (family == "cycle") {
    need(1);
    if (params[0] > budget) throw Error(Error::Kind::BudgetExceeded, "cycle exceeds budget");
    return make_cycle(params[0]);
  }
  if (family == "complete") {
    need(1);
    if (params[0] > budget) throw Error(Error::Kind::BudgetExceeded, "complete exceeds budget");
    return make_complete(params[0]);
  }
  if (family == "hypercube") {
    need(1);
    return make_hypercube(params[0], budget);
  }
  if (family == "chained_cubes") {
    need(1);
    return make_chained_cubes(params[0], budget);
  }
  if (family == "zn_ball" || family == "zn_ball_l1") {
    need(2);
    bool l1 = params.size() < 3 || params[2] != 0;
    if (family == "zn_ball_l1") l1 = true;
    return make_zn_ball(params[0], params[1], l1, budget);
  }
  if (family == "zn_ball_linf") {
    need(2);
    return make_zn_ball(params[0], params[1], false, budget);
  }
  if (family == "free_ball") {
    need(2);
    return make_free_ball(params[0], params[1], budget);
  }
  throw Error(Error::Kind::InvalidInput, "unknown generator family '" + family + "'");
}

GeneratedSpace generate_spec(const std::string& spec, long long budget) {
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  std::vector<long> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    size_t pos = 0;
    while (pos <= rest.size() && !rest.empty()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (tok == "l1") {
        family += "_l1";
      } else if (tok == "linf") {
        family += "_linf";
      } else if (!tok.empty()) {
        try {
          params.push_back(std::stol(tok));
        } catch (const std::exception&) {
          throw Error(Error::Kind::InvalidInput, "bad generator parameter '" + tok + "'");
        }
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return generate(family, params, budget);
}

}  // namespace tightspan
