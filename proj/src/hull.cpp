#include "tightspan/hull.hpp"

#include <algorithm>
#include <numeric>

#include "tightspan/complex.hpp"
#include "tightspan/equality.hpp"

namespace tightspan {

namespace {

void require_in_delta(const FinMetric& m, const MetricFunction& f, const char* op) {
  auto cls = classify_function(m, f);
  if (!cls.in_delta) {
    throw Error(Error::Kind::NotInDelta, std::string(op) + " requires f in Delta(X)");
  }
}

}  // namespace

MetricFunction star(const FinMetric& m, const MetricFunction& f) {
  require_in_delta(m, f, "star");
  MetricFunction out(m.size());
  for (PointId x = 0; x < m.size(); ++x) {
    Rat sup = m.dist(x, 0) - f[0];
    for (PointId z = 1; z < m.size(); ++z) sup = std::max(sup, Rat(m.dist(x, z) - f[z]));
    out[x] = sup;
  }
  return out;
}

MetricFunction q_step(const FinMetric& m, const MetricFunction& f) {
  MetricFunction s = star(m, f);
  for (PointId x = 0; x < m.size(); ++x) s[x] = (f[x] + s[x]) / 2;
  return s;
}

MetricFunction extremalize_greedy(const FinMetric& m, const MetricFunction& f,
                                  const std::vector<PointId>& order) {
  require_in_delta(m, f, "extremalize_greedy");
  std::vector<PointId> ord = order;
  if (ord.empty()) {
    ord.resize(m.size());
    std::iota(ord.begin(), ord.end(), 0);
  } else {
    auto sorted = ord;
    std::sort(sorted.begin(), sorted.end());
    for (PointId i = 0; i < m.size(); ++i) {
      if (i >= static_cast<int>(sorted.size()) || sorted[i] != i) {
        throw Error(Error::Kind::InvalidInput, "order is not a permutation of the points");
      }
    }
  }
  MetricFunction g = f;
  for (PointId x : ord) {
    Rat low = 0;  // the loop pair {x,x} demands g(x) >= 0
    for (PointId y = 0; y < m.size(); ++y) {
      if (y != x) low = std::max(low, Rat(m.dist(x, y) - g[y]));
    }
    g[x] = low;
  }
  return g;
}

PMapReport p_map(const FinMetric& m, const MetricFunction& f, const PMapLimits& limits) {
  require_in_delta(m, f, "p_map");
  if (limits.max_iter < 1) {
    throw Error(Error::Kind::InvalidInput, "p_map needs max_iter >= 1");
  }
  PMapReport rep;
  MetricFunction g = f;
  for (int iter = 0; iter < limits.max_iter; ++iter) {
    MetricFunction h = q_step(m, g);
    if (h == g) {
      rep.result = std::move(g);
      rep.iterations = iter;
      rep.converged_exactly = true;
      rep.residual = 0;
      return rep;
    }
    Rat res = sup_distance(h, g);
    g = std::move(h);
    rep.iterations = iter + 1;
    rep.residual = res;
    if (res <= limits.residual_cap) break;
  }
  rep.result = extremalize_greedy(m, g);
  rep.converged_exactly = false;
  return rep;
}

PMapReport bicombing(const FinMetric& m, PointId x, PointId y, const Rat& t,
                     const PMapLimits& limits) {
  check_point(m, x);
  check_point(m, y);
  if (t < 0 || t > 1) {
    throw Error(Error::Kind::InvalidInput, "bicombing parameter t outside [0,1]");
  }
  MetricFunction mix(m.size());
  for (PointId v = 0; v < m.size(); ++v) {
    mix[v] = (1 - t) * m.dist(x, v) + t * m.dist(y, v);
  }
  return p_map(m, mix, limits);
}

MetricFunction round_extremal(const FinMetric& m, const MetricFunction& f, long grid_m) {
  if (!m.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric, "round_extremal needs an integer-valued metric");
  }
  if (grid_m < 1) {
    throw Error(Error::Kind::InvalidInput, "round_extremal needs m >= 1");
  }
  auto cls = classify_function(m, f);
  if (!cls.extremal) {
    throw Error(Error::Kind::NotExtremal, "round_extremal requires an extremal function");
  }
  const Rat eps(1, 2 * grid_m);
  const Rat step(1, grid_m);  // 2 * eps
  MetricFunction g(m.size());
  for (PointId x = 0; x < m.size(); ++x) {
    g[x] = floor_to_multiple(f[x] + eps, step);
  }
  // Any point left uncovered by A(g) sits exactly at f + eps and can be
  // lowered by one grid step without leaving Delta(X); one ascending pass
  // suffices since lowering never breaks existing tight pairs.
  auto covered = [&](PointId x) {
    for (PointId y = 0; y < m.size(); ++y) {
      if (g[x] + g[y] == m.dist(x, y)) return true;
    }
    return false;
  };
  for (PointId x = 0; x < m.size(); ++x) {
    if (!covered(x)) g[x] -= step;
  }
  return g;
}

std::vector<MetricFunction> lipschitz_extend(const FinMetric& x_space, const FinMetric& b_space,
                                             const std::vector<PointId>& a_ids,
                                             const std::vector<MetricFunction>& f_on_a) {
  if (a_ids.empty()) {
    throw Error(Error::Kind::EmptyDomain, "lipschitz_extend needs a non-empty domain A");
  }
  if (a_ids.size() != f_on_a.size()) {
    throw Error(Error::Kind::LengthMismatch, "one function per domain point required");
  }
  for (PointId a : a_ids) check_point(b_space, a);
  for (const auto& fa : f_on_a) {
    auto cls = classify_function(x_space, fa);
    if (!cls.in_delta || !cls.lip1) {
      throw Error(Error::Kind::NotInDelta, "lipschitz_extend maps into Delta1(X)");
    }
  }
  for (size_t i = 0; i < a_ids.size(); ++i) {
    for (size_t j = i + 1; j < a_ids.size(); ++j) {
      if (sup_distance(f_on_a[i], f_on_a[j]) > b_space.dist(a_ids[i], a_ids[j])) {
        throw Error(Error::Kind::NotLipschitz, "input map is not 1-Lipschitz on A");
      }
    }
  }
  std::vector<MetricFunction> out;
  out.reserve(b_space.size());
  for (PointId b = 0; b < b_space.size(); ++b) {
    MetricFunction fb(x_space.size());
    for (PointId x = 0; x < x_space.size(); ++x) {
      Rat inf = f_on_a[0][x] + b_space.dist(a_ids[0], b);
      for (size_t i = 1; i < a_ids.size(); ++i) {
        inf = std::min(inf, Rat(f_on_a[i][x] + b_space.dist(a_ids[i], b)));
      }
      fb[x] = inf;
    }
    out.push_back(std::move(fb));
  }
  return out;
}

MetricFunction extend_extremal(const FinMetric& x_space, const FinMetric& xp_space,
                               const std::vector<PointId>& x_ids, const MetricFunction& f,
                               const PMapLimits& limits) {
  if (static_cast<int>(x_ids.size()) != x_space.size()) {
    throw Error(Error::Kind::NotSubspace, "x_ids must enumerate all points of the subspace");
  }
  for (PointId id : x_ids) check_point(xp_space, id);
  for (PointId a = 0; a < x_space.size(); ++a) {
    for (PointId b = 0; b < x_space.size(); ++b) {
      if (xp_space.dist(x_ids[a], x_ids[b]) != x_space.dist(a, b)) {
        throw Error(Error::Kind::NotSubspace, "distance submatrix does not match the subspace");
      }
    }
  }
  auto cls = classify_function(x_space, f);
  if (!cls.extremal) {
    throw Error(Error::Kind::NotExtremal, "extend_extremal requires an extremal function");
  }
  MetricFunction ext(xp_space.size());
  for (PointId y = 0; y < xp_space.size(); ++y) {
    Rat inf = f[0] + xp_space.dist(x_ids[0], y);
    for (PointId a = 1; a < x_space.size(); ++a) {
      inf = std::min(inf, Rat(f[a] + xp_space.dist(x_ids[a], y)));
    }
    ext[y] = inf;
  }
  // Run the retraction with a fixed step count (no early residual stop):
  // q-steps and the greedy pass are 1-Lipschitz maps, so applying the same
  // composition to two extensions preserves their sup distance exactly.
  PMapLimits aligned = limits;
  aligned.residual_cap = 0;
  MetricFunction h = p_map(xp_space, ext, aligned).result;
  for (PointId a = 0; a < x_space.size(); ++a) {
    if (h[x_ids[a]] != f[a]) {
      throw std::logic_error("extend_extremal: restriction differs from input");
    }
  }
  return h;
}

RestrictionReport restrict_hull_check(const FinMetric& y_space,
                                      const std::vector<PointId>& x_ids,
                                      long long grid_budget) {
  if (x_ids.empty()) {
    throw Error(Error::Kind::EmptySubset, "restrict_hull_check needs a non-empty subset");
  }
  for (PointId id : x_ids) check_point(y_space, id);
  RestrictionReport rep;
  std::vector<char> in_x(y_space.size(), 0);
  for (PointId id : x_ids) in_x[id] = 1;
  rep.hypothesis_holds = true;
  for (PointId x = 0; x < y_space.size() && rep.hypothesis_holds; ++x) {
    for (PointId y = 0; y < y_space.size(); ++y) {
      bool met = false;
      for (PointId z : cone(y_space, x, y)) {
        if (in_x[z]) {
          met = true;
          break;
        }
      }
      if (!met) {
        rep.hypothesis_holds = false;
        rep.cone_witness = {x, y};
        break;
      }
    }
  }
  if (!rep.hypothesis_holds) return rep;

  if (!y_space.integer_valued()) {
    throw Error(Error::Kind::NotIntegerMetric,
                "restrict_hull_check verifies hulls for integer metrics only");
  }
  std::vector<std::vector<Rat>> sub(x_ids.size(), std::vector<Rat>(x_ids.size()));
  for (size_t a = 0; a < x_ids.size(); ++a) {
    for (size_t b = 0; b < x_ids.size(); ++b) sub[a][b] = y_space.dist(x_ids[a], x_ids[b]);
  }
  FinMetric x_space = FinMetric::require(sub);

  EnumOptions opt;
  opt.budget = grid_budget;
  auto vy = enumerate_vertices(y_space, opt);
  auto vx = enumerate_vertices(x_space, opt);

  std::vector<MetricFunction> restricted;
  for (const auto& f : vy) {
    MetricFunction r(x_ids.size());
    for (size_t a = 0; a < x_ids.size(); ++a) r[a] = f[x_ids[a]];
    restricted.push_back(std::move(r));
  }
  rep.vertex_bijection = true;
  if (vy.size() != vx.size()) {
    rep.vertex_bijection = false;
    rep.mismatch = "vertex counts differ: " + std::to_string(vy.size()) + " vs " +
                   std::to_string(vx.size());
    return rep;
  }
  auto sorted = restricted;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    rep.vertex_bijection = false;
    rep.mismatch = "restriction is not injective on vertices";
    return rep;
  }
  if (sorted != vx) {
    rep.vertex_bijection = false;
    rep.mismatch = "restricted vertex set differs from the subspace hull vertices";
    return rep;
  }
  for (size_t i = 0; i < vy.size(); ++i) {
    for (size_t j = i + 1; j < vy.size(); ++j) {
      if (sup_distance(vy[i], vy[j]) != sup_distance(restricted[i], restricted[j])) {
        rep.vertex_bijection = false;
        rep.mismatch = "restriction is not isometric on vertices " + std::to_string(i) +
                       "," + std::to_string(j);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace tightspan
