#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tightspan/groups.hpp"
#include "tightspan/hull.hpp"

using namespace tightspan;
using namespace tightspan::testing;

namespace {

MetricFunction fn(std::vector<Rat> values) { return values; }

bool leq_pointwise(const MetricFunction& a, const MetricFunction& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("star examples") {
  auto two = two_point();
  CHECK(star(two, fn({Rat(2), Rat(2)})) == fn({Rat(-1), Rat(-1)}));
  CHECK(star(two, fn({Rat(0), Rat(1)})) == fn({Rat(0), Rat(1)}));
  auto m3 = k3();
  CHECK(star(m3, fn({Rat(1), Rat(1), Rat(1)})) == fn({Rat(0), Rat(0), Rat(0)}));
  CHECK_THROWS_AS(star(m3, fn({Rat(0), Rat(0), Rat(0)})), Error);
}

TEST_CASE("q_step examples and 1-Lipschitz property") {
  auto two = two_point();
  CHECK(q_step(two, fn({Rat(2), Rat(2)})) == fn({Rat(1, 2), Rat(1, 2)}));
  auto m3 = k3();
  CHECK(q_step(m3, fn({Rat(1), Rat(1), Rat(1)})) ==
        fn({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(q_step(m3, fn({Rat(0), Rat(1), Rat(1)})) == fn({Rat(0), Rat(1), Rat(1)}));

  for (const auto& space : corpus()) {
    const auto& m = space.metric;
    auto samples = sample_delta(m, 12, 23);
    for (size_t i = 0; i < samples.size(); ++i) {
      auto qf = q_step(m, samples[i]);
      CHECK(classify_function(m, qf).in_delta);
      CHECK(leq_pointwise(qf, samples[i]));
      for (size_t j = 0; j < i; ++j) {
        CHECK(sup_distance(q_step(m, samples[i]), q_step(m, samples[j])) <=
              sup_distance(samples[i], samples[j]));
      }
    }
  }
}

TEST_CASE("p_map reaches extremal functions") {
  auto two = two_point();
  auto rep = p_map(two, fn({Rat(2), Rat(2)}));
  CHECK(rep.result == fn({Rat(1, 2), Rat(1, 2)}));
  CHECK(rep.iterations == 1);
  CHECK(rep.converged_exactly);
  CHECK(rep.residual == 0);

  rep = p_map(two, fn({Rat(0), Rat(1)}));
  CHECK(rep.result == fn({Rat(0), Rat(1)}));
  CHECK(rep.iterations == 0);
  CHECK(rep.converged_exactly);

  auto m3 = k3();
  rep = p_map(m3, fn({Rat(1), Rat(1), Rat(1)}));
  CHECK(rep.result == fn({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(rep.converged_exactly);

  for (const auto& space : corpus()) {
    const auto& m = space.metric;
    for (const auto& f : sample_delta(m, 20, 37)) {
      auto r = p_map(m, f);
      CHECK(classify_function(m, r.result).extremal);
      CHECK(leq_pointwise(r.result, f));
      if (!r.converged_exactly) CHECK(r.residual > 0);
    }
  }
}

TEST_CASE("extremalize_greedy examples and idempotence") {
  auto m3 = k3();
  CHECK(extremalize_greedy(m3, fn({Rat(5), Rat(5), Rat(5)}), {0, 1, 2}) ==
        fn({Rat(0), Rat(1), Rat(1)}));
  CHECK(extremalize_greedy(m3, fn({Rat(0), Rat(1), Rat(1)})) ==
        fn({Rat(0), Rat(1), Rat(1)}));
  auto two = two_point();
  CHECK(extremalize_greedy(two, fn({Rat(1), Rat(1)}), {0, 1}) == fn({Rat(0), Rat(1)}));
  CHECK(extremalize_greedy(two, fn({Rat(1), Rat(1)}), {1, 0}) == fn({Rat(1), Rat(0)}));
  CHECK_THROWS_AS(extremalize_greedy(two, fn({Rat(1), Rat(1)}), {0, 0}), Error);

  for (const auto& space : corpus()) {
    const auto& m = space.metric;
    for (const auto& f : sample_delta(m, 10, 51)) {
      auto g = extremalize_greedy(m, f);
      CHECK(classify_function(m, g).extremal);
      CHECK(leq_pointwise(g, f));
      CHECK(extremalize_greedy(m, g) == g);
    }
  }
}

TEST_CASE("bicombing endpoints, speed and convexity") {
  auto two = two_point();
  CHECK(bicombing(two, 0, 1, Rat(0)).result == embed(two, 0));
  CHECK(bicombing(two, 0, 1, Rat(1)).result == embed(two, 1));
  CHECK(bicombing(two, 0, 1, Rat(1, 2)).result == fn({Rat(1, 2), Rat(1, 2)}));

  auto c4 = generate("cycle", {4}).metric;
  CHECK(bicombing(c4, 0, 2, Rat(1, 2)).result == fn({Rat(1), Rat(1), Rat(1), Rat(1)}));

  const std::vector<Rat> params = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  for (const auto& space : corpus()) {
    const auto& m = space.metric;
    if (m.size() > 6) continue;
    for (PointId x = 0; x < m.size(); ++x) {
      for (PointId y = 0; y < m.size(); ++y) {
        // constant speed and symmetry, when convergence is exact
        std::vector<PMapReport> runs;
        bool exact = true;
        for (const auto& t : params) {
          runs.push_back(bicombing(m, x, y, t));
          exact = exact && runs.back().converged_exactly;
        }
        if (!exact) continue;
        for (size_t s = 0; s < params.size(); ++s) {
          for (size_t t = s; t < params.size(); ++t) {
            CHECK(sup_distance(runs[s].result, runs[t].result) ==
                  (params[t] - params[s]) * m.dist(x, y));
          }
          auto rev = bicombing(m, y, x, 1 - params[s]);
          if (rev.converged_exactly) CHECK(rev.result == runs[s].result);
        }
      }
    }
  }

  // convexity across two segments
  auto m = five_point_example();
  for (const auto& t : params) {
    for (PointId x = 0; x < m.size(); ++x) {
      for (PointId y = 0; y < m.size(); ++y) {
        auto a = bicombing(m, x, y, t);
        auto b = bicombing(m, (x + 1) % m.size(), (y + 2) % m.size(), t);
        if (!a.converged_exactly || !b.converged_exactly) continue;
        Rat bound = (1 - t) * m.dist(x, (x + 1) % m.size()) +
                    t * m.dist(y, (y + 2) % m.size());
        CHECK(sup_distance(a.result, b.result) <= bound);
      }
    }
  }

  // equivariance under induced isometries
  auto c6 = generate("cycle", {6}).metric;
  auto group = isometry_group(c6);
  for (const auto& L : group) {
    auto a = bicombing(c6, 0, 2, Rat(1, 4));
    auto b = bicombing(c6, L[0], L[2], Rat(1, 4));
    if (a.converged_exactly && b.converged_exactly) {
      CHECK(b.result == induced_map(L, a.result));
    }
  }
}

TEST_CASE("bicombing convexity within the residual cap on inexact runs") {
  PMapLimits limits;
  const Rat slack = 2 * limits.residual_cap;
  const std::vector<Rat> params = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  for (const auto& spec : {"path:5", "complete:4", "cycle:5"}) {
    auto m = generate_spec(spec).metric;
    int inexact_pairs = 0;
    for (PointId x = 0; x < m.size(); ++x) {
      for (PointId y = 0; y < m.size(); ++y) {
        for (PointId xp = 0; xp < m.size(); ++xp) {
          for (const auto& t : params) {
            auto a = bicombing(m, x, y, t, limits);
            auto b = bicombing(m, xp, y, t, limits);
            if (a.converged_exactly && b.converged_exactly) continue;
            ++inexact_pairs;
            Rat bound = (1 - t) * m.dist(x, xp);
            CHECK(sup_distance(a.result, b.result) <= bound + slack);
          }
        }
      }
    }
    CHECK(inexact_pairs > 0);
  }
}

TEST_CASE("round_extremal") {
  auto two = two_point();
  auto f = fn({Rat(3, 10), Rat(7, 10)});
  auto rounded = round_extremal(two, f, 1);
  CHECK(classify_function(two, rounded).extremal);
  CHECK(sup_distance(f, rounded) <= Rat(1, 2));
  bool is01 = rounded == fn({Rat(0), Rat(1)}) || rounded == fn({Rat(1), Rat(0)});
  CHECK(is01);

  auto m3 = k3();
  auto half = fn({Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(round_extremal(m3, half, 2) == half);
  CHECK(round_extremal(m3, fn({Rat(0), Rat(1), Rat(1)}), 1) == fn({Rat(0), Rat(1), Rat(1)}));
  CHECK_THROWS_AS(round_extremal(m3, fn({Rat(5), Rat(5), Rat(5)}), 2), Error);

  for (const auto& space : corpus()) {
    const auto& m = space.metric;
    for (const auto& f0 : sample_delta(m, 6, 77)) {
      auto g = p_map(m, f0).result;
      for (long grid : {1L, 2L, 3L, 5L}) {
        auto r = round_extremal(m, g, grid);
        CHECK(classify_function(m, r).extremal);
        CHECK(sup_distance(g, r) <= Rat(1, 2 * grid));
        for (const auto& v : r) CHECK(rat_is_integer(v * grid));
      }
    }
  }
}

TEST_CASE("lipschitz_extend") {
  auto m3 = k3();
  auto path = generate("path", {3}).metric;

  // single-point domain: shift by the distance
  auto ext = lipschitz_extend(m3, path, {0}, {embed(m3, 0)});
  REQUIRE(ext.size() == 3);
  CHECK(ext[0] == embed(m3, 0));
  for (PointId b = 0; b < 3; ++b) {
    for (PointId x = 0; x < 3; ++x) {
      CHECK(ext[b][x] == embed(m3, 0)[x] + path.dist(0, b));
    }
  }

  // two-point domain restricted back to itself
  auto two_ext = lipschitz_extend(m3, path, {0, 2}, {embed(m3, 0), embed(m3, 1)});
  CHECK(two_ext[0] == embed(m3, 0));
  CHECK(two_ext[2] == embed(m3, 1));
  for (PointId x = 0; x < 3; ++x) {
    Rat expect = std::min(Rat(embed(m3, 0)[x] + 1), Rat(embed(m3, 1)[x] + 1));
    CHECK(two_ext[1][x] == expect);
  }
  // the extension is 1-Lipschitz into Delta1
  for (PointId b = 0; b < 3; ++b) {
    auto cls = classify_function(m3, two_ext[b]);
    CHECK(cls.in_delta);
    CHECK(cls.lip1);
    for (PointId c = 0; c < 3; ++c) {
      CHECK(sup_distance(two_ext[b], two_ext[c]) <= path.dist(b, c));
    }
  }

  CHECK_THROWS_AS(lipschitz_extend(m3, path, {}, {}), Error);
  CHECK_THROWS_AS(lipschitz_extend(m3, path, {0, 2}, {embed(m3, 0), fn({Rat(9), Rat(9), Rat(9)})}),
                  Error);
}

TEST_CASE("extend_extremal") {
  auto two = two_point(2);
  auto path = generate("path", {3}).metric;  // a - m - b with d(a,b) = 2

  CHECK(extend_extremal(two, two, {0, 1}, fn({Rat(1), Rat(1)})) == fn({Rat(1), Rat(1)}));

  auto h = extend_extremal(two, path, {0, 2}, fn({Rat(1), Rat(1)}));
  CHECK(h == fn({Rat(1), Rat(0), Rat(1)}));

  CHECK_THROWS_AS(extend_extremal(two, path, {0, 1}, fn({Rat(1), Rat(1)})), Error);
  CHECK_THROWS_AS(extend_extremal(two, path, {0, 2}, fn({Rat(2), Rat(2)})), Error);

  // distance preservation of the extension operator on extremal pairs;
  // W_2 sits in W_3 as the bottom face
  auto w2 = generate("hypercube", {2}).metric;
  auto w3 = generate("hypercube", {3}).metric;
  std::vector<PointId> ids = {0, 1, 2, 3};
  for (PointId a = 0; a < 4; ++a) {
    for (PointId b = 0; b < 4; ++b) {
      CHECK(w3.dist(a, b) == w2.dist(a, b));
    }
  }
  std::vector<MetricFunction> extremals;
  for (const auto& f0 : sample_delta(w2, 8, 99)) extremals.push_back(p_map(w2, f0).result);
  for (size_t i = 0; i < extremals.size(); ++i) {
    auto hi = extend_extremal(w2, w3, ids, extremals[i]);
    CHECK(classify_function(w3, hi).extremal);
    for (size_t j = 0; j < i; ++j) {
      auto hj = extend_extremal(w2, w3, ids, extremals[j]);
      CHECK(sup_distance(hi, hj) == sup_distance(extremals[i], extremals[j]));
    }
  }
}

TEST_CASE("restrict_hull_check") {
  auto path = generate("path", {3}).metric;
  auto all = restrict_hull_check(path, {0, 1, 2});
  CHECK(all.hypothesis_holds);
  CHECK(all.vertex_bijection);

  // the hypothesis holds for {a,b} in a-m-b, but the complex structures
  // disagree: E(path) keeps d_m as a vertex, the segment E({a,b}) does not
  auto sub = restrict_hull_check(path, {0, 2});
  CHECK(sub.hypothesis_holds);
  CHECK(!sub.vertex_bijection);
  CHECK(!sub.mismatch.empty());

  auto m3 = k3();
  auto single = restrict_hull_check(m3, {0});
  CHECK(!single.hypothesis_holds);
  REQUIRE(single.cone_witness.has_value());
  {
    auto [x, y] = *single.cone_witness;
    auto c = cone(m3, x, y);
    CHECK(!std::binary_search(c.begin(), c.end(), 0));
  }

  CHECK_THROWS_AS(restrict_hull_check(m3, {}), Error);
}
