#include "tightspan/metric.hpp"

#include <algorithm>

namespace tightspan {

const char* error_kind_name(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::LengthMismatch: return "LengthMismatch";
    case Error::Kind::NotInDelta: return "NotInDelta";
    case Error::Kind::NotExtremal: return "NotExtremal";
    case Error::Kind::NotIntegerMetric: return "NotIntegerMetric";
    case Error::Kind::NotSubspace: return "NotSubspace";
    case Error::Kind::NotLipschitz: return "NotLipschitz";
    case Error::Kind::EmptyDomain: return "EmptyDomain";
    case Error::Kind::EmptySubset: return "EmptySubset";
    case Error::Kind::NotAdmissible: return "NotAdmissible";
    case Error::Kind::NotAGroup: return "NotAGroup";
    case Error::Kind::NotCellular: return "NotCellular";
    case Error::Kind::BudgetExceeded: return "BudgetExceeded";
    case Error::Kind::Disconnected: return "Disconnected";
    case Error::Kind::StabilityHypothesisFails: return "StabilityHypothesisFails";
    case Error::Kind::ZeroDimensional: return "ZeroDimensional";
    case Error::Kind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::NonSquare:
      return "matrix is not square";
    case Kind::NegativeEntry:
      return "negative entry at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::NonzeroDiagonal:
      return "d(" + std::to_string(x) + "," + std::to_string(x) + ") != 0";
    case Kind::ZeroDistance:
      return "d(" + std::to_string(x) + "," + std::to_string(y) + ") = 0 for distinct points";
    case Kind::AsymmetricPair:
      return "d(" + std::to_string(x) + "," + std::to_string(y) + ") != d(" +
             std::to_string(y) + "," + std::to_string(x) + ")";
    case Kind::TriangleViolation:
      return "d(" + std::to_string(x) + "," + std::to_string(y) + ") > d(" +
             std::to_string(x) + "," + std::to_string(via) + ") + d(" +
             std::to_string(via) + "," + std::to_string(y) + ")";
  }
  return "unknown violation";
}

MetricValidation validate_metric(const std::vector<std::vector<Rat>>& rows,
                                 std::vector<std::string> labels) {
  MetricValidation out;
  const int n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      out.violations.push_back({Violation::Kind::NonSquare});
      return out;
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (rows[x][y] < 0) out.violations.push_back({Violation::Kind::NegativeEntry, x, y});
    }
    if (rows[x][x] != 0) out.violations.push_back({Violation::Kind::NonzeroDiagonal, x});
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = x + 1; y < n; ++y) {
      if (rows[x][y] != rows[y][x]) {
        out.violations.push_back({Violation::Kind::AsymmetricPair, x, y});
      } else if (rows[x][y] == 0) {
        out.violations.push_back({Violation::Kind::ZeroDistance, x, y});
      }
    }
  }
  if (out.violations.empty()) {
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId v = 0; v < n; ++v) {
          if (v == x || v == y || x == y) continue;
          if (rows[x][y] > rows[x][v] + rows[v][y]) {
            out.violations.push_back({Violation::Kind::TriangleViolation, x, y, v});
          }
        }
      }
    }
  }
  if (!out.violations.empty()) return out;

  FinMetric m;
  m.n_ = n;
  m.d_.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    for (const auto& v : row) m.d_.push_back(v);
  }
  m.integer_valued_ =
      std::all_of(m.d_.begin(), m.d_.end(), [](const Rat& v) { return rat_is_integer(v); });
  if (m.integer_valued_) {
    m.int_d_.reserve(m.d_.size());
    for (const auto& v : m.d_) m.int_d_.push_back(rat_to_long(v));
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    out.violations.push_back({Violation::Kind::NonSquare});
    return out;
  }
  m.labels_ = std::move(labels);
  out.metric = std::move(m);
  return out;
}

FinMetric FinMetric::require(std::vector<std::vector<Rat>> rows,
                             std::vector<std::string> labels) {
  auto v = validate_metric(rows, std::move(labels));
  if (!v.ok()) {
    throw Error(Error::Kind::InvalidInput, "not a metric: " + v.violations.front().describe());
  }
  return std::move(*v.metric);
}

Rat FinMetric::eccentricity(PointId x) const {
  Rat e = 0;
  for (PointId y = 0; y < n_; ++y) e = std::max(e, dist(x, y));
  return e;
}

long FinMetric::int_eccentricity(PointId x) const {
  long e = 0;
  for (PointId y = 0; y < n_; ++y) e = std::max(e, idist(x, y));
  return e;
}

Rat FinMetric::diameter() const {
  Rat e = 0;
  for (PointId x = 0; x < n_; ++x) e = std::max(e, eccentricity(x));
  return e;
}

void check_point(const FinMetric& m, PointId x) {
  if (x < 0 || x >= m.size()) {
    throw Error(Error::Kind::InvalidInput, "point id out of range: " + std::to_string(x));
  }
}

void check_length(const FinMetric& m, const MetricFunction& f) {
  if (static_cast<int>(f.size()) != m.size()) {
    throw Error(Error::Kind::LengthMismatch,
                "function has length " + std::to_string(f.size()) + ", expected " +
                    std::to_string(m.size()));
  }
}

std::vector<PointId> interval(const FinMetric& m, PointId x, PointId y) {
  check_point(m, x);
  check_point(m, y);
  std::vector<PointId> out;
  if (m.integer_valued()) {
    const long dxy = m.idist(x, y);
    for (PointId v = 0; v < m.size(); ++v) {
      if (m.idist(x, v) + m.idist(v, y) == dxy) out.push_back(v);
    }
  } else {
    const Rat& dxy = m.dist(x, y);
    for (PointId v = 0; v < m.size(); ++v) {
      if (m.dist(x, v) + m.dist(v, y) == dxy) out.push_back(v);
    }
  }
  return out;
}

std::vector<PointId> cone(const FinMetric& m, PointId x, PointId v) {
  check_point(m, x);
  check_point(m, v);
  std::vector<PointId> out;
  if (m.integer_valued()) {
    const long dxv = m.idist(x, v);
    for (PointId y = 0; y < m.size(); ++y) {
      if (dxv + m.idist(v, y) == m.idist(x, y)) out.push_back(y);
    }
  } else {
    const Rat& dxv = m.dist(x, v);
    for (PointId y = 0; y < m.size(); ++y) {
      if (dxv + m.dist(v, y) == m.dist(x, y)) out.push_back(y);
    }
  }
  return out;
}

Rat gromov_product(const FinMetric& m, PointId x, PointId y, PointId z) {
  check_point(m, x);
  check_point(m, y);
  check_point(m, z);
  return (m.dist(z, x) + m.dist(z, y) - m.dist(x, y)) / 2;
}

ClassifyResult classify_function(const FinMetric& m, const MetricFunction& f) {
  check_length(m, f);
  ClassifyResult r;
  r.in_delta = true;
  for (PointId x = 0; x < m.size() && r.in_delta; ++x) {
    for (PointId y = x; y < m.size(); ++y) {
      if (f[x] + f[y] < m.dist(x, y)) {
        r.in_delta = false;
        r.delta_violation = {x, y};
        break;
      }
    }
  }
  r.lip1 = true;
  for (PointId x = 0; x < m.size() && r.lip1; ++x) {
    for (PointId y = x + 1; y < m.size(); ++y) {
      if (rat_abs(f[x] - f[y]) > m.dist(x, y)) {
        r.lip1 = false;
        r.lip_violation = {x, y};
        break;
      }
    }
  }
  if (r.in_delta) {
    r.extremal = true;
    for (PointId x = 0; x < m.size(); ++x) {
      Rat sup = m.dist(x, 0) - f[0];
      for (PointId y = 1; y < m.size(); ++y) sup = std::max(sup, Rat(m.dist(x, y) - f[y]));
      if (sup != f[x]) {
        r.extremal = false;
        r.slack_point = x;
        break;
      }
    }
  }
  return r;
}

Rat sup_distance(const MetricFunction& f, const MetricFunction& g) {
  if (f.size() != g.size()) {
    throw Error(Error::Kind::LengthMismatch, "sup_distance on functions of unequal length");
  }
  Rat out = 0;
  for (size_t i = 0; i < f.size(); ++i) out = std::max(out, rat_abs(f[i] - g[i]));
  return out;
}

MetricFunction embed(const FinMetric& m, PointId z) {
  check_point(m, z);
  MetricFunction f(m.size());
  for (PointId x = 0; x < m.size(); ++x) f[x] = m.dist(z, x);
  return f;
}

std::vector<PointId> median_points(const FinMetric& m, PointId x, PointId y, PointId z) {
  auto ixy = interval(m, x, y);
  auto iyz = interval(m, y, z);
  auto izx = interval(m, z, x);
  std::vector<PointId> tmp, out;
  std::set_intersection(ixy.begin(), ixy.end(), iyz.begin(), iyz.end(), std::back_inserter(tmp));
  std::set_intersection(tmp.begin(), tmp.end(), izx.begin(), izx.end(), std::back_inserter(out));
  return out;
}

}  // namespace tightspan
