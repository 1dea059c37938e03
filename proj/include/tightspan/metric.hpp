#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightspan/error.hpp"
#include "tightspan/rational.hpp"

namespace tightspan {

using PointId = int;

/// A real-valued function on the points of a FinMetric, indexed by PointId.
using MetricFunction = std::vector<Rat>;

/// One violated metric axiom found by validate_metric.
struct Violation {
  enum class Kind {
    NonSquare,
    NegativeEntry,
    NonzeroDiagonal,
    ZeroDistance,
    AsymmetricPair,
    TriangleViolation,
  };
  Kind kind;
  PointId x = -1;
  PointId y = -1;
  PointId via = -1;  // the middle point of a violated triangle

  std::string describe() const;
};

struct MetricValidation;

/// Finite metric space with an exact rational distance matrix.
/// Immutable after construction; safe for concurrent reads.
class FinMetric {
 public:
  FinMetric() = default;  // the empty space; filled in by validate_metric

  int size() const { return n_; }
  const Rat& dist(PointId x, PointId y) const { return d_[idx(x, y)]; }
  bool integer_valued() const { return integer_valued_; }

  /// Integer distance fast path; only valid when integer_valued().
  long idist(PointId x, PointId y) const { return int_d_[idx(x, y)]; }

  Rat eccentricity(PointId x) const;
  Rat diameter() const;
  long int_eccentricity(PointId x) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId x) const { return labels_[x]; }

  /// Validates all metric axioms and builds the space; throws
  /// Error(InvalidInput) listing the first violation if any fail.
  static FinMetric require(std::vector<std::vector<Rat>> rows,
                           std::vector<std::string> labels = {});

  friend MetricValidation validate_metric(const std::vector<std::vector<Rat>>& rows,
                                          std::vector<std::string> labels);

 private:
  size_t idx(PointId x, PointId y) const { return static_cast<size_t>(x) * n_ + y; }

  int n_ = 0;
  std::vector<Rat> d_;
  std::vector<long> int_d_;  // populated iff integer_valued_
  bool integer_valued_ = false;
  std::vector<std::string> labels_;
};

/// Result of validate_metric: either a space or the full list of violations.
struct MetricValidation {
  std::optional<FinMetric> metric;
  std::vector<Violation> violations;
  bool ok() const { return metric.has_value(); }
};

/// Checks every metric axiom on a square rational matrix and reports every
/// violated pair/triple. d(x,y)=0 for x!=y is rejected (strict metric).
MetricValidation validate_metric(const std::vector<std::vector<Rat>>& rows,
                                 std::vector<std::string> labels = {});

/// Thrown by input parsing when a distance matrix fails validation; carries
/// the full violation list for machine-readable error output.
class MetricRejected : public Error {
 public:
  explicit MetricRejected(std::vector<Violation> violations)
      : Error(Kind::InvalidInput, "metric axioms violated"),
        violations(std::move(violations)) {}

  std::vector<Violation> violations;
};

/// I(x,y): points v with d(x,v) + d(v,y) = d(x,y). Always contains x and y.
std::vector<PointId> interval(const FinMetric& m, PointId x, PointId y);

/// C(x,v): points y with v in I(x,y). Always contains v; cone(v,v) = X.
std::vector<PointId> cone(const FinMetric& m, PointId x, PointId v);

/// Gromov product (x|y)_z = (d(z,x) + d(z,y) - d(x,y)) / 2.
Rat gromov_product(const FinMetric& m, PointId x, PointId y, PointId z);

/// Membership report for f with respect to Delta(X), Lip1 and E(X).
struct ClassifyResult {
  bool in_delta = false;
  bool lip1 = false;
  bool extremal = false;
  // witness for the first failed property, when applicable
  std::optional<std::pair<PointId, PointId>> delta_violation;
  std::optional<std::pair<PointId, PointId>> lip_violation;
  std::optional<PointId> slack_point;  // point where sup_y(d(x,y)-f(y)) < f(x)
};

/// in_delta iff f(x)+f(y) >= d(x,y) for all pairs including x = y (so f >= 0);
/// extremal iff additionally f(x) = max_y(d(x,y) - f(y)) at every point.
ClassifyResult classify_function(const FinMetric& m, const MetricFunction& f);

/// Sup metric ||f - g||_inf, exact.
Rat sup_distance(const MetricFunction& f, const MetricFunction& g);

/// The distance function d_z; the canonical embedding e(z) into E(X).
MetricFunction embed(const FinMetric& m, PointId z);

/// I(x,y) ∩ I(y,z) ∩ I(z,x) within X; empty iff the triple has no median.
std::vector<PointId> median_points(const FinMetric& m, PointId x, PointId y, PointId z);

void check_point(const FinMetric& m, PointId x);
void check_length(const FinMetric& m, const MetricFunction& f);

}  // namespace tightspan
