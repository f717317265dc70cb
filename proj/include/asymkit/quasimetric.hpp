#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymkit/error.hpp"
#include "asymkit/rational.hpp"

namespace asymkit {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// First axiom failure found while scanning a candidate distance matrix.
struct SpaceViolation {
  enum class Kind { Shape, NegativeEntry, NonzeroDiagonal, Separation, Triangle };
  Kind kind;
  /// Shape: empty. Negative/diagonal/separation: (i, j). Triangle: (i, k, j)
  /// with d[i][j] > d[i][k] + d[k][j].
  std::vector<std::size_t> indices;
  std::string message;
};

std::string to_string(SpaceViolation::Kind k);

class SpaceValidationError : public ValidationError {
 public:
  explicit SpaceValidationError(SpaceViolation v) : ValidationError(v.message), violation_(std::move(v)) {}
  const SpaceViolation& violation() const { return violation_; }

 private:
  SpaceViolation violation_;
};

/// Finite quasi-hemi-metric space: d(x,x) = 0, the triangle inequality, and
/// d(x,y) = d(y,x) = 0 only for x = y. Entry d[i][j] is the distance from
/// point i to point j. Instances are always valid.
class FiniteQuasiMetricSpace {
 public:
  /// Throws SpaceValidationError with the first violation found.
  static FiniteQuasiMetricSpace validate(Matrix d, std::vector<std::string> labels = {},
                                         std::size_t base_point = 0);

  static std::optional<SpaceViolation> find_violation(const Matrix& d);

  std::size_t size() const { return d_.size(); }
  const Rational& d(std::size_t i, std::size_t j) const { return d_[i][j]; }
  const Matrix& matrix() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t base_point() const { return base_point_; }

  /// Separation in the one-sided sense: d(x,y) = 0 implies x = y.
  bool is_quasi_metric() const;
  bool is_symmetric() const;

  std::optional<std::size_t> index_of(const std::string& label) const;

 private:
  FiniteQuasiMetricSpace() = default;

  Matrix d_;
  std::vector<std::string> labels_;
  std::size_t base_point_ = 0;
};

/// c = min d(x,y)/d(y,x) over ordered pairs with d(y,x) > 0, and c_bar the
/// max of the same ratios. On an empty ratio set both are 1 and
/// `empty_ratio_set` is raised. The reciprocal law c_bar = 1/c is only
/// guaranteed when `is_quasi_metric`.
struct SymmetryIndexReport {
  Rational c = 1;
  Extended c_bar = Rational{1};
  std::optional<IndexPair> witness;
  std::optional<IndexPair> c_bar_witness;
  bool is_metric = true;
  bool is_quasi_metric = true;
  bool empty_ratio_set = false;
};

SymmetryIndexReport index_of_symmetry(const FiniteQuasiMetricSpace& space);

/// d_bar(x,y) = d(y,x).
FiniteQuasiMetricSpace conjugate(const FiniteQuasiMetricSpace& space);

/// d_s(x,y) = max(d(x,y), d(y,x)).
FiniteQuasiMetricSpace symmetrize(const FiniteQuasiMetricSpace& space);

enum class BallKind { Open, Closed };

/// Indices y with d(center, y) < radius (open) or <= radius (closed).
std::vector<std::size_t> ball(const FiniteQuasiMetricSpace& space, std::size_t center,
                              const Rational& radius, BallKind kind);

}  // namespace asymkit
