#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymkit/error.hpp"
#include "asymkit/polyhedron.hpp"
#include "asymkit/quasimetric.hpp"
#include "asymkit/rational.hpp"

namespace asymkit {

struct NormViolation {
  enum class Kind { Shape, Nonnegativity, Separation };
  Kind kind;
  /// Nonnegativity: x with max_i <a_i, x> < 0. Separation: nonzero x with
  /// <a_i, x> = 0 for all i, so that |x| = |-x| = 0.
  Vector witness;
  std::string message;
};

std::string to_string(NormViolation::Kind k);

class NormValidationError : public ValidationError {
 public:
  explicit NormValidationError(NormViolation v) : ValidationError(v.message), violation_(std::move(v)) {}
  const NormViolation& violation() const { return violation_; }

 private:
  NormViolation violation_;
};

/// Asymmetric norm |x| = max_i <a_i, x> on Q^dim.
///
/// Positive homogeneity and subadditivity hold for any nonempty family of
/// covectors. Validation adds the remaining axioms:
///   - nonnegativity: 0 in conv{a_i}, checked by LP;
///   - separation: |x| = |-x| = 0 only at 0, i.e. the a_i span the dual space.
class PolyhedralAsymNorm {
 public:
  static PolyhedralAsymNorm validate(Matrix functionals, std::size_t dim);
  static std::optional<NormViolation> find_violation(const Matrix& functionals, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Matrix& functionals() const { return functionals_; }

  Rational operator()(const Vector& x) const;

 private:
  PolyhedralAsymNorm() = default;

  std::size_t dim_ = 0;
  Matrix functionals_;
};

Rational evaluate(const PolyhedralAsymNorm& norm, const Vector& x);

/// |x|_s = max(|x|, |-x|).
Rational associated_norm(const PolyhedralAsymNorm& norm, const Vector& x);

/// V-representation of the closed unit ball B = {x : <a_i, x> <= 1}.
struct BallGeometry {
  Matrix vertices;
  Matrix rays;
  bool bounded = true;
};

BallGeometry ball_geometry(const PolyhedralAsymNorm& norm, const EnumerationOptions& options = {});

/// Index of symmetry c = inf_{|x|=1} |-x| and its conjugate
/// c_bar = sup_{|x|=1} |-x|.
///
/// Bounded ball: |-.| is a maximum of linear forms, so its maximum over the
/// polytope B is attained at a vertex; by positive homogeneity that maximum
/// equals sup_{|x|=1} |-x| = c_bar, and the ratio set {|-x|/|x|} is closed
/// under reciprocals, giving c = 1/c_bar.
/// Unbounded ball: a recession ray r has |r| = 0 < |-r|, so c = 0 with r as
/// witness; c_bar is then found by LP over the faces of B.
struct NormIndexReport {
  Rational c = 1;
  Extended c_bar = Rational{1};
  std::optional<Vector> witness_vertex;
  std::optional<Vector> witness_ray;
  bool bounded = true;
  bool exact = true;
  bool zero_space = false;
};

NormIndexReport index_exact(const PolyhedralAsymNorm& norm, const EnumerationOptions& options = {});

/// c by LP alone: min over faces {a_j.x = 1} of B of min |-x|. Does not use
/// vertex enumeration; serves as a second route to index_exact.
Rational index_by_faces(const PolyhedralAsymNorm& norm);

/// sup_{|x|=1} |-x| by LP over the faces of B.
Extended conjugate_index_by_faces(const PolyhedralAsymNorm& norm);

enum class SamplingScheme { RandomDirections, AngularGrid };

std::string to_string(SamplingScheme s);

struct SamplingOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  SamplingScheme scheme = SamplingScheme::RandomDirections;
};

/// Monte Carlo upper bound on c. Directions are rounded to rationals with
/// denominator 2^30; the sample minimizing |-u|/|u| is selected in floating
/// point and its ratio then recomputed exactly, so `value` is a ratio attained
/// by an actual point and therefore never below the exact index.
struct SampledIndex {
  Rational value = 1;
  double approx = 1.0;
  std::optional<Vector> best_direction;
  std::size_t samples = 0;
  std::size_t used = 0;
  std::uint64_t seed = 0;
  SamplingScheme scheme = SamplingScheme::RandomDirections;
};

SampledIndex index_sampled(const PolyhedralAsymNorm& norm, const SamplingOptions& options);

/// index_exact within the cap; otherwise the sampled upper bound flagged
/// exact = false.
NormIndexReport index_with_fallback(const PolyhedralAsymNorm& norm, const EnumerationOptions& options,
                                    const SamplingOptions& sampling);

/// |p|_flat = sup{<p, x> : |x| <= 1}, computed by LP over the unit ball.
/// When infinite, `ray` satisfies <p, r> > 0 and |r| = 0.
struct FlatNorm {
  Extended value = Rational{0};
  Vector maximizer;
  Vector ray;
};

FlatNorm flat_norm(const PolyhedralAsymNorm& norm, const Vector& p);

/// Gauge of conv{a_i} at p: min sum(lambda) with p = sum lambda_i a_i,
/// lambda >= 0. This is the LP dual of flat_norm and agrees with it whenever
/// finite. When p lies outside cone{a_i}, `ray` is a Farkas separator, which
/// is itself a recession direction of B with <p, r> > 0.
struct GaugeNorm {
  Extended value = Rational{0};
  Vector coefficients;
  Vector ray;
};

GaugeNorm flat_norm_gauge(const PolyhedralAsymNorm& norm, const Vector& p);

/// Membership of p in the dual cone X^flat = cone{a_i}. A linear p satisfies
/// p <= C |.| pointwise iff p/C lies in conv{a_i}, so the quantifier over x
/// reduces to a finite cone test.
struct DualConeMembership {
  bool member = false;
  Extended flat = Rational{0};
  Vector ray;
};

DualConeMembership dual_cone_membership(const PolyhedralAsymNorm& norm, const Vector& p);

/// X^flat = cone{a_i} is a vector space iff every -a_i is a member. On false,
/// `p` is the first generator whose negation is not, and `ray` certifies it.
struct DualConeStructure {
  bool is_vector_space = true;
  std::optional<Vector> p;
  std::optional<Vector> ray;
};

DualConeStructure dual_cone_is_vector_space(const PolyhedralAsymNorm& norm);

/// |p|_* = sup{<p, x> : |x|_s <= 1}, the dual norm of the associated norm.
Rational associated_dual_norm(const PolyhedralAsymNorm& norm, const Vector& p);

/// N-dimensional truncation of the weighted asymmetric sup norm:
/// |x| = max_i max(x_i, -x_i / i), built from the functionals e_i and -e_i/i.
PolyhedralAsymNorm example_weighted_sup(std::size_t n);

/// Finite induced space d[i][j] = |p_j - p_i|. Throws SpaceValidationError
/// when two points are at mutual distance zero.
FiniteQuasiMetricSpace induced_space_sample(const PolyhedralAsymNorm& norm, const Matrix& points,
                                            std::vector<std::string> labels = {});

}  // namespace asymkit
