#include "asymkit/asymnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asymkit/linalg.hpp"
#include "asymkit/lp.hpp"
#include "asymkit/random.hpp"

namespace asymkit {

namespace {

Vector append(Vector v, const Rational& x) {
  v.push_back(x);
  return v;
}

void require_dim(const PolyhedralAsymNorm& norm, const Vector& x, const char* what) {
  if (x.size() != norm.dim()) throw MalformedInput(std::string(what) + ": dimension mismatch");
}

std::vector<Constraint> unit_ball_rows(const PolyhedralAsymNorm& norm) {
  std::vector<Constraint> rows;
  for (const auto& a : norm.functionals()) rows.push_back({a, Relation::LessEqual, 1});
  return rows;
}

}  // namespace

std::string to_string(NormViolation::Kind k) {
  switch (k) {
    case NormViolation::Kind::Shape: return "shape";
    case NormViolation::Kind::Nonnegativity: return "nonnegativity";
    case NormViolation::Kind::Separation: return "separation";
  }
  return "?";
}

std::string to_string(SamplingScheme s) {
  return s == SamplingScheme::AngularGrid ? "angular_grid" : "random_directions";
}

std::optional<NormViolation> PolyhedralAsymNorm::find_violation(const Matrix& functionals, std::size_t dim) {
  using Kind = NormViolation::Kind;
  if (functionals.empty()) return NormViolation{Kind::Shape, {}, "at least one functional is required"};
  for (const auto& a : functionals) {
    if (a.size() != dim) return NormViolation{Kind::Shape, {}, "functional dimension does not match dim"};
  }
  // max s  s.t.  <a_i, x> + s <= 0, s <= 1.  Positive optimum <=> 0 not in conv{a_i}.
  LPProblem lp;
  lp.objective = unit_vector(dim + 1, dim);
  for (const auto& a : functionals) lp.constraints.push_back({append(a, 1), Relation::LessEqual, 0});
  lp.constraints.push_back({unit_vector(dim + 1, dim), Relation::LessEqual, 1});
  const LPOutcome res = lp_solve(lp);
  if (res.status == LPStatus::Optimal && res.optimum.sign() > 0) {
    Vector x(res.point.begin(), res.point.end() - 1);
    return NormViolation{Kind::Nonnegativity, x,
                         "nonnegativity fails: |x| < 0 at x = " + to_string(x)};
  }
  const Matrix kernel = kernel_basis(functionals, dim);
  if (!kernel.empty()) {
    return NormViolation{Kind::Separation, kernel.front(),
                         "separation fails: |x| = |-x| = 0 at x = " + to_string(kernel.front())};
  }
  return std::nullopt;
}

PolyhedralAsymNorm PolyhedralAsymNorm::validate(Matrix functionals, std::size_t dim) {
  if (auto v = find_violation(functionals, dim)) throw NormValidationError(std::move(*v));
  PolyhedralAsymNorm n;
  n.dim_ = dim;
  n.functionals_ = std::move(functionals);
  return n;
}

Rational PolyhedralAsymNorm::operator()(const Vector& x) const {
  if (x.size() != dim_) throw MalformedInput("evaluate: dimension mismatch");
  Rational best = dot(functionals_.front(), x);
  for (std::size_t i = 1; i < functionals_.size(); ++i) best = std::max(best, dot(functionals_[i], x));
  return best;
}

Rational evaluate(const PolyhedralAsymNorm& norm, const Vector& x) { return norm(x); }

Rational associated_norm(const PolyhedralAsymNorm& norm, const Vector& x) { return std::max(norm(x), norm(-x)); }

BallGeometry ball_geometry(const PolyhedralAsymNorm& norm, const EnumerationOptions& options) {
  std::vector<Halfspace> hs;
  for (const auto& a : norm.functionals()) hs.push_back({a, 1});
  PolyhedronVR p = enumerate_vertices_rays(hs, norm.dim(), options);
  BallGeometry g;
  g.bounded = p.bounded();
  g.vertices = std::move(p.vertices);
  g.rays = std::move(p.rays);
  return g;
}

NormIndexReport index_exact(const PolyhedralAsymNorm& norm, const EnumerationOptions& options) {
  NormIndexReport r;
  if (norm.dim() == 0) {
    r.zero_space = true;
    return r;
  }
  const BallGeometry g = ball_geometry(norm, options);
  r.bounded = g.bounded;
  if (!g.bounded) {
    r.c = 0;
    r.witness_ray = g.rays.front();
    r.c_bar = conjugate_index_by_faces(norm);
    return r;
  }
  std::optional<Rational> best;
  for (const auto& v : g.vertices) {
    const Rational back = norm(-v);
    if (!best || back > *best) {
      best = back;
      r.witness_vertex = v;
    }
  }
  r.c_bar = *best;
  r.c = Rational{1} / *best;
  return r;
}

Rational index_by_faces(const PolyhedralAsymNorm& norm) {
  const std::size_t d = norm.dim();
  const auto& fs = norm.functionals();
  std::optional<Rational> best;
  for (const auto& face : fs) {
    // min t  s.t.  -<a_i, x> - t <= 0,  <a_k, x> <= 1,  <face, x> = 1.
    LPProblem lp;
    lp.sense = Sense::Minimize;
    lp.objective = unit_vector(d + 1, d);
    for (const auto& a : fs) lp.constraints.push_back({append(-a, -1), Relation::LessEqual, 0});
    for (const auto& a : fs) lp.constraints.push_back({append(a, 0), Relation::LessEqual, 1});
    lp.constraints.push_back({append(face, 0), Relation::Equal, 1});
    const LPOutcome res = lp_solve(lp);
    if (res.status != LPStatus::Optimal) continue;
    if (!best || res.optimum < *best) best = res.optimum;
  }
  return best.value_or(Rational{1});
}

Extended conjugate_index_by_faces(const PolyhedralAsymNorm& norm) {
  const auto& fs = norm.functionals();
  std::optional<Rational> best;
  for (const auto& face : fs) {
    for (const auto& a : fs) {
      LPProblem lp;
      lp.objective = -a;
      lp.constraints = unit_ball_rows(norm);
      lp.constraints.push_back({face, Relation::Equal, 1});
      const LPOutcome res = lp_solve(lp);
      if (res.status == LPStatus::Unbounded) return Extended::infinity();
      if (res.status != LPStatus::Optimal) continue;
      if (!best || res.optimum > *best) best = res.optimum;
    }
  }
  return best.value_or(Rational{1});
}

SampledIndex index_sampled(const PolyhedralAsymNorm& norm, const SamplingOptions& options) {
  SampledIndex out;
  out.samples = options.samples;
  out.seed = options.seed;
  out.scheme = options.scheme;
  const std::size_t d = norm.dim();
  if (d == 0) return out;
  if (options.scheme == SamplingScheme::AngularGrid && d != 2) {
    throw MalformedInput("angular grid sampling requires dimension 2");
  }

  std::vector<std::vector<double>> fs;
  for (const auto& a : norm.functionals()) {
    std::vector<double> row;
    for (const auto& x : a) row.push_back(x.to_double());
    fs.push_back(std::move(row));
  }
  constexpr double kScale = 1073741824.0;  // 2^30
  constexpr std::size_t kKeep = 16;

  // Lowest floating-point ratios seen so far, as (ratio, rounded direction).
  std::vector<std::pair<double, std::vector<long>>> best;
  Rng rng(options.seed);
  std::vector<double> u(d);
  std::vector<long> iu(d);
  for (std::size_t s = 0; s < options.samples; ++s) {
    if (options.scheme == SamplingScheme::AngularGrid) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(options.samples);
      u[0] = std::cos(theta);
      u[1] = std::sin(theta);
    } else {
      for (auto& x : u) x = rng.normal();
    }
    double len = 0;
    for (auto x : u) len = std::max(len, std::abs(x));
    if (len == 0) continue;
    for (std::size_t k = 0; k < d; ++k) iu[k] = std::lround(u[k] / len * kScale);
    double fwd = -INFINITY, bwd = -INFINITY;
    for (const auto& a : fs) {
      double v = 0;
      for (std::size_t k = 0; k < d; ++k) v += a[k] * static_cast<double>(iu[k]);
      fwd = std::max(fwd, v);
      bwd = std::max(bwd, -v);
    }
    if (!(fwd > 1e-9 * kScale)) continue;
    ++out.used;
    const double ratio = bwd / fwd;
    if (best.size() < kKeep || ratio < best.back().first) {
      best.emplace_back(ratio, iu);
      std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (best.size() > kKeep) best.pop_back();
    }
  }

  std::optional<Rational> exact;
  for (const auto& [approx, dir] : best) {
    Vector x;
    for (auto v : dir) x.emplace_back(v);
    const Rational fwd = norm(x);
    if (fwd.sign() <= 0) continue;
    const Rational ratio = norm(-x) / fwd;
    if (!exact || ratio < *exact) {
      exact = ratio;
      out.best_direction = primitive_direction(x);
    }
  }
  if (exact) {
    out.value = *exact;
    out.approx = exact->to_double();
  }
  return out;
}

NormIndexReport index_with_fallback(const PolyhedralAsymNorm& norm, const EnumerationOptions& options,
                                    const SamplingOptions& sampling) {
  if (norm.dim() <= options.dimension_cap) return index_exact(norm, options);
  const SampledIndex s = index_sampled(norm, sampling);
  NormIndexReport r;
  r.exact = false;
  r.c = s.value;
  r.c_bar = s.value.is_zero() ? Extended::infinity() : Extended(Rational{1} / s.value);
  if (s.best_direction) r.witness_vertex = s.best_direction;
  r.bounded = !s.value.is_zero();
  return r;
}

FlatNorm flat_norm(const PolyhedralAsymNorm& norm, const Vector& p) {
  require_dim(norm, p, "flat_norm");
  LPProblem lp;
  lp.objective = p;
  lp.constraints = unit_ball_rows(norm);
  const LPOutcome res = lp_solve(lp);
  FlatNorm out;
  if (res.status == LPStatus::Unbounded) {
    out.value = Extended::infinity();
    out.ray = primitive_direction(res.ray);
    return out;
  }
  if (res.status != LPStatus::Optimal) throw InfeasibleError("unit ball is empty");
  out.value = res.optimum;
  out.maximizer = res.point;
  return out;
}

GaugeNorm flat_norm_gauge(const PolyhedralAsymNorm& norm, const Vector& p) {
  require_dim(norm, p, "flat_norm_gauge");
  const auto& fs = norm.functionals();
  const std::size_t m = fs.size(), d = norm.dim();
  LPProblem lp;
  lp.sense = Sense::Minimize;
  lp.objective = Vector(m, Rational{1});
  for (std::size_t c = 0; c < d; ++c) {
    Vector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = fs[i][c];
    lp.constraints.push_back({std::move(row), Relation::Equal, p[c]});
  }
  for (std::size_t i = 0; i < m; ++i) lp.constraints.push_back({-unit_vector(m, i), Relation::LessEqual, 0});
  const LPOutcome res = lp_solve(lp);
  GaugeNorm out;
  if (res.status == LPStatus::Optimal) {
    out.value = res.optimum;
    out.coefficients = res.point;
    return out;
  }
  // Farkas multipliers u on the equality rows: <u, a_i> >= 0 and <u, p> < 0.
  Vector u(res.multipliers.begin(), res.multipliers.begin() + static_cast<long>(d));
  out.value = Extended::infinity();
  out.ray = primitive_direction(-u);
  return out;
}

DualConeMembership dual_cone_membership(const PolyhedralAsymNorm& norm, const Vector& p) {
  const FlatNorm f = flat_norm(norm, p);
  DualConeMembership out;
  out.member = f.value.is_finite();
  out.flat = f.value;
  out.ray = f.ray;
  return out;
}

DualConeStructure dual_cone_is_vector_space(const PolyhedralAsymNorm& norm) {
  DualConeStructure out;
  for (const auto& a : norm.functionals()) {
    const FlatNorm f = flat_norm(norm, -a);
    if (f.value.is_infinite()) {
      out.is_vector_space = false;
      out.p = a;
      out.ray = f.ray;
      return out;
    }
  }
  return out;
}

Rational associated_dual_norm(const PolyhedralAsymNorm& norm, const Vector& p) {
  require_dim(norm, p, "associated_dual_norm");
  LPProblem lp;
  lp.objective = p;
  lp.constraints = unit_ball_rows(norm);
  for (const auto& a : norm.functionals()) lp.constraints.push_back({-a, Relation::LessEqual, 1});
  const LPOutcome res = lp_solve(lp);
  if (res.status != LPStatus::Optimal) throw MalformedInput("associated ball is not bounded");
  return res.optimum;
}

PolyhedralAsymNorm example_weighted_sup(std::size_t n) {
  if (n == 0) throw MalformedInput("example_weighted_sup requires N >= 1");
  Matrix fs;
  for (std::size_t i = 1; i <= n; ++i) {
    fs.push_back(unit_vector(n, i - 1));
    fs.push_back(Rational(-1, static_cast<long>(i)) * unit_vector(n, i - 1));
  }
  return PolyhedralAsymNorm::validate(std::move(fs), n);
}

FiniteQuasiMetricSpace induced_space_sample(const PolyhedralAsymNorm& norm, const Matrix& points,
                                            std::vector<std::string> labels) {
  for (const auto& p : points) require_dim(norm, p, "induced_space_sample");
  const std::size_t n = points.size();
  Matrix d(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = norm(points[j] - points[i]);
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  }
  return FiniteQuasiMetricSpace::validate(std::move(d), std::move(labels));
}

}  // namespace asymkit
