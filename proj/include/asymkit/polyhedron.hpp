#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymkit/rational.hpp"

namespace asymkit {

inline constexpr std::size_t kDefaultDimensionCap = 6;

struct EnumerationOptions {
  std::size_t dimension_cap = kDefaultDimensionCap;
};

/// covector . x <= rhs
struct Halfspace {
  Vector covector;
  Rational rhs;
};

/// P = conv(vertices) + cone(rays). Lineality directions l appear as the ray
/// pair l, -l; vertices then lie in the orthogonal complement of the lineality.
struct PolyhedronVR {
  std::size_t dim = 0;
  Matrix vertices;
  Matrix rays;

  bool bounded() const { return rays.empty(); }
};

/// Double description (Motzkin) on the homogenized cone
///   {(x, t) : a.x - b t <= 0, t >= 0}.
/// Output is duplicate-free and sorted; rays are primitive integer vectors.
/// Throws CapabilityError when dim exceeds the cap and InfeasibleError when
/// P is empty.
PolyhedronVR enumerate_vertices_rays(const std::vector<Halfspace>& halfspaces, std::size_t dim,
                                     const EnumerationOptions& options = {});

/// Either coefficients lambda >= 0 with sum_k lambda_k g_k = p, or a separating
/// covector h with h.p > 0 and h.g_k <= 0 for every generator (Farkas).
struct ConeMembership {
  bool inside = false;
  Vector coefficients;
  Vector separator;
};

ConeMembership cone_membership(const Vector& p, const Matrix& generators);

/// Substitution check of a cone_membership answer. Empty string when it holds.
std::string check_cone_membership(const Vector& p, const Matrix& generators, const ConeMembership& m);

/// p in conv{g_k}: cone membership of (p, 1) in cone{(g_k, 1)}. On success the
/// coefficients sum to one.
ConeMembership convex_hull_membership(const Vector& p, const Matrix& generators);

}  // namespace asymkit
