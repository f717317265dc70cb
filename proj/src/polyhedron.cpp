#include "asymkit/polyhedron.hpp"

#include <algorithm>
#include <cstdint>

#include "asymkit/error.hpp"
#include "asymkit/linalg.hpp"
#include "asymkit/lp.hpp"

namespace asymkit {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct ConeRay {
  Vector y;
  Bitset tight;
};

// Extreme rays of the pointed cone {y : rows * y <= 0}; rows must have full
// column rank.
std::vector<Vector> extreme_rays(const Matrix& rows, std::size_t dim) {
  const std::size_t k = rows.size();

  // Greedily pick dim independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  Matrix chosen;
  for (std::size_t i = 0; i < k && initial.size() < dim; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen, dim) == chosen.size()) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() != dim) throw MalformedInput("extreme_rays: cone is not pointed");

  std::vector<ConeRay> cone;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector rhs = zeros(dim);
    rhs[j] = -1;
    auto y = solve_square(chosen, rhs);
    ConeRay r{primitive_direction(*y), Bitset(k)};
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) r.tight.set(initial[i]);
    }
    cone.push_back(std::move(r));
  }

  std::vector<bool> used(k, false);
  for (auto i : initial) used[i] = true;
  for (std::size_t h = 0; h < k; ++h) {
    if (used[h]) continue;
    std::vector<int> side(cone.size());
    for (std::size_t r = 0; r < cone.size(); ++r) side[r] = dot(rows[h], cone[r].y).sign();

    std::vector<ConeRay> next;
    for (std::size_t r = 0; r < cone.size(); ++r) {
      if (side[r] > 0) continue;
      ConeRay kept = cone[r];
      if (side[r] == 0) kept.tight.set(h);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < cone.size(); ++p) {
      if (side[p] <= 0) continue;
      for (std::size_t q = 0; q < cone.size(); ++q) {
        if (side[q] >= 0) continue;
        const Bitset common = cone[p].tight & cone[q].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < cone.size() && adjacent; ++o) {
          if (o != p && o != q && cone[o].tight.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational sp = dot(rows[h], cone[p].y);
        const Rational sq = dot(rows[h], cone[q].y);
        Vector y = sp * cone[q].y - sq * cone[p].y;
        ConeRay merged{primitive_direction(y), common};
        merged.tight.set(h);
        next.push_back(std::move(merged));
      }
    }
    cone = std::move(next);
    used[h] = true;
  }

  std::vector<Vector> out;
  out.reserve(cone.size());
  for (auto& r : cone) out.push_back(std::move(r.y));
  return out;
}

void sort_unique(Matrix& m) {
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

}  // namespace

PolyhedronVR enumerate_vertices_rays(const std::vector<Halfspace>& halfspaces, std::size_t dim,
                                     const EnumerationOptions& options) {
  if (dim > options.dimension_cap) {
    throw CapabilityError("vertex enumeration in dimension " + std::to_string(dim) +
                          " exceeds cap " + std::to_string(options.dimension_cap));
  }
  Matrix x_rows;
  for (const auto& h : halfspaces) {
    if (h.covector.size() != dim) throw MalformedInput("halfspace dimension mismatch");
    x_rows.push_back(h.covector);
  }

  // Lineality space of P: common kernel of all covectors.
  const Matrix lineality = kernel_basis(x_rows, dim);

  const std::size_t hdim = dim + 1;
  Matrix rows;
  for (const auto& h : halfspaces) {
    Vector r = h.covector;
    r.push_back(-h.rhs);
    rows.push_back(std::move(r));
  }
  for (const auto& l : lineality) {
    Vector r = l;
    r.push_back(0);
    rows.push_back(r);
    rows.push_back(-r);
  }
  Vector t_nonneg = zeros(hdim);
  t_nonneg[dim] = -1;
  rows.push_back(std::move(t_nonneg));

  PolyhedronVR out;
  out.dim = dim;
  for (const auto& y : extreme_rays(rows, hdim)) {
    const Rational& t = y[dim];
    Vector x(y.begin(), y.end() - 1);
    if (t.sign() > 0) {
      out.vertices.push_back((Rational{1} / t) * x);
    } else {
      out.rays.push_back(primitive_direction(x));
    }
  }
  if (out.vertices.empty()) throw InfeasibleError("polyhedron is empty");
  for (const auto& l : lineality) {
    out.rays.push_back(l);
    out.rays.push_back(-l);
  }
  sort_unique(out.vertices);
  sort_unique(out.rays);
  return out;
}

ConeMembership cone_membership(const Vector& p, const Matrix& generators) {
  const std::size_t dim = p.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators) {
    if (g.size() != dim) throw MalformedInput("cone_membership: dimension mismatch");
  }
  // Variables lambda_1..lambda_k; rows 0..dim-1 are sum_k lambda_k g_k = p.
  LPProblem lp;
  lp.objective = zeros(k);
  for (std::size_t c = 0; c < dim; ++c) {
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = generators[j][c];
    lp.constraints.push_back({std::move(row), Relation::Equal, p[c]});
  }
  for (std::size_t j = 0; j < k; ++j) {
    lp.constraints.push_back({-unit_vector(k, j), Relation::LessEqual, 0});
  }
  const LPOutcome res = lp_solve(lp);

  ConeMembership out;
  if (res.status == LPStatus::Optimal) {
    out.inside = true;
    out.coefficients = res.point;
    return out;
  }
  // Farkas multipliers u on the equality rows give u.g_k >= 0 and u.p < 0.
  out.separator = Vector(res.multipliers.begin(), res.multipliers.begin() + static_cast<long>(dim));
  out.separator = -out.separator;
  return out;
}

std::string check_cone_membership(const Vector& p, const Matrix& generators, const ConeMembership& m) {
  if (m.inside) {
    if (m.coefficients.size() != generators.size()) return "coefficient count mismatch";
    Vector sum = zeros(p.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (m.coefficients[j].sign() < 0) return "negative coefficient";
      sum = sum + m.coefficients[j] * generators[j];
    }
    return sum == p ? std::string{} : "combination does not reproduce p";
  }
  if (m.separator.size() != p.size()) return "separator has wrong dimension";
  if (dot(m.separator, p).sign() <= 0) return "separator does not cut off p";
  for (const auto& g : generators) {
    if (dot(m.separator, g).sign() > 0) return "separator does not contain a generator";
  }
  return {};
}

ConeMembership convex_hull_membership(const Vector& p, const Matrix& generators) {
  Vector lifted = p;
  lifted.push_back(1);
  Matrix lifted_gens;
  lifted_gens.reserve(generators.size());
  for (const auto& g : generators) {
    Vector v = g;
    v.push_back(1);
    lifted_gens.push_back(std::move(v));
  }
  return cone_membership(lifted, lifted_gens);
}

}  // namespace asymkit
