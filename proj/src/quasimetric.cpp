#include "asymkit/quasimetric.hpp"

#include <algorithm>

namespace asymkit {

std::string to_string(SpaceViolation::Kind k) {
  switch (k) {
    case SpaceViolation::Kind::Shape: return "shape";
    case SpaceViolation::Kind::NegativeEntry: return "negative_entry";
    case SpaceViolation::Kind::NonzeroDiagonal: return "nonzero_diagonal";
    case SpaceViolation::Kind::Separation: return "separation";
    case SpaceViolation::Kind::Triangle: return "triangle";
  }
  return "?";
}

std::optional<SpaceViolation> FiniteQuasiMetricSpace::find_violation(const Matrix& d) {
  using Kind = SpaceViolation::Kind;
  const std::size_t n = d.size();
  if (n == 0) return SpaceViolation{Kind::Shape, {}, "space must have at least one point"};
  for (const auto& row : d) {
    if (row.size() != n) return SpaceViolation{Kind::Shape, {}, "distance matrix is not square"};
  }
  auto pair_msg = [](const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j].sign() < 0) return SpaceViolation{Kind::NegativeEntry, {i, j}, pair_msg("negative entry", i, j)};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!d[i][i].is_zero()) return SpaceViolation{Kind::NonzeroDiagonal, {i, i}, pair_msg("nonzero diagonal", i, i)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j].is_zero() && d[j][i].is_zero()) {
        return SpaceViolation{Kind::Separation, {i, j}, pair_msg("separation violation", i, j)};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][j] > d[i][k] + d[k][j]) {
          return SpaceViolation{Kind::Triangle, {i, k, j},
                                "triangle violation (" + std::to_string(i) + "," + std::to_string(k) + "," +
                                    std::to_string(j) + "): " + d[i][j].to_string() + " > " +
                                    d[i][k].to_string() + " + " + d[k][j].to_string()};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteQuasiMetricSpace FiniteQuasiMetricSpace::validate(Matrix d, std::vector<std::string> labels,
                                                        std::size_t base_point) {
  if (auto v = find_violation(d)) throw SpaceValidationError(std::move(*v));
  const std::size_t n = d.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != n) throw MalformedInput("label count does not match matrix size");
  {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw MalformedInput("point labels must be distinct");
    }
  }
  if (base_point >= n) throw MalformedInput("base point out of range");
  FiniteQuasiMetricSpace s;
  s.d_ = std::move(d);
  s.labels_ = std::move(labels);
  s.base_point_ = base_point;
  return s;
}

bool FiniteQuasiMetricSpace::is_quasi_metric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && d_[i][j].is_zero()) return false;
    }
  }
  return true;
}

bool FiniteQuasiMetricSpace::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (d_[i][j] != d_[j][i]) return false;
    }
  }
  return true;
}

std::optional<std::size_t> FiniteQuasiMetricSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SymmetryIndexReport index_of_symmetry(const FiniteQuasiMetricSpace& space) {
  SymmetryIndexReport r;
  r.is_quasi_metric = space.is_quasi_metric();
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j || space.d(j, i).is_zero()) continue;
      const Rational ratio = space.d(i, j) / space.d(j, i);
      if (!lo || ratio < *lo) {
        lo = ratio;
        r.witness = IndexPair{i, j};
      }
      if (!hi || ratio > *hi) {
        hi = ratio;
        r.c_bar_witness = IndexPair{i, j};
      }
    }
  }
  if (!lo) {
    r.empty_ratio_set = true;
    return r;
  }
  r.c = *lo;
  r.c_bar = *hi;
  r.is_metric = r.c == Rational{1};
  return r;
}

FiniteQuasiMetricSpace conjugate(const FiniteQuasiMetricSpace& space) {
  Matrix t(space.size(), Vector(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) t[i][j] = space.d(j, i);
  }
  return FiniteQuasiMetricSpace::validate(std::move(t), space.labels(), space.base_point());
}

FiniteQuasiMetricSpace symmetrize(const FiniteQuasiMetricSpace& space) {
  Matrix s(space.size(), Vector(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) s[i][j] = std::max(space.d(i, j), space.d(j, i));
  }
  return FiniteQuasiMetricSpace::validate(std::move(s), space.labels(), space.base_point());
}

std::vector<std::size_t> ball(const FiniteQuasiMetricSpace& space, std::size_t center, const Rational& radius,
                              BallKind kind) {
  if (center >= space.size()) throw MalformedInput("ball center out of range");
  if (radius.sign() < 0) throw MalformedInput("ball radius must be nonnegative");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < space.size(); ++j) {
    const Rational& dist = space.d(center, j);
    if (kind == BallKind::Open ? dist < radius : dist <= radius) out.push_back(j);
  }
  return out;
}

}  // namespace asymkit
