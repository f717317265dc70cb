#include "asymkit/linalg.hpp"

#include "asymkit/error.hpp"

namespace asymkit {

RowEchelon row_echelon(Matrix rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) throw MalformedInput("row_echelon: ragged matrix");
  }
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < columns && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = Rational{1} / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) rows[r][c] -= f * rows[lead][c];
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.reduced = std::move(rows);
  return out;
}

std::size_t rank(const Matrix& rows, std::size_t columns) {
  return row_echelon(rows, columns).pivot_columns.size();
}

Matrix kernel_basis(const Matrix& rows, std::size_t columns) {
  const RowEchelon e = row_echelon(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zeros(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced[r][free];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

std::optional<Vector> solve_square(const Matrix& a, const Vector& b) {
  const std::size_t n = b.size();
  if (a.size() != n) throw MalformedInput("solve_square: shape mismatch");
  if (n == 0) return Vector{};
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw MalformedInput("solve_square: not square");
    aug[i].push_back(b[i]);
  }
  const RowEchelon e = row_echelon(std::move(aug), n + 1);
  if (e.pivot_columns.size() != n || e.pivot_columns.back() != n - 1) return std::nullopt;
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced[i][n];
  return x;
}

}  // namespace asymkit
