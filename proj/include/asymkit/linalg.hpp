#pragma once

#include <optional>
#include <vector>

#include "asymkit/rational.hpp"

namespace asymkit {

/// Reduced row echelon form and pivot columns, computed exactly.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(Matrix rows, std::size_t columns);

std::size_t rank(const Matrix& rows, std::size_t columns);

/// Basis of {x : rows * x = 0}. Each basis vector is primitive integral.
Matrix kernel_basis(const Matrix& rows, std::size_t columns);

/// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<Vector> solve_square(const Matrix& a, const Vector& b);

}  // namespace asymkit
