#pragma once

#include <stdexcept>

#include "histopt/types.hpp"

namespace histopt {

/// Thomas algorithm. Solves A x = rhs where A is tridiagonal with
/// sub-diagonal `lower` (n-1), main diagonal `diag` (n) and super-diagonal
/// `upper` (n-1). No pivoting; the caller must supply a diagonally dominant
/// or SPD system.
template <typename T>
VectorX<T> solveTridiagonal(const VectorX<T>& lower, const VectorX<T>& diag,
                            const VectorX<T>& upper, const VectorX<T>& rhs) {
  const Eigen::Index n = diag.size();
  if (n == 0 || lower.size() != n - 1 || upper.size() != n - 1 ||
      rhs.size() != n) {
    throw std::invalid_argument("tridiagonal solve: inconsistent sizes");
  }

  VectorX<T> scratch(n);  // rescaled super-diagonal
  VectorX<T> x(n);

  T pivot = diag[0];
  if (pivot == T(0)) throw std::runtime_error("tridiagonal solve: zero pivot");
  if (n > 1) scratch[0] = upper[0] / pivot;
  x[0] = rhs[0] / pivot;

  for (Eigen::Index i = 1; i < n; ++i) {
    pivot = diag[i] - lower[i - 1] * scratch[i - 1];
    if (pivot == T(0)) throw std::runtime_error("tridiagonal solve: zero pivot");
    if (i < n - 1) scratch[i] = upper[i] / pivot;
    x[i] = (rhs[i] - lower[i - 1] * x[i - 1]) / pivot;
  }

  for (Eigen::Index i = n - 2; i >= 0; --i) {
    x[i] -= scratch[i] * x[i + 1];
  }
  return x;
}

}  // namespace histopt
