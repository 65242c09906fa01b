#pragma once

// Quadratic histogram-modification cost
//
//   cost(h) = ||h - h_input||^2 + lambda ||h - u||^2 + gamma ||D h||^2
//
// with D the backward-difference operator (first row zero), plus the direct
// minimizers: the elementwise weighted average for gamma = 0 and a
// tridiagonal solve for the general case.

#include <stdexcept>

#include "histopt/histogram.hpp"
#include "histopt/tridiagonal.hpp"
#include "histopt/types.hpp"

namespace histopt {

struct ObjectiveSpec {
  Vector input_hist;      // h_i, the raw image histogram
  Vector uniform_target;  // u, constant with the same total mass
  Scalar lambda = 0;      // contrast weight
  Scalar gamma = 0;       // smoothness weight

  static ObjectiveSpec forHistogram(const Histogram& hist, Scalar lambda,
                                    Scalar gamma) {
    if (lambda < 0) throw std::invalid_argument("lambda must be non-negative");
    if (gamma < 0) throw std::invalid_argument("gamma must be non-negative");
    ObjectiveSpec spec;
    spec.input_hist = hist.counts;
    spec.uniform_target = uniformHistogram(hist.total()).counts;
    spec.lambda = lambda;
    spec.gamma = gamma;
    return spec;
  }
};

/// (D h)[0] = 0, (D h)[i] = h[i] - h[i-1].
template <typename Derived>
Vector backwardDifference(const Eigen::MatrixBase<Derived>& h) {
  const Eigen::Index n = h.size();
  Vector d = Vector::Zero(n);
  if (n > 1) d.tail(n - 1) = h.tail(n - 1) - h.head(n - 1);
  return d;
}

/// D^T D h without forming D.
template <typename Derived>
Vector diffGram(const Eigen::MatrixBase<Derived>& h) {
  const Eigen::Index n = h.size();
  const Vector d = backwardDifference(h);
  Vector y(n);
  if (n > 1) y.head(n - 1) = d.head(n - 1) - d.tail(n - 1);
  y[n - 1] = d[n - 1];
  return y;
}

inline Scalar triCost(const Eigen::Ref<const Vector>& h,
                      const ObjectiveSpec& spec) {
  if (h.size() != spec.input_hist.size()) {
    throw std::invalid_argument("cost: histogram length mismatch");
  }
  Scalar cost = (h - spec.input_hist).squaredNorm();
  if (spec.lambda != 0) cost += spec.lambda * (h - spec.uniform_target).squaredNorm();
  if (spec.gamma != 0) cost += spec.gamma * backwardDifference(h).squaredNorm();
  return cost;
}

/// Minimizer for gamma = 0: elementwise (h_i + lambda u) / (1 + lambda).
inline Vector closedFormBicriteria(const ObjectiveSpec& spec) {
  return (spec.input_hist + spec.lambda * spec.uniform_target) /
         (1.0 + spec.lambda);
}

/// Minimizer of the full cost: solves ((1 + lambda) I + gamma D^T D) h = b
/// with b = h_i + lambda u. The system matrix is SPD tridiagonal with
/// stencil diag = [1, 2, ..., 2, 1], off-diagonals = -1.
inline Vector closedFormTricriteria(const ObjectiveSpec& spec) {
  const Eigen::Index n = spec.input_hist.size();
  const Vector b = spec.input_hist + spec.lambda * spec.uniform_target;

  Vector diag = Vector::Constant(n, 1.0 + spec.lambda + 2.0 * spec.gamma);
  diag[0] = 1.0 + spec.lambda + spec.gamma;
  diag[n - 1] = 1.0 + spec.lambda + spec.gamma;
  const Vector off = Vector::Constant(n - 1, -spec.gamma);

  return solveTridiagonal<Scalar>(off, diag, off, b);
}

/// Gradient of triCost: 2 (h - h_i) + 2 lambda (h - u) + 2 gamma D^T D h.
inline Vector gradient(const Eigen::Ref<const Vector>& h,
                       const ObjectiveSpec& spec) {
  if (h.size() != spec.input_hist.size()) {
    throw std::invalid_argument("gradient: histogram length mismatch");
  }
  Vector g = 2.0 * (h - spec.input_hist);
  if (spec.lambda != 0) g += 2.0 * spec.lambda * (h - spec.uniform_target);
  if (spec.gamma != 0) g += 2.0 * spec.gamma * diffGram(h);
  return g;
}

}  // namespace histopt
