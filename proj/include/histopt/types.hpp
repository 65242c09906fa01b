#pragma once

#include <Eigen/Dense>

namespace histopt {

// 8-bit grayscale throughout: 256 intensity levels.
inline constexpr Eigen::Index kGrayLevels = 256;

using Scalar = double;

template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Scalar>;
using Matrix = MatrixX<Scalar>;

}  // namespace histopt
