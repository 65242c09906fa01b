#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace histopt {

using PixelMatrix =
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 8-bit grayscale image, row-major pixel storage.
class GrayImage {
 public:
  GrayImage() = default;

  GrayImage(Eigen::Index width, Eigen::Index height)
      : pixels_(PixelMatrix::Zero(height, width)) {
    requireNonEmpty();
  }

  explicit GrayImage(PixelMatrix pixels) : pixels_(std::move(pixels)) {
    requireNonEmpty();
  }

  Eigen::Index width() const { return pixels_.cols(); }
  Eigen::Index height() const { return pixels_.rows(); }
  Eigen::Index pixelCount() const { return pixels_.size(); }

  std::uint8_t operator()(Eigen::Index row, Eigen::Index col) const {
    return pixels_(row, col);
  }
  std::uint8_t& operator()(Eigen::Index row, Eigen::Index col) {
    return pixels_(row, col);
  }

  const PixelMatrix& pixels() const { return pixels_; }

  const std::uint8_t* data() const { return pixels_.data(); }
  std::uint8_t* data() { return pixels_.data(); }

  bool operator==(const GrayImage& other) const {
    return width() == other.width() && height() == other.height() &&
           (pixels_.array() == other.pixels_.array()).all();
  }
  bool operator!=(const GrayImage& other) const { return !(*this == other); }

 private:
  void requireNonEmpty() const {
    if (pixels_.rows() <= 0 || pixels_.cols() <= 0) {
      throw std::invalid_argument("empty image");
    }
  }

  PixelMatrix pixels_;
};

}  // namespace histopt
