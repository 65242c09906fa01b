#pragma once

// Histogram chain: image -> histogram -> pdf -> cdf -> lut -> image.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "histopt/image.hpp"
#include "histopt/types.hpp"

namespace histopt {

/// Per-level frequency counts. Entries are real-valued so optimized
/// histograms flow through the same chain as raw pixel counts.
struct Histogram {
  Vector counts = Vector::Zero(kGrayLevels);

  Scalar total() const { return counts.sum(); }
};

struct Pdf {
  Vector probs = Vector::Zero(kGrayLevels);
};

/// Monotone intensity mapping applied pixelwise.
struct Lut {
  std::array<std::uint8_t, kGrayLevels> map{};

  bool isMonotone() const {
    for (int i = 1; i < kGrayLevels; ++i) {
      if (map[i] < map[i - 1]) return false;
    }
    return true;
  }
};

inline Histogram computeHistogram(const GrayImage& image) {
  if (image.pixelCount() == 0) throw std::invalid_argument("empty image");
  Histogram hist;
  const std::uint8_t* p = image.data();
  for (Eigen::Index i = 0; i < image.pixelCount(); ++i) {
    hist.counts[p[i]] += 1.0;
  }
  return hist;
}

/// Constant histogram spreading `total` mass evenly over all levels.
inline Histogram uniformHistogram(Scalar total) {
  Histogram u;
  u.counts.setConstant(total / static_cast<Scalar>(kGrayLevels));
  return u;
}

inline Pdf normalize(const Histogram& hist) {
  const Scalar total = hist.total();
  if (!(total > 0)) throw std::invalid_argument("empty histogram");
  return Pdf{hist.counts / total};
}

inline Vector cumulative(const Pdf& pdf) {
  Vector cdf(kGrayLevels);
  Scalar acc = 0;
  for (int i = 0; i < kGrayLevels; ++i) {
    acc += pdf.probs[i];
    cdf[i] = acc;
  }
  return cdf;
}

/// Equalization map: round-half-up of 255 * cdf, clamped to [0, 255].
inline Lut heLut(const Pdf& pdf) {
  const Vector cdf = cumulative(pdf);
  Lut lut;
  for (int i = 0; i < kGrayLevels; ++i) {
    const Scalar level = std::floor((kGrayLevels - 1) * cdf[i] + 0.5);
    lut.map[i] = static_cast<std::uint8_t>(std::clamp<Scalar>(level, 0.0, 255.0));
  }
  return lut;
}

inline GrayImage applyLut(const GrayImage& image, const Lut& lut) {
  PixelMatrix out(image.height(), image.width());
  const std::uint8_t* src = image.data();
  std::uint8_t* dst = out.data();
  for (Eigen::Index i = 0; i < image.pixelCount(); ++i) {
    dst[i] = lut.map[src[i]];
  }
  return GrayImage(std::move(out));
}

}  // namespace histopt
