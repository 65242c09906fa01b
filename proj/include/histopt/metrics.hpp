#pragma once

// Image quality measures: MSE, PSNR, Shannon entropy, intensity mean and
// variance. PSNR of identical images is +infinity; report writers encode it
// as the string "inf".

#include <cmath>
#include <limits>
#include <stdexcept>

#include "histopt/histogram.hpp"
#include "histopt/image.hpp"
#include "histopt/types.hpp"

namespace histopt {

struct MetricSet {
  Scalar entropy_bits = 0;
  Scalar psnr_db = 0;
  Scalar mean_intensity = 0;
  Scalar variance = 0;
  Scalar mse = 0;
};

inline Scalar mse(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("mse: image dimensions differ");
  }
  const std::uint8_t* pa = a.data();
  const std::uint8_t* pb = b.data();
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < a.pixelCount(); ++i) {
    const Scalar d = static_cast<Scalar>(pa[i]) - static_cast<Scalar>(pb[i]);
    sum += d * d;
  }
  return sum / static_cast<Scalar>(a.pixelCount());
}

inline Scalar psnr(const GrayImage& a, const GrayImage& b) {
  const Scalar err = mse(a, b);
  if (err == 0) return std::numeric_limits<Scalar>::infinity();
  return 20.0 * std::log10(255.0 / std::sqrt(err));
}

/// Shannon entropy of the intensity distribution, base 2; zero-probability
/// levels contribute nothing.
inline Scalar entropy(const GrayImage& image) {
  const Pdf pdf = normalize(computeHistogram(image));
  Scalar h = 0;
  for (int i = 0; i < kGrayLevels; ++i) {
    const Scalar p = pdf.probs[i];
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

inline Scalar meanIntensity(const GrayImage& image) {
  const Pdf pdf = normalize(computeHistogram(image));
  Scalar m = 0;
  for (int i = 0; i < kGrayLevels; ++i) {
    m += static_cast<Scalar>(i) * pdf.probs[i];
  }
  return m;
}

/// Population variance of intensities about the mean.
inline Scalar varianceIntensity(const GrayImage& image) {
  const Pdf pdf = normalize(computeHistogram(image));
  Scalar m = 0;
  for (int i = 0; i < kGrayLevels; ++i) {
    m += static_cast<Scalar>(i) * pdf.probs[i];
  }
  Scalar var = 0;
  for (int i = 0; i < kGrayLevels; ++i) {
    const Scalar d = static_cast<Scalar>(i) - m;
    var += d * d * pdf.probs[i];
  }
  return var;
}

/// Entropy/mean/variance of `image`; MSE and PSNR against `reference`.
inline MetricSet computeMetrics(const GrayImage& image,
                                const GrayImage& reference) {
  MetricSet m;
  m.entropy_bits = entropy(image);
  m.mean_intensity = meanIntensity(image);
  m.variance = varianceIntensity(image);
  m.mse = mse(image, reference);
  m.psnr_db = psnr(image, reference);
  return m;
}

}  // namespace histopt
