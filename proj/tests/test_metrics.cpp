#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "histopt/metrics.hpp"
#include "test_helpers.hpp"

using namespace histopt;

TEST_CASE("mse of identical and maximally different images") {
  Rng rng(51);
  const GrayImage image = testing::randomImage(rng, 16, 16);
  CHECK(mse(image, image) == 0.0);

  const GrayImage black = testing::constantImage(8, 8, 0);
  const GrayImage white = testing::constantImage(8, 8, 255);
  CHECK(mse(black, white) == 65025.0);
}

TEST_CASE("mse matches a double-loop recomputation") {
  Rng rng(52);
  const GrayImage a = testing::randomImage(rng, 23, 9);
  const GrayImage b = testing::randomImage(rng, 23, 9);
  double sum = 0;
  for (Eigen::Index r = 0; r < a.height(); ++r) {
    for (Eigen::Index c = 0; c < a.width(); ++c) {
      const double d = static_cast<double>(a(r, c)) - b(r, c);
      sum += d * d;
    }
  }
  const double expected = sum / static_cast<double>(a.pixelCount());
  CHECK(mse(a, b) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("mse and psnr reject dimension mismatches") {
  const GrayImage a = testing::constantImage(4, 4, 10);
  const GrayImage b = testing::constantImage(4, 5, 10);
  CHECK_THROWS_AS(mse(a, b), std::invalid_argument);
  CHECK_THROWS_AS(psnr(a, b), std::invalid_argument);
}

TEST_CASE("psnr anchor values") {
  const GrayImage black = testing::constantImage(8, 8, 0);
  const GrayImage white = testing::constantImage(8, 8, 255);
  CHECK(psnr(black, white) == doctest::Approx(0.0).epsilon(1e-12));

  // Unit MSE: every pixel off by one.
  const GrayImage a = testing::constantImage(8, 8, 100);
  const GrayImage b = testing::constantImage(8, 8, 101);
  CHECK(psnr(a, b) == doctest::Approx(20.0 * std::log10(255.0)).epsilon(1e-12));
  CHECK(psnr(a, b) == doctest::Approx(48.1308).epsilon(1e-5));

  CHECK(std::isinf(psnr(a, a)));
  Rng rng(53);
  const GrayImage x = testing::randomImage(rng, 12, 12);
  const GrayImage y = testing::randomImage(rng, 12, 12);
  CHECK(psnr(x, y) == psnr(y, x));
}

TEST_CASE("entropy anchor values") {
  CHECK(entropy(testing::constantImage(9, 9, 42)) == 0.0);

  // All 256 levels equally frequent: exactly 8 bits.
  CHECK(entropy(testing::gradientImage()) == doctest::Approx(8.0).epsilon(1e-12));

  // Two levels at 50/50: one bit.
  PixelMatrix half(2, 2);
  half(0, 0) = 0;
  half(0, 1) = 0;
  half(1, 0) = 255;
  half(1, 1) = 255;
  CHECK(entropy(GrayImage(std::move(half))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy stays within [0, 8] and ignores pixel arrangement") {
  Rng rng(54);
  const GrayImage image = testing::randomImage(rng, 32, 32);
  const double h = entropy(image);
  CHECK(h >= 0.0);
  CHECK(h <= 8.0);

  // Shuffle pixels: same distribution, same entropy.
  PixelMatrix shuffled = image.pixels();
  std::uint8_t* data = shuffled.data();
  for (Eigen::Index i = shuffled.size() - 1; i > 0; --i) {
    std::swap(data[i], data[rng.below(static_cast<int>(i + 1))]);
  }
  CHECK(entropy(GrayImage(std::move(shuffled))) == h);
}

TEST_CASE("mean intensity anchor values and oracle") {
  CHECK(meanIntensity(testing::constantImage(5, 5, 128)) == 128.0);

  PixelMatrix half(1, 4);
  half(0, 0) = 0;
  half(0, 1) = 0;
  half(0, 2) = 255;
  half(0, 3) = 255;
  CHECK(meanIntensity(GrayImage(half)) == doctest::Approx(127.5).epsilon(1e-12));

  Rng rng(55);
  const GrayImage image = testing::randomImage(rng, 19, 27);
  double sum = 0;
  for (Eigen::Index r = 0; r < image.height(); ++r) {
    for (Eigen::Index c = 0; c < image.width(); ++c) sum += image(r, c);
  }
  const double direct = sum / static_cast<double>(image.pixelCount());
  CHECK(meanIntensity(image) == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("variance anchor values and two-pass oracle") {
  CHECK(varianceIntensity(testing::constantImage(6, 6, 99)) == 0.0);

  PixelMatrix half(1, 4);
  half(0, 0) = 0;
  half(0, 1) = 0;
  half(0, 2) = 255;
  half(0, 3) = 255;
  CHECK(varianceIntensity(GrayImage(half)) ==
        doctest::Approx(127.5 * 127.5).epsilon(1e-12));

  Rng rng(56);
  const GrayImage image = testing::randomImage(rng, 21, 13);
  double mean = 0;
  for (Eigen::Index r = 0; r < image.height(); ++r) {
    for (Eigen::Index c = 0; c < image.width(); ++c) mean += image(r, c);
  }
  mean /= static_cast<double>(image.pixelCount());
  double var = 0;
  for (Eigen::Index r = 0; r < image.height(); ++r) {
    for (Eigen::Index c = 0; c < image.width(); ++c) {
      var += (image(r, c) - mean) * (image(r, c) - mean);
    }
  }
  var /= static_cast<double>(image.pixelCount());
  CHECK(varianceIntensity(image) == doctest::Approx(var).epsilon(1e-6));
}

TEST_CASE("variance equals mean of squares minus squared mean") {
  Rng rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage image = testing::randomImage(rng, 16, 16);
    double sum = 0, sum_sq = 0;
    for (Eigen::Index r = 0; r < image.height(); ++r) {
      for (Eigen::Index c = 0; c < image.width(); ++c) {
        sum += image(r, c);
        sum_sq += static_cast<double>(image(r, c)) * image(r, c);
      }
    }
    const double n = static_cast<double>(image.pixelCount());
    const double identity = sum_sq / n - (sum / n) * (sum / n);
    CHECK(varianceIntensity(image) ==
          doctest::Approx(identity).epsilon(1e-6));
  }
}

TEST_CASE("a non-clamping shift moves the mean and keeps the variance") {
  Rng rng(58);
  const GrayImage image = testing::randomImage(rng, 24, 24, 20, 200);
  Lut shift;
  for (int v = 0; v < 256; ++v) {
    shift.map[v] = static_cast<std::uint8_t>(std::min(v + 30, 255));
  }
  const GrayImage moved = applyLut(image, shift);
  CHECK(meanIntensity(moved) ==
        doctest::Approx(meanIntensity(image) + 30.0).epsilon(1e-9));
  CHECK(varianceIntensity(moved) ==
        doctest::Approx(varianceIntensity(image)).epsilon(1e-9));
}

TEST_CASE("metrics of an empty image are errors") {
  const GrayImage empty;
  CHECK_THROWS_AS(entropy(empty), std::invalid_argument);
  CHECK_THROWS_AS(meanIntensity(empty), std::invalid_argument);
  CHECK_THROWS_AS(varianceIntensity(empty), std::invalid_argument);
}
