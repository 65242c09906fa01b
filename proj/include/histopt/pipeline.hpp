#pragma once

// End-to-end enhancement: image -> histogram -> optimized histogram
// (swarm-minimized or closed-form) -> clamp -> pdf -> cdf -> lut -> image,
// with quality metrics and the closed-form cost always reported as the
// optimality reference.

#include <vector>

#include "histopt/histogram.hpp"
#include "histopt/image.hpp"
#include "histopt/metrics.hpp"
#include "histopt/swarm.hpp"
#include "histopt/types.hpp"

namespace histopt {

enum class OracleMode { Metaheuristic, ClosedForm };

struct EnhancementParams {
  Scalar lambda = 5.0;     // contrast weight
  Scalar gamma = 50000.0;  // smoothness weight
  SwarmConfig swarm = SwarmConfig::withTableDefaults(kGrayLevels);
  OracleMode oracle_mode = OracleMode::Metaheuristic;

  // Seed the swarm with the two problem-defining points (input histogram and
  // uniform target) in addition to random chickens.
  bool anchor_init = true;
};

struct EnhancementResult {
  GrayImage output;
  Histogram optimized_histogram;  // clamped to non-negative bins
  Lut lut;
  MetricSet metrics_before;  // input image; MSE/PSNR against itself
  MetricSet metrics_after;   // output image; MSE/PSNR against the input
  std::vector<Scalar> convergence_history;  // empty in closed-form mode
  Scalar achieved_cost = 0;
  Scalar oracle_cost = 0;  // closed-form minimum of the same objective
};

EnhancementResult enhance(const GrayImage& image, const EnhancementParams& params);

/// One enhancement per (lambda, gamma) pair, lambda-major order. Grid point
/// k runs with seed `params.swarm.seed + k` so points are independent yet
/// reproducible.
std::vector<EnhancementResult> sweep(const GrayImage& image,
                                     const std::vector<Scalar>& lambdas,
                                     const std::vector<Scalar>& gammas,
                                     const EnhancementParams& params);

}  // namespace histopt
