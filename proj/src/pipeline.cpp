#include "histopt/pipeline.hpp"

#include <stdexcept>
#include <utility>

#include "histopt/objective.hpp"

namespace histopt {

EnhancementResult enhance(const GrayImage& image,
                          const EnhancementParams& params) {
  const Histogram hist = computeHistogram(image);
  const ObjectiveSpec spec =
      ObjectiveSpec::forHistogram(hist, params.lambda, params.gamma);

  const Vector oracle = closedFormTricriteria(spec);
  const Scalar oracle_cost = triCost(oracle, spec);

  Vector optimized;
  Scalar achieved_cost = 0;
  std::vector<Scalar> history;

  if (params.oracle_mode == OracleMode::ClosedForm) {
    optimized = oracle;
    achieved_cost = oracle_cost;
  } else {
    SwarmConfig config = params.swarm;
    config.dimension = static_cast<int>(kGrayLevels);
    // A histogram bin is a non-negative count bounded by the pixel total.
    config.lower_bound = Vector::Zero(kGrayLevels);
    config.upper_bound = Vector::Constant(kGrayLevels, hist.total());
    config.initial_anchors.clear();
    if (params.anchor_init) {
      config.initial_anchors = {spec.input_hist, spec.uniform_target};
    }
    const MinimizeResult result = minimize(
        [&spec](const Vector& h) { return triCost(h, spec); }, config);
    optimized = result.best_position;
    achieved_cost = result.best_fitness;
    history = result.history;
  }

  Histogram clamped{optimized.cwiseMax(0.0)};
  const Pdf pdf = normalize(clamped);  // by the optimized histogram's own mass
  const Lut lut = heLut(pdf);

  EnhancementResult result;
  result.output = applyLut(image, lut);
  result.optimized_histogram = std::move(clamped);
  result.lut = lut;
  result.metrics_before = computeMetrics(image, image);
  result.metrics_after = computeMetrics(result.output, image);
  result.convergence_history = std::move(history);
  result.achieved_cost = achieved_cost;
  result.oracle_cost = oracle_cost;
  return result;
}

std::vector<EnhancementResult> sweep(const GrayImage& image,
                                     const std::vector<Scalar>& lambdas,
                                     const std::vector<Scalar>& gammas,
                                     const EnhancementParams& params) {
  if (lambdas.empty() || gammas.empty()) {
    throw std::invalid_argument("sweep: empty parameter list");
  }
  std::vector<EnhancementResult> results;
  results.reserve(lambdas.size() * gammas.size());
  std::uint64_t grid_index = 0;
  for (const Scalar lambda : lambdas) {
    for (const Scalar gamma : gammas) {
      EnhancementParams point = params;
      point.lambda = lambda;
      point.gamma = gamma;
      point.swarm.seed = params.swarm.seed + grid_index;
      ++grid_index;
      results.push_back(enhance(image, point));
    }
  }
  return results;
}

}  // namespace histopt
