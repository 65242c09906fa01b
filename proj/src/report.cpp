#include "histopt/report.hpp"

#include <cmath>
#include <stdexcept>

namespace histopt {

double costGap(double achieved_cost, double oracle_cost) {
  if (oracle_cost > 0) return (achieved_cost - oracle_cost) / oracle_cost;
  return achieved_cost - oracle_cost;
}

nlohmann::json jsonNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

nlohmann::json toJson(const MetricSet& metrics) {
  return {{"entropy_bits", jsonNumber(metrics.entropy_bits)},
          {"psnr_db", jsonNumber(metrics.psnr_db)},
          {"mean_intensity", jsonNumber(metrics.mean_intensity)},
          {"variance", jsonNumber(metrics.variance)},
          {"mse", jsonNumber(metrics.mse)}};
}

nlohmann::json toJson(const RunRecord& run) {
  return {{"seed", run.seed},
          {"achieved_cost", jsonNumber(run.achieved_cost)},
          {"oracle_cost", jsonNumber(run.oracle_cost)},
          {"gap", jsonNumber(run.gap)},
          {"wall_time_s", jsonNumber(run.wall_time_s)},
          {"metrics_before", toJson(run.metrics_before)},
          {"metrics_after", toJson(run.metrics_after)}};
}

RunRecord aggregateRuns(const std::vector<RunRecord>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate of zero runs");
  RunRecord sum;
  for (const RunRecord& run : runs) {
    sum.achieved_cost += run.achieved_cost;
    sum.oracle_cost += run.oracle_cost;
    sum.gap += run.gap;
    sum.wall_time_s += run.wall_time_s;
    sum.metrics_before.entropy_bits += run.metrics_before.entropy_bits;
    sum.metrics_before.psnr_db += run.metrics_before.psnr_db;
    sum.metrics_before.mean_intensity += run.metrics_before.mean_intensity;
    sum.metrics_before.variance += run.metrics_before.variance;
    sum.metrics_before.mse += run.metrics_before.mse;
    sum.metrics_after.entropy_bits += run.metrics_after.entropy_bits;
    sum.metrics_after.psnr_db += run.metrics_after.psnr_db;
    sum.metrics_after.mean_intensity += run.metrics_after.mean_intensity;
    sum.metrics_after.variance += run.metrics_after.variance;
    sum.metrics_after.mse += run.metrics_after.mse;
  }
  const double n = static_cast<double>(runs.size());
  RunRecord mean = sum;
  mean.achieved_cost /= n;
  mean.oracle_cost /= n;
  mean.gap /= n;
  mean.wall_time_s /= n;
  mean.metrics_before.entropy_bits /= n;
  mean.metrics_before.psnr_db /= n;
  mean.metrics_before.mean_intensity /= n;
  mean.metrics_before.variance /= n;
  mean.metrics_before.mse /= n;
  mean.metrics_after.entropy_bits /= n;
  mean.metrics_after.psnr_db /= n;
  mean.metrics_after.mean_intensity /= n;
  mean.metrics_after.variance /= n;
  mean.metrics_after.mse /= n;
  return mean;
}

nlohmann::json buildReport(const nlohmann::json& config,
                           const std::vector<RunRecord>& runs) {
  nlohmann::json report;
  report["config"] = config;
  report["runs"] = nlohmann::json::array();
  for (const RunRecord& run : runs) report["runs"].push_back(toJson(run));
  nlohmann::json aggregate = toJson(aggregateRuns(runs));
  aggregate.erase("seed");
  report["aggregate"] = aggregate;
  return report;
}

}  // namespace histopt
