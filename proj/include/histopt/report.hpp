#pragma once

// Machine-readable run reports. Schema:
//   {config: {...}, runs: [{seed, achieved_cost, oracle_cost, gap,
//    wall_time_s, metrics_before: {...}, metrics_after: {...}}, ...],
//    aggregate: {...}}
// Aggregate fields are arithmetic means of the per-run fields. Numbers are
// IEEE doubles; infinities serialize as the string "inf" / "-inf".

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "histopt/metrics.hpp"

namespace histopt {

struct RunRecord {
  std::uint64_t seed = 0;
  double achieved_cost = 0;
  double oracle_cost = 0;
  double gap = 0;
  double wall_time_s = 0;
  MetricSet metrics_before;
  MetricSet metrics_after;
};

/// Relative optimality gap; falls back to the absolute difference when the
/// oracle cost is zero so the value is always defined.
double costGap(double achieved_cost, double oracle_cost);

/// IEEE double to JSON; infinities become "inf"/"-inf" strings so reports
/// stay comparable and valid JSON.
nlohmann::json jsonNumber(double value);

nlohmann::json toJson(const MetricSet& metrics);
nlohmann::json toJson(const RunRecord& run);

/// Mean of every numeric field across runs; requires at least one run.
RunRecord aggregateRuns(const std::vector<RunRecord>& runs);

/// Full report document for one batch of repeated runs.
nlohmann::json buildReport(const nlohmann::json& config,
                           const std::vector<RunRecord>& runs);

}  // namespace histopt
