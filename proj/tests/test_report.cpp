#include <limits>

#include <doctest.h>

#include "histopt/report.hpp"

using namespace histopt;

namespace {

RunRecord makeRun(std::uint64_t seed, double achieved, double oracle) {
  RunRecord run;
  run.seed = seed;
  run.achieved_cost = achieved;
  run.oracle_cost = oracle;
  run.gap = costGap(achieved, oracle);
  run.wall_time_s = 0.25 * static_cast<double>(seed + 1);
  run.metrics_before.entropy_bits = 6.0 + 0.1 * seed;
  run.metrics_before.psnr_db = std::numeric_limits<double>::infinity();
  run.metrics_before.mean_intensity = 120.0;
  run.metrics_before.variance = 40.0;
  run.metrics_before.mse = 0.0;
  run.metrics_after.entropy_bits = 5.0;
  run.metrics_after.psnr_db = 20.0 + static_cast<double>(seed);
  run.metrics_after.mean_intensity = 130.0 + static_cast<double>(seed);
  run.metrics_after.variance = 55.0;
  run.metrics_after.mse = 100.0;
  return run;
}

}  // namespace

TEST_CASE("cost gap is relative when the oracle cost is positive") {
  CHECK(costGap(110.0, 100.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(costGap(100.0, 100.0) == 0.0);
  CHECK(costGap(3.0, 0.0) == 3.0);  // absolute fallback
}

TEST_CASE("aggregate fields are the arithmetic means of per-run fields") {
  const std::vector<RunRecord> runs = {makeRun(0, 100.0, 90.0),
                                       makeRun(1, 110.0, 90.0),
                                       makeRun(2, 95.0, 90.0)};
  const RunRecord mean = aggregateRuns(runs);
  CHECK(mean.achieved_cost ==
        doctest::Approx((100.0 + 110.0 + 95.0) / 3.0).epsilon(1e-12));
  CHECK(mean.oracle_cost == doctest::Approx(90.0).epsilon(1e-12));
  CHECK(mean.gap ==
        doctest::Approx((runs[0].gap + runs[1].gap + runs[2].gap) / 3.0)
            .epsilon(1e-12));
  CHECK(mean.metrics_after.psnr_db == doctest::Approx(21.0).epsilon(1e-12));
  CHECK(std::isinf(mean.metrics_before.psnr_db));  // inf dominates the mean

  CHECK_THROWS_AS(aggregateRuns({}), std::invalid_argument);
}

TEST_CASE("reports are valid json with infinities as strings") {
  const std::vector<RunRecord> runs = {makeRun(0, 100.0, 90.0),
                                       makeRun(1, 110.0, 90.0)};
  const nlohmann::json config = {{"command", "enhance"}, {"seed", 0}};
  const nlohmann::json report = buildReport(config, runs);

  // Round-trip through text to prove serializability.
  const nlohmann::json parsed = nlohmann::json::parse(report.dump());
  CHECK(parsed["config"]["command"] == "enhance");
  REQUIRE(parsed["runs"].size() == 2);
  CHECK(parsed["runs"][0]["metrics_before"]["psnr_db"] == "inf");
  CHECK(parsed["aggregate"]["metrics_before"]["psnr_db"] == "inf");
  CHECK(!parsed["aggregate"].contains("seed"));
  CHECK(parsed["runs"][1]["achieved_cost"].get<double>() ==
        doctest::Approx(110.0));
  CHECK(parsed["aggregate"]["achieved_cost"].get<double>() ==
        doctest::Approx(105.0).epsilon(1e-12));
}
