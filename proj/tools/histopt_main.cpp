#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "histopt/pgm_io.hpp"
#include "histopt/pipeline.hpp"
#include "histopt/report.hpp"

namespace {

using histopt::EnhancementParams;
using histopt::EnhancementResult;
using histopt::GrayImage;
using histopt::OracleMode;
using histopt::RunRecord;
using histopt::SwarmVariant;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string input;
  double lambda = 5.0;
  double gamma = 50000.0;
  int iters = 1000;
  int pop = 20;
  std::uint64_t seed = 0;
  std::string report_path;
};

struct EnhanceOptions : CommonOptions {
  std::string output;
  std::string optimizer = "icso";
  int repeats = 1;
};

struct CompareOptions : CommonOptions {
  std::string optimizers = "icso,cso";
  int repeats = 10;
};

struct SweepOptions : CommonOptions {
  std::string optimizer = "closed-form";
  std::vector<double> lambdas;
  std::vector<double> gammas;
};

EnhancementParams makeParams(const CommonOptions& options,
                             const std::string& optimizer) {
  EnhancementParams params;
  params.lambda = options.lambda;
  params.gamma = options.gamma;
  params.swarm = histopt::SwarmConfig::withTableDefaults(
      static_cast<int>(histopt::kGrayLevels), options.pop);
  params.swarm.max_iters = options.iters;
  params.swarm.seed = options.seed;
  if (optimizer == "closed-form") {
    params.oracle_mode = OracleMode::ClosedForm;
  } else {
    params.oracle_mode = OracleMode::Metaheuristic;
    params.swarm.variant =
        optimizer == "cso" ? SwarmVariant::Cso : SwarmVariant::Icso;
  }
  return params;
}

RunRecord recordRun(std::uint64_t seed, const EnhancementResult& result,
                    double wall_time_s) {
  RunRecord record;
  record.seed = seed;
  record.achieved_cost = result.achieved_cost;
  record.oracle_cost = result.oracle_cost;
  record.gap = histopt::costGap(result.achieved_cost, result.oracle_cost);
  record.wall_time_s = wall_time_s;
  record.metrics_before = result.metrics_before;
  record.metrics_after = result.metrics_after;
  return record;
}

std::vector<std::string> splitList(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void writeJson(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

int runEnhance(const EnhanceOptions& options) {
  const GrayImage image = histopt::readPgm(options.input);

  std::vector<RunRecord> runs;
  EnhancementResult best;
  bool have_best = false;

  for (int r = 0; r < options.repeats; ++r) {
    EnhancementParams params = makeParams(options, options.optimizer);
    params.swarm.seed = options.seed + static_cast<std::uint64_t>(r);
    const auto start = std::chrono::steady_clock::now();
    EnhancementResult result = histopt::enhance(image, params);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    runs.push_back(recordRun(params.swarm.seed, result, elapsed.count()));
    if (!have_best || result.achieved_cost < best.achieved_cost) {
      best = std::move(result);
      have_best = true;
    }
  }

  if (!options.output.empty()) {
    histopt::writePgm(best.output, options.output);
  }
  if (!options.report_path.empty()) {
    const nlohmann::json config = {
        {"command", "enhance"},     {"input", options.input},
        {"output", options.output}, {"lambda", options.lambda},
        {"gamma", options.gamma},   {"optimizer", options.optimizer},
        {"iters", options.iters},   {"pop", options.pop},
        {"seed", options.seed},     {"repeats", options.repeats}};
    writeJson(options.report_path, histopt::buildReport(config, runs));
  }
  std::cout << "enhance: best cost " << best.achieved_cost << " (oracle "
            << best.oracle_cost << ") over " << options.repeats << " run(s)\n";
  return kExitOk;
}

int runCompare(const CompareOptions& options) {
  const std::vector<std::string> names = splitList(options.optimizers);
  if (names.empty()) {
    std::cerr << "error: --optimizers list is empty\n";
    return kExitUsage;
  }
  for (const std::string& name : names) {
    if (name != "icso" && name != "cso" && name != "closed-form") {
      std::cerr << "error: unknown optimizer '" << name << "'\n";
      return kExitUsage;
    }
  }

  const GrayImage image = histopt::readPgm(options.input);

  nlohmann::json sections = nlohmann::json::array();
  for (const std::string& name : names) {
    std::vector<RunRecord> runs;
    std::vector<double> costs;
    std::vector<double> gaps;
    for (int r = 0; r < options.repeats; ++r) {
      EnhancementParams params = makeParams(options, name);
      params.swarm.seed = options.seed + static_cast<std::uint64_t>(r);
      const auto start = std::chrono::steady_clock::now();
      const EnhancementResult result = histopt::enhance(image, params);
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      runs.push_back(recordRun(params.swarm.seed, result, elapsed.count()));
      costs.push_back(result.achieved_cost);
      gaps.push_back(runs.back().gap);
    }
    nlohmann::json section = histopt::buildReport(nlohmann::json::object(), runs);
    section.erase("config");
    section["optimizer"] = name;
    section["cost_stats"] = {
        {"mean_cost", histopt::jsonNumber(
                          std::accumulate(costs.begin(), costs.end(), 0.0) /
                          static_cast<double>(costs.size()))},
        {"median_cost", histopt::jsonNumber(median(costs))},
        {"mean_gap", histopt::jsonNumber(
                         std::accumulate(gaps.begin(), gaps.end(), 0.0) /
                         static_cast<double>(gaps.size()))},
        {"median_gap", histopt::jsonNumber(median(gaps))}};
    sections.push_back(std::move(section));
    std::cout << "compare: " << name << " median cost "
              << median(costs) << ", median gap " << median(gaps) << "\n";
  }

  if (!options.report_path.empty()) {
    const nlohmann::json doc = {
        {"config",
         {{"command", "compare"},
          {"input", options.input},
          {"lambda", options.lambda},
          {"gamma", options.gamma},
          {"iters", options.iters},
          {"pop", options.pop},
          {"seed", options.seed},
          {"repeats", options.repeats},
          {"optimizers", names}}},
        {"optimizers", sections}};
    writeJson(options.report_path, doc);
  }
  return kExitOk;
}

int runSweep(const SweepOptions& options) {
  const GrayImage image = histopt::readPgm(options.input);
  EnhancementParams params = makeParams(options, options.optimizer);
  const std::vector<EnhancementResult> results =
      histopt::sweep(image, options.lambdas, options.gammas, params);

  nlohmann::json points = nlohmann::json::array();
  std::size_t index = 0;
  for (const double lambda : options.lambdas) {
    for (const double gamma : options.gammas) {
      const EnhancementResult& result = results[index++];
      points.push_back(
          {{"lambda", lambda},
           {"gamma", gamma},
           {"achieved_cost", histopt::jsonNumber(result.achieved_cost)},
           {"oracle_cost", histopt::jsonNumber(result.oracle_cost)},
           {"metrics_after", histopt::toJson(result.metrics_after)}});
    }
  }
  if (!options.report_path.empty()) {
    const nlohmann::json doc = {{"config",
                                 {{"command", "sweep"},
                                  {"input", options.input},
                                  {"optimizer", options.optimizer},
                                  {"lambdas", options.lambdas},
                                  {"gammas", options.gammas},
                                  {"seed", options.seed}}},
                                {"points", points}};
    writeJson(options.report_path, doc);
  }
  std::cout << "sweep: " << results.size() << " grid point(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Grayscale contrast enhancement by histogram modification: a chicken "
      "swarm optimizer (original and improved chick rules) minimizes a "
      "quadratic histogram objective, with the exact closed-form solution "
      "available as reference"};
  app.require_subcommand(1);

  EnhanceOptions enhance_options;
  CLI::App* cmd_enhance =
      app.add_subcommand("enhance", "Enhance one image and write the result");
  cmd_enhance->add_option("--input", enhance_options.input, "input PGM path")
      ->required();
  cmd_enhance->add_option("--output", enhance_options.output,
                          "output PGM path (best run)");
  cmd_enhance->add_option("--lambda", enhance_options.lambda, "contrast weight");
  cmd_enhance->add_option("--gamma", enhance_options.gamma, "smoothness weight");
  cmd_enhance
      ->add_option("--optimizer", enhance_options.optimizer,
                   "icso | cso | closed-form")
      ->check(CLI::IsMember({"icso", "cso", "closed-form"}));
  cmd_enhance->add_option("--iters", enhance_options.iters, "swarm generations");
  cmd_enhance->add_option("--pop", enhance_options.pop, "swarm population");
  cmd_enhance->add_option("--seed", enhance_options.seed, "base RNG seed");
  cmd_enhance->add_option("--repeats", enhance_options.repeats,
                          "independent runs (seed + index)");
  cmd_enhance->add_option("--report", enhance_options.report_path,
                          "JSON report path");

  CompareOptions compare_options;
  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "Run several optimizers and report averaged metrics");
  cmd_compare->add_option("--input", compare_options.input, "input PGM path")
      ->required();
  cmd_compare->add_option("--optimizers", compare_options.optimizers,
                          "comma list from {icso, cso, closed-form}");
  cmd_compare->add_option("--repeats", compare_options.repeats,
                          "runs per optimizer");
  cmd_compare->add_option("--lambda", compare_options.lambda, "contrast weight");
  cmd_compare->add_option("--gamma", compare_options.gamma, "smoothness weight");
  cmd_compare->add_option("--iters", compare_options.iters, "swarm generations");
  cmd_compare->add_option("--pop", compare_options.pop, "swarm population");
  cmd_compare->add_option("--seed", compare_options.seed, "base RNG seed");
  cmd_compare->add_option("--report", compare_options.report_path,
                          "JSON report path");

  SweepOptions sweep_options;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Enhance over a (lambda, gamma) grid and report metrics");
  cmd_sweep->add_option("--input", sweep_options.input, "input PGM path")
      ->required();
  cmd_sweep->add_option("--lambdas", sweep_options.lambdas, "lambda values")
      ->required();
  cmd_sweep->add_option("--gammas", sweep_options.gammas, "gamma values")
      ->required();
  cmd_sweep
      ->add_option("--optimizer", sweep_options.optimizer,
                   "icso | cso | closed-form")
      ->check(CLI::IsMember({"icso", "cso", "closed-form"}));
  cmd_sweep->add_option("--iters", sweep_options.iters, "swarm generations");
  cmd_sweep->add_option("--pop", sweep_options.pop, "swarm population");
  cmd_sweep->add_option("--seed", sweep_options.seed, "base RNG seed");
  cmd_sweep->add_option("--report", sweep_options.report_path,
                        "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_enhance->parsed()) return runEnhance(enhance_options);
    if (cmd_compare->parsed()) return runCompare(compare_options);
    if (cmd_sweep->parsed()) return runSweep(sweep_options);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
