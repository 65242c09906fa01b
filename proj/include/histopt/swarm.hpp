#pragma once

// Chicken swarm optimization: a bound-constrained minimizer driven by a
// fitness hierarchy. The best individuals lead groups as roosters, the worst
// follow mother hens as chicks, and the hierarchy is redrawn every
// `reorg_period` generations. Two chick rules are provided: the original one
// (mother pull only) and the improved one (self-learning decay plus mother
// and rooster pulls).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "histopt/rng.hpp"
#include "histopt/types.hpp"

namespace histopt {

enum class SwarmVariant { Cso, Icso };
enum class ChickenRole { Rooster, Hen, Chick };

struct SwarmConfig {
  int population = 20;
  int rooster_count = 1;
  int hen_count = 15;
  int chick_count = 4;
  int mother_count = 1;

  int reorg_period = 10;  // generations between hierarchy reshuffles
  int max_iters = 1000;

  double chick_follow_rooster = 0.4;  // F
  double fl_min = 0.4;                // FL drawn uniformly per chick per generation
  double fl_max = 1.0;
  double s_min = 0.4;  // self-learning decay endpoints
  double s_max = 0.9;
  double epsilon = 1e-10;

  int dimension = 1;
  Vector lower_bound = Vector::Zero(1);
  Vector upper_bound = Vector::Ones(1);

  std::uint64_t seed = 0;
  SwarmVariant variant = SwarmVariant::Icso;

  bool literal_s2 = false;          // force the degenerate S2 = 1 hen pull
  bool per_dimension_rand = false;  // fresh uniform per coordinate in hen moves
  bool per_dimension_randn = true;  // fresh gaussian per coordinate in rooster moves

  // Optional fixed starting positions for the first chickens; the remainder
  // initialize uniformly at random within bounds.
  std::vector<Vector> initial_anchors;

  /// Stock parameterization: 5% roosters, 75% hens, 10% of hens are mothers
  /// (fractions truncated, at least one of each), remainder chicks.
  static SwarmConfig withTableDefaults(int dimension, int population = 20);

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

struct Chicken {
  Vector position;
  double fitness = 0;
  ChickenRole role = ChickenRole::Hen;
  int group_rooster = -1;  // population index of the rooster this chicken follows
  int mother = -1;         // population index of the mother hen (chicks only)
  bool is_mother = false;
  Vector best_position;
  double best_fitness = 0;
};

struct MinimizeResult {
  Vector best_position;
  double best_fitness = 0;
  std::vector<double> history;  // global best after each generation
};

using ObjectiveFn = std::function<double(const Vector&)>;

/// Self-learning coefficient for chicks: decays from s_max at t = 0 toward
/// s_min as t grows, s(t) = s_min (s_max/s_min)^(1 / (1 + 10 t / max_iters)).
inline double selfLearningCoefficient(int t, const SwarmConfig& config) {
  const double exponent =
      1.0 / (1.0 + 10.0 * static_cast<double>(t) /
                       static_cast<double>(config.max_iters));
  return config.s_min * std::pow(config.s_max / config.s_min, exponent);
}

namespace update_rules {

/// exp with the argument clamped so huge fitness gaps cannot produce inf.
inline double boundedExp(double x) {
  return std::exp(std::clamp(x, -700.0, 700.0));
}

/// Variance of the rooster's multiplicative noise: 1 when it is no worse
/// than the compared rooster, shrinking exponentially otherwise.
inline double roosterSigmaSq(double f_i, double f_k, double epsilon) {
  if (f_i <= f_k) return 1.0;
  return boundedExp((f_k - f_i) / (std::abs(f_i) + epsilon));
}

/// Pull strength toward the own-group rooster.
inline double henS1(double f_i, double f_r1, double epsilon) {
  return boundedExp((f_i - f_r1) / (std::abs(f_i) + epsilon));
}

/// Pull strength toward the randomly chosen other chicken. The `literal`
/// flag forces the degenerate constant-1 form.
inline double henS2(double f_i, double f_r2, bool literal) {
  return literal ? 1.0 : boundedExp(f_r2 - f_i);
}

/// x + noise .* x, with `noise` the per-coordinate gaussian factor.
inline Vector roosterMove(const Vector& x, const Vector& noise) {
  return x + noise.cwiseProduct(x);
}

inline Vector henMove(const Vector& x, const Vector& rooster,
                      const Vector& other, double s1, double s2,
                      const Vector& rand1, const Vector& rand2) {
  return x + s1 * rand1.cwiseProduct(rooster - x) +
         s2 * rand2.cwiseProduct(other - x);
}

inline Vector chickMoveCso(const Vector& x, const Vector& mother, double fl) {
  return x + fl * (mother - x);
}

inline Vector chickMoveIcso(const Vector& x, const Vector& mother,
                            const Vector& rooster, double s, double fl,
                            double follow_rooster) {
  return s * x + fl * (mother - x) + follow_rooster * (rooster - x);
}

}  // namespace update_rules

class ChickenSwarm {
 public:
  /// Builds the initial population (anchors first, then uniform random),
  /// evaluates it and assigns roles.
  ChickenSwarm(SwarmConfig config, ObjectiveFn objective);

  /// Redraws roles from current fitness ranks: best become roosters, worst
  /// chicks; hens pick groups at random, mothers and chick links at random.
  void assignRoles();

  /// One generation: reshuffle the hierarchy when due, then move every
  /// chicken per its role against the generation-start snapshot and refresh
  /// personal/global bests.
  void step();

  /// Runs max_iters generations and returns the best solution found.
  MinimizeResult run();

  const SwarmConfig& config() const { return config_; }
  const std::vector<Chicken>& chickens() const { return chickens_; }
  int generation() const { return generation_; }
  const Vector& bestPosition() const { return best_position_; }
  double bestFitness() const { return best_fitness_; }
  std::uint64_t evaluationCount() const { return evaluations_; }

 private:
  double evaluate(const Vector& position);
  void clampToBounds(Vector& position) const;
  void recordMove(int index, Vector position);

  SwarmConfig config_;
  ObjectiveFn objective_;
  Rng rng_;
  std::vector<Chicken> chickens_;
  std::vector<int> rank_order_;  // population indices sorted by fitness at last reorg
  Vector best_position_;
  double best_fitness_ = 0;
  int generation_ = 0;
  std::uint64_t evaluations_ = 0;
};

/// Convenience wrapper: construct a swarm and run it to completion.
MinimizeResult minimize(const ObjectiveFn& objective, const SwarmConfig& config);

}  // namespace histopt
