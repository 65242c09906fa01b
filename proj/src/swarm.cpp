#include "histopt/swarm.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace histopt {

SwarmConfig SwarmConfig::withTableDefaults(int dimension, int population) {
  SwarmConfig config;
  config.population = population;
  config.rooster_count =
      std::max(1, static_cast<int>(std::floor(0.05 * population)));
  config.hen_count =
      std::max(1, static_cast<int>(std::floor(0.75 * population)));
  config.mother_count =
      std::max(1, static_cast<int>(std::floor(0.1 * config.hen_count)));
  config.chick_count = population - config.rooster_count - config.hen_count;
  config.dimension = dimension;
  config.lower_bound = Vector::Zero(dimension);
  config.upper_bound = Vector::Ones(dimension);
  return config;
}

void SwarmConfig::validate() const {
  const auto fail = [](const std::string& what) {
    throw std::invalid_argument("invalid swarm config: " + what);
  };
  if (population <= 0) fail("population must be positive");
  if (rooster_count <= 0) fail("rooster_count must be positive");
  if (hen_count <= 0) fail("hen_count must be positive");
  if (chick_count <= 0) fail("chick_count must be positive");
  if (rooster_count + hen_count + chick_count != population) {
    fail("rooster_count + hen_count + chick_count must equal population");
  }
  if (rooster_count >= hen_count) fail("rooster_count must be less than hen_count");
  if (mother_count > hen_count) fail("mother_count cannot exceed hen_count");
  if (chick_count >= 1 && mother_count < 1) {
    fail("mother_count must be at least 1 when chicks exist");
  }
  if (reorg_period <= 0) fail("reorg_period must be positive");
  if (max_iters <= 0) fail("max_iters must be positive");
  if (dimension <= 0) fail("dimension must be positive");
  if (lower_bound.size() != dimension || upper_bound.size() != dimension) {
    fail("bounds must have one entry per dimension");
  }
  for (int d = 0; d < dimension; ++d) {
    if (!(lower_bound[d] < upper_bound[d])) {
      fail("lower_bound must be strictly below upper_bound in every dimension");
    }
  }
  if (!(fl_min >= 0 && fl_min <= fl_max)) {
    fail("chick follow range requires 0 <= fl_min <= fl_max");
  }
  if (!(s_min > 0 && s_min <= s_max)) fail("require 0 < s_min <= s_max");
  if (!(epsilon > 0)) fail("epsilon must be positive");
  if (static_cast<int>(initial_anchors.size()) > population) {
    fail("more initial anchors than chickens");
  }
  for (const Vector& anchor : initial_anchors) {
    if (anchor.size() != dimension) fail("initial anchor dimension mismatch");
  }
}

ChickenSwarm::ChickenSwarm(SwarmConfig config, ObjectiveFn objective)
    : config_(std::move(config)),
      objective_(std::move(objective)),
      rng_(config_.seed) {
  config_.validate();

  const int n = config_.population;
  chickens_.resize(n);
  for (int i = 0; i < n; ++i) {
    Vector position(config_.dimension);
    if (i < static_cast<int>(config_.initial_anchors.size())) {
      position = config_.initial_anchors[i];
      clampToBounds(position);
    } else {
      for (int d = 0; d < config_.dimension; ++d) {
        position[d] =
            rng_.uniform(config_.lower_bound[d], config_.upper_bound[d]);
      }
    }
    Chicken& chicken = chickens_[i];
    chicken.position = position;
    chicken.fitness = evaluate(position);
    chicken.best_position = position;
    chicken.best_fitness = chicken.fitness;
  }

  best_fitness_ = chickens_[0].best_fitness;
  best_position_ = chickens_[0].best_position;
  for (int i = 1; i < n; ++i) {
    if (chickens_[i].best_fitness < best_fitness_) {
      best_fitness_ = chickens_[i].best_fitness;
      best_position_ = chickens_[i].best_position;
    }
  }

  assignRoles();
}

double ChickenSwarm::evaluate(const Vector& position) {
  const double value = objective_(position);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "objective returned non-finite value at position [";
    const Eigen::Index shown = std::min<Eigen::Index>(position.size(), 8);
    for (Eigen::Index d = 0; d < shown; ++d) {
      if (d > 0) msg << ", ";
      msg << position[d];
    }
    if (position.size() > shown) msg << ", ...";
    msg << "]";
    throw std::runtime_error(msg.str());
  }
  ++evaluations_;
  return value;
}

void ChickenSwarm::clampToBounds(Vector& position) const {
  position = position.cwiseMax(config_.lower_bound).cwiseMin(config_.upper_bound);
}

void ChickenSwarm::assignRoles() {
  const int n = config_.population;
  const int roosters = config_.rooster_count;
  const int hens = config_.hen_count;
  const int mothers = config_.mother_count;

  rank_order_.resize(n);
  std::iota(rank_order_.begin(), rank_order_.end(), 0);
  std::sort(rank_order_.begin(), rank_order_.end(), [this](int a, int b) {
    if (chickens_[a].fitness != chickens_[b].fitness) {
      return chickens_[a].fitness < chickens_[b].fitness;
    }
    return a < b;  // ties: lower index wins the better role
  });

  for (int r = 0; r < roosters; ++r) {
    Chicken& chicken = chickens_[rank_order_[r]];
    chicken.role = ChickenRole::Rooster;
    chicken.group_rooster = rank_order_[r];
    chicken.mother = -1;
    chicken.is_mother = false;
  }

  for (int h = roosters; h < roosters + hens; ++h) {
    Chicken& chicken = chickens_[rank_order_[h]];
    chicken.role = ChickenRole::Hen;
    chicken.group_rooster = rank_order_[rng_.below(roosters)];
    chicken.mother = -1;
    chicken.is_mother = false;
  }

  // Mothers: a uniform sample of `mothers` distinct hens.
  std::vector<int> hen_pool(rank_order_.begin() + roosters,
                            rank_order_.begin() + roosters + hens);
  for (int m = 0; m < mothers; ++m) {
    const int pick = m + rng_.below(hens - m);
    std::swap(hen_pool[m], hen_pool[pick]);
    chickens_[hen_pool[m]].is_mother = true;
  }

  for (int c = roosters + hens; c < n; ++c) {
    Chicken& chicken = chickens_[rank_order_[c]];
    chicken.role = ChickenRole::Chick;
    chicken.mother = hen_pool[rng_.below(mothers)];
    chicken.is_mother = false;
    // A chick inherits its group through its mother.
    chicken.group_rooster = chickens_[chicken.mother].group_rooster;
  }
}

void ChickenSwarm::recordMove(int index, Vector position) {
  clampToBounds(position);
  Chicken& chicken = chickens_[index];
  chicken.position = std::move(position);
  chicken.fitness = evaluate(chicken.position);
  if (chicken.fitness < chicken.best_fitness) {
    chicken.best_fitness = chicken.fitness;
    chicken.best_position = chicken.position;
  }
  if (chicken.fitness < best_fitness_) {
    best_fitness_ = chicken.fitness;
    best_position_ = chicken.position;
  }
}

void ChickenSwarm::step() {
  if (generation_ > 0 && generation_ % config_.reorg_period == 0) {
    assignRoles();
  }

  const int n = config_.population;
  const int roosters = config_.rooster_count;
  const int hens = config_.hen_count;

  // Moves read the generation-start snapshot; matlab-style vectorized
  // semantics rather than in-place sequential updates.
  std::vector<Vector> prev_position(n);
  std::vector<double> prev_fitness(n);
  for (int i = 0; i < n; ++i) {
    prev_position[i] = chickens_[i].position;
    prev_fitness[i] = chickens_[i].fitness;
  }

  const double s = selfLearningCoefficient(generation_, config_);

  for (int rank = 0; rank < n; ++rank) {
    const int i = rank_order_[rank];
    const Chicken& chicken = chickens_[i];
    const Vector& x = prev_position[i];

    switch (chicken.role) {
      case ChickenRole::Rooster: {
        double sigma_sq = 1.0;
        if (roosters > 1) {
          int other_rank = rng_.below(roosters - 1);
          if (other_rank >= rank) ++other_rank;  // skip self among rooster ranks
          const int k = rank_order_[other_rank];
          sigma_sq = update_rules::roosterSigmaSq(prev_fitness[i],
                                                  prev_fitness[k],
                                                  config_.epsilon);
        }
        const double sigma = std::sqrt(sigma_sq);
        Vector noise(config_.dimension);
        if (config_.per_dimension_randn) {
          for (int d = 0; d < config_.dimension; ++d) {
            noise[d] = sigma * rng_.gaussian();
          }
        } else {
          noise.setConstant(sigma * rng_.gaussian());
        }
        recordMove(i, update_rules::roosterMove(x, noise));
        break;
      }
      case ChickenRole::Hen: {
        const int r1 = chicken.group_rooster;
        // r2: any other rooster or hen, distinct from this hen and from r1.
        int r2 = i;
        do {
          r2 = rank_order_[rng_.below(roosters + hens)];
        } while (r2 == i || r2 == r1);
        const double s1 = update_rules::henS1(prev_fitness[i],
                                              prev_fitness[r1],
                                              config_.epsilon);
        const double s2 = update_rules::henS2(prev_fitness[i],
                                              prev_fitness[r2],
                                              config_.literal_s2);
        Vector rand1(config_.dimension);
        Vector rand2(config_.dimension);
        if (config_.per_dimension_rand) {
          for (int d = 0; d < config_.dimension; ++d) rand1[d] = rng_.uniform01();
          for (int d = 0; d < config_.dimension; ++d) rand2[d] = rng_.uniform01();
        } else {
          rand1.setConstant(rng_.uniform01());
          rand2.setConstant(rng_.uniform01());
        }
        recordMove(i, update_rules::henMove(x, prev_position[r1],
                                            prev_position[r2], s1, s2, rand1,
                                            rand2));
        break;
      }
      case ChickenRole::Chick: {
        const double fl = rng_.uniform(config_.fl_min, config_.fl_max);
        const Vector& mother = prev_position[chicken.mother];
        if (config_.variant == SwarmVariant::Cso) {
          recordMove(i, update_rules::chickMoveCso(x, mother, fl));
        } else {
          const Vector& rooster = prev_position[chicken.group_rooster];
          recordMove(i, update_rules::chickMoveIcso(
                            x, mother, rooster, s, fl,
                            config_.chick_follow_rooster));
        }
        break;
      }
    }
  }

  ++generation_;
}

MinimizeResult ChickenSwarm::run() {
  MinimizeResult result;
  result.history.reserve(config_.max_iters);
  for (int t = 0; t < config_.max_iters; ++t) {
    step();
    result.history.push_back(best_fitness_);
  }
  result.best_position = best_position_;
  result.best_fitness = best_fitness_;
  return result;
}

MinimizeResult minimize(const ObjectiveFn& objective, const SwarmConfig& config) {
  ChickenSwarm swarm(config, objective);
  return swarm.run();
}

}  // namespace histopt
