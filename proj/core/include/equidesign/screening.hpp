#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "equidesign/design_gen.hpp"
#include "equidesign/effects.hpp"
#include "equidesign/stats.hpp"

namespace equi {

enum class FactorClass { C0, C1, C2 };

std::string to_string(FactorClass c);

struct Thresholds {
  double tau0 = 0.1;  ///< negligible: both mu* and sigma within tau0 of the largest
  double rho = 0.5;   ///< non-linear when sigma >= rho * mu*
};

/// C0 if mu*_i <= tau0 max mu* and sigma_i <= tau0 max sigma; otherwise C2 if
/// sigma_i >= rho mu*_i; otherwise C1.
std::vector<FactorClass> classify(const FactorStats& stats, const Thresholds& thresholds = {});

/// Must be a pure function of its argument; it may be called concurrently.
using Objective = std::function<double(std::span<const double>)>;

struct ScreenConfig {
  int d = 20;
  std::uint64_t m = 4;
  int r = 3;
  int levels = 4;
  double delta = 2.0 / 3.0;
  std::uint64_t seed = 0;
  Thresholds thresholds;
  Family family = Family::M;
  SigmaEstimator sigma_estimator = SigmaEstimator::Pooled;
  int threads = 1;
};

/// Every violated constraint, empty when the config is usable.
std::vector<std::string> validate(const ScreenConfig& config);

struct ReplicateRecord {
  Randomization transform;
  Point base;
  std::size_t n_evals = 0;
  std::vector<double> mu;       ///< per factor, this replicate only
  std::vector<double> mu_star;  ///< per factor, this replicate only
};

struct ScreenReport {
  FactorStats stats;
  std::vector<FactorClass> classes;
  std::uint64_t n_evals = 0;
  Family family = Family::M;
  std::size_t design_size = 0;
  std::vector<ReplicateRecord> replicates;
};

/// Objective failure, tagged with where it happened.
class ScreenError : public std::runtime_error {
 public:
  ScreenError(std::size_t replicate, std::size_t point, const std::string& what);

  std::size_t replicate() const { return replicate_; }
  std::size_t point() const { return point_; }

 private:
  std::size_t replicate_;
  std::size_t point_;
};

/// Generates the family design, then for each replicate randomizes it, draws a
/// grid base point, evaluates f on the embedded vertices and extracts m
/// effects per direction. Randomization uses Rng::substream(seed, 1); the
/// result does not depend on `threads`.
ScreenReport run_screen(const ScreenConfig& config, const Objective& f);

/// Same, on the 20-factor TestFunction(config.seed). Requires d == 20.
ScreenReport run_screen(const ScreenConfig& config);

}  // namespace equi
