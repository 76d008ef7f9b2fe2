#include "equidesign/screening.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "equidesign/test_function.hpp"

namespace equi {

namespace {

struct PointFailure {
  std::size_t point;
  std::string what;
};

// Evaluates f at every point. On failure reports the lowest failing index so
// the error does not depend on scheduling.
std::vector<double> evaluate(const std::vector<Point>& points, const Objective& f, int threads,
                             std::optional<PointFailure>& failure) {
  std::vector<double> values(points.size());
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, points.size());
  std::vector<std::optional<PointFailure>> failures(workers);

  auto work = [&](std::size_t w) {
    for (std::size_t k = w; k < points.size(); k += workers) {
      try {
        values[k] = f(points[k]);
        if (!std::isfinite(values[k])) throw std::runtime_error("objective returned a non-finite value");
      } catch (const std::exception& e) {
        failures[w] = PointFailure{k, e.what()};
        return;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& slot : failures) {
    if (slot && (!failure || slot->point < failure->point)) failure = std::move(slot);
  }
  return values;
}

double mean_of(const std::vector<double>& xs, bool absolute) {
  double s = 0.0;
  for (double x : xs) s += absolute ? std::abs(x) : x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

std::string to_string(FactorClass c) {
  switch (c) {
    case FactorClass::C0: return "C0";
    case FactorClass::C1: return "C1";
    case FactorClass::C2: return "C2";
  }
  return "?";
}

std::vector<FactorClass> classify(const FactorStats& stats, const Thresholds& thresholds) {
  const double max_mu_star =
      stats.mu_star.empty() ? 0.0 : *std::max_element(stats.mu_star.begin(), stats.mu_star.end());
  const double max_sigma =
      stats.sigma.empty() ? 0.0 : *std::max_element(stats.sigma.begin(), stats.sigma.end());
  std::vector<FactorClass> out;
  out.reserve(stats.factors());
  for (std::size_t i = 0; i < stats.factors(); ++i) {
    if (stats.mu_star[i] <= thresholds.tau0 * max_mu_star &&
        stats.sigma[i] <= thresholds.tau0 * max_sigma) {
      out.push_back(FactorClass::C0);
    } else if (stats.sigma[i] >= thresholds.rho * stats.mu_star[i]) {
      out.push_back(FactorClass::C2);
    } else {
      out.push_back(FactorClass::C1);
    }
  }
  return out;
}

ScreenError::ScreenError(std::size_t replicate, std::size_t point, const std::string& what)
    : std::runtime_error("replicate " + std::to_string(replicate + 1) + ", point " +
                         std::to_string(point + 1) + ": " + what),
      replicate_(replicate),
      point_(point) {}

std::vector<std::string> validate(const ScreenConfig& c) {
  std::vector<std::string> errors;
  if (auto why = family_constraint_violation(c.family, c.d, c.m)) errors.push_back(*why);
  if (c.r < 2) errors.push_back("r must be at least 2");
  if (c.m * static_cast<std::uint64_t>(std::max(c.r, 0)) < 2) {
    errors.push_back("m * r must be at least 2 to estimate sigma");
  }
  if (c.levels < 2) errors.push_back("levels must be at least 2");
  if (!(c.delta > 0.0) || c.delta > 1.0) {
    errors.push_back("delta must lie in (0, 1]");
  } else if (c.levels >= 2) {
    // The grid point 0 always fits; delta must also be a multiple of the spacing.
    const double steps = c.delta * (c.levels - 1);
    if (std::abs(steps - std::round(steps)) > 1e-9) {
      errors.push_back("delta must be a multiple of the grid spacing 1/(levels-1)");
    }
  }
  if (!(c.thresholds.tau0 >= 0.0) || c.thresholds.tau0 > 1.0) errors.push_back("tau0 must lie in [0, 1]");
  if (!(c.thresholds.rho >= 0.0)) errors.push_back("rho must be non-negative");
  if (c.threads < 1) errors.push_back("threads must be at least 1");
  return errors;
}

ScreenReport run_screen(const ScreenConfig& config, const Objective& f) {
  if (auto errors = validate(config); !errors.empty()) {
    std::string msg = "invalid screening config:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  const DesignPoly design = generate(config.family, config.d, config.m);
  Rng rng = Rng::substream(config.seed, 1);

  const auto d = static_cast<std::size_t>(config.d);
  std::vector<ReplicateEffects> per_factor(d);
  ScreenReport report;
  report.family = config.family;
  report.design_size = design.size();

  for (int j = 0; j < config.r; ++j) {
    RandomizedDesign rd = randomize(design, rng);
    const OrderedDesign od = order_vertices(std::move(rd.design));
    Point base = sample_base(config.d, config.delta, config.levels, rng);
    const Embedding emb = embed(od, base, config.delta);

    std::optional<PointFailure> failure;
    const std::vector<double> values = evaluate(emb.points, f, config.threads, failure);
    if (failure) throw ScreenError(static_cast<std::size_t>(j), failure->point, failure->what);

    ReplicateRecord record{std::move(rd.transform), std::move(base), od.size(), {}, {}};
    for (std::size_t i = 0; i < d; ++i) {
      auto effects = elementary_effects(build_incidence(od, static_cast<int>(i) + 1), values,
                                        config.delta);
      record.mu.push_back(mean_of(effects, false));
      record.mu_star.push_back(mean_of(effects, true));
      per_factor[i].push_back(std::move(effects));
    }
    report.n_evals += od.size();
    report.replicates.push_back(std::move(record));
  }

  report.stats = pooled_stats(per_factor, config.sigma_estimator);
  report.classes = classify(report.stats, config.thresholds);
  return report;
}

ScreenReport run_screen(const ScreenConfig& config) {
  if (config.d != kTestFunctionDim) {
    throw std::invalid_argument("the built-in test function needs d = 20");
  }
  const TestFunction f(config.seed);
  return run_screen(config, [&f](std::span<const double> x) { return f(x); });
}

}  // namespace equi
