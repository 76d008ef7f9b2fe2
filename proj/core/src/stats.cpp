#include "equidesign/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace equi {

namespace {

double mean(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs, double mu) {
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return ss / static_cast<double>(xs.size() - 1);
}

// Returns nullopt when the one-way decomposition does not apply.
std::optional<double> clustered_variance(const ReplicateEffects& groups, double grand_mean) {
  if (groups.size() < 2) return std::nullopt;
  const std::size_t m = groups.front().size();
  if (m < 2) return std::nullopt;
  for (const auto& g : groups) {
    if (g.size() != m) return std::nullopt;
  }
  const auto r = static_cast<double>(groups.size());
  const auto mm = static_cast<double>(m);
  double between = 0.0;
  double within = 0.0;
  for (const auto& g : groups) {
    const double gm = mean(g);
    between += (gm - grand_mean) * (gm - grand_mean);
    for (double x : g) within += (x - gm) * (x - gm);
  }
  const double msb = mm * between / (r - 1.0);
  const double msw = within / (r * (mm - 1.0));
  return msw + std::max(0.0, (msb - msw) / mm);
}

}  // namespace

std::string to_string(SigmaEstimator estimator) {
  return estimator == SigmaEstimator::Pooled ? "pooled" : "clustered";
}

std::optional<SigmaEstimator> parse_estimator(std::string_view name) {
  if (name == "pooled") return SigmaEstimator::Pooled;
  if (name == "clustered") return SigmaEstimator::Clustered;
  return std::nullopt;
}

FactorStats pooled_stats(std::span<const ReplicateEffects> per_factor, SigmaEstimator estimator) {
  FactorStats out;
  const std::size_t d = per_factor.size();
  out.mu.reserve(d);
  out.mu_star.reserve(d);
  out.sigma.reserve(d);
  out.effects.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> all;
    for (const auto& rep : per_factor[i]) all.insert(all.end(), rep.begin(), rep.end());
    if (all.size() < 2) {
      throw std::invalid_argument("factor " + std::to_string(i + 1) +
                                  " has fewer than two elementary effects");
    }
    const double mu = mean(all);
    double abs_sum = 0.0;
    for (double x : all) abs_sum += std::abs(x);
    double var = sample_variance(all, mu);
    if (estimator == SigmaEstimator::Clustered) {
      if (auto v = clustered_variance(per_factor[i], mu)) var = *v;
    }
    out.mu.push_back(mu);
    out.mu_star.push_back(abs_sum / static_cast<double>(all.size()));
    out.sigma.push_back(std::sqrt(var));
    out.effects.push_back(std::move(all));
  }
  return out;
}

}  // namespace equi
