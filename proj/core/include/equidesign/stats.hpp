#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace equi {

/// Elementary effects of one factor, grouped by replicate: samples[j] holds the
/// m effects obtained from replicate j.
using ReplicateEffects = std::vector<std::vector<double>>;

enum class SigmaEstimator {
  /// Sample standard deviation over all m*r effects.
  Pooled,
  /// One-way random-effects decomposition with replicates as clusters:
  /// sigma^2 = MSW + max(0, (MSB - MSW) / m). Falls back to Pooled when a
  /// replicate holds a single effect or the groups are unbalanced.
  Clustered,
};

std::string to_string(SigmaEstimator estimator);
std::optional<SigmaEstimator> parse_estimator(std::string_view name);

/// Morris statistics per factor.
struct FactorStats {
  std::vector<double> mu;
  std::vector<double> mu_star;
  std::vector<double> sigma;
  std::vector<std::vector<double>> effects;  ///< all samples per factor, replicate order

  std::size_t factors() const { return mu.size(); }
};

/// Throws std::invalid_argument if some factor has fewer than two samples.
FactorStats pooled_stats(std::span<const ReplicateEffects> per_factor,
                         SigmaEstimator estimator = SigmaEstimator::Pooled);

}  // namespace equi
