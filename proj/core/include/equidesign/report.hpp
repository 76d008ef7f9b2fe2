#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equidesign/effects.hpp"
#include "equidesign/screening.hpp"

namespace equi {

/// factor,mu,mu_star,sigma,class (factor numbered from 1).
std::string report_csv(const ScreenReport& report);

/// factor,mu_star,sigma,class for scatter plots.
std::string plot_csv(const ScreenReport& report);

/// Config, per-replicate randomization metadata and evaluation counts.
std::string run_metadata_json(const ScreenConfig& config, const ScreenReport& report);

/// direction,row,col,sign,lower_vertex,upper_vertex; rows and columns numbered from 1.
std::string pairs_csv(const OrderedDesign& od);

/// {seed, reflection, permutation, base_point, delta}; permutation images numbered from 1.
std::string replication_json(std::uint64_t seed, const Randomization& transform, int d,
                             const Point& base, double delta);

struct ConfigParse {
  std::optional<ScreenConfig> config;
  std::vector<std::string> errors;  ///< every problem found, parse and range alike
  bool syntax_error = false;        ///< the text was not a JSON object at all
};

/// Reads a screening config document. "seed" is required; everything else
/// defaults to the values in ScreenConfig, with delta defaulting to
/// levels / (2 (levels - 1)).
ConfigParse parse_screen_config(std::string_view text);

}  // namespace equi
