#include "equidesign/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <set>
#include <sstream>

namespace equi {

namespace {

using nlohmann::ordered_json;

std::ostringstream numeric_stream() {
  std::ostringstream out;
  out << std::setprecision(12);
  return out;
}

ordered_json permutation_json(const std::vector<int>& perm) {
  auto out = ordered_json::array();
  for (int p : perm) out.push_back(p + 1);
  return out;
}

}  // namespace

std::string report_csv(const ScreenReport& report) {
  auto out = numeric_stream();
  out << "factor,mu,mu_star,sigma,class\n";
  const auto& s = report.stats;
  for (std::size_t i = 0; i < s.factors(); ++i) {
    out << i + 1 << ',' << s.mu[i] << ',' << s.mu_star[i] << ',' << s.sigma[i] << ','
        << to_string(report.classes[i]) << '\n';
  }
  return out.str();
}

std::string plot_csv(const ScreenReport& report) {
  auto out = numeric_stream();
  out << "factor,mu_star,sigma,class\n";
  const auto& s = report.stats;
  for (std::size_t i = 0; i < s.factors(); ++i) {
    out << i + 1 << ',' << s.mu_star[i] << ',' << s.sigma[i] << ','
        << to_string(report.classes[i]) << '\n';
  }
  return out.str();
}

std::string run_metadata_json(const ScreenConfig& config, const ScreenReport& report) {
  ordered_json doc;
  doc["config"] = {
      {"d", config.d},
      {"m", config.m},
      {"r", config.r},
      {"levels", config.levels},
      {"delta", config.delta},
      {"seed", config.seed},
      {"tau0", config.thresholds.tau0},
      {"rho", config.thresholds.rho},
      {"family", to_string(config.family)},
      {"sigma_estimator", to_string(config.sigma_estimator)},
      {"threads", config.threads},
  };
  doc["design_size"] = report.design_size;
  doc["n_evals"] = report.n_evals;
  auto reps = ordered_json::array();
  for (std::size_t j = 0; j < report.replicates.size(); ++j) {
    const auto& rep = report.replicates[j];
    reps.push_back({
        {"replicate", j + 1},
        {"reflection", to_binary(rep.transform.reflection, config.d)},
        {"permutation", permutation_json(rep.transform.permutation)},
        {"base_point", rep.base},
        {"delta", config.delta},
        {"n_evals", rep.n_evals},
        {"mu", rep.mu},
        {"mu_star", rep.mu_star},
    });
  }
  doc["replicates"] = std::move(reps);
  return doc.dump(2) + "\n";
}

std::string pairs_csv(const OrderedDesign& od) {
  std::ostringstream out;
  const int d = od.design.dim();
  out << "direction,row,col,sign,lower_vertex,upper_vertex\n";
  for (int i = 1; i <= d; ++i) {
    for (const auto& e : build_incidence(od, i).pairs) {
      const Monomial a = od.vertices[e.row];
      const Monomial b = od.vertices[e.col];
      const Monomial lower = a.has(i) ? b : a;
      const Monomial upper = a.has(i) ? a : b;
      out << i << ',' << e.row + 1 << ',' << e.col + 1 << ',' << (e.sign > 0 ? "+1" : "-1") << ','
          << to_binary(lower, d) << ',' << to_binary(upper, d) << '\n';
    }
  }
  return out.str();
}

std::string replication_json(std::uint64_t seed, const Randomization& transform, int d,
                             const Point& base, double delta) {
  ordered_json doc;
  doc["seed"] = seed;
  doc["reflection"] = to_binary(transform.reflection, d);
  doc["permutation"] = permutation_json(transform.permutation);
  doc["base_point"] = base;
  doc["delta"] = delta;
  return doc.dump(2) + "\n";
}

ConfigParse parse_screen_config(std::string_view text) {
  ConfigParse result;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    result.errors.push_back(std::string("invalid JSON: ") + e.what());
    result.syntax_error = true;
    return result;
  }
  if (!doc.is_object()) {
    result.errors.push_back("config must be a JSON object");
    result.syntax_error = true;
    return result;
  }

  static const std::set<std::string> known = {"d",    "m",      "r",      "levels",
                                              "delta", "seed",  "tau0",   "rho",
                                              "family", "sigma_estimator", "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) result.errors.push_back("unknown field \"" + key + "\"");
  }

  ScreenConfig c;
  auto read_int = [&](const char* key, auto& target) {
    if (!doc.contains(key)) return;
    const auto& v = doc[key];
    if (!v.is_number_integer()) {
      result.errors.push_back(std::string("field \"") + key + "\" must be an integer");
      return;
    }
    using T = std::remove_reference_t<decltype(target)>;
    if (std::is_unsigned_v<T> && !v.is_number_unsigned()) {
      result.errors.push_back(std::string("field \"") + key + "\" must be non-negative");
      return;
    }
    target = v.get<T>();
  };
  auto read_double = [&](const char* key, double& target) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number()) {
      result.errors.push_back(std::string("field \"") + key + "\" must be a number");
      return;
    }
    target = doc[key].get<double>();
  };

  if (!doc.contains("seed")) result.errors.push_back("missing required field \"seed\"");
  read_int("seed", c.seed);
  read_int("d", c.d);
  read_int("m", c.m);
  read_int("r", c.r);
  read_int("levels", c.levels);
  read_int("threads", c.threads);
  read_double("tau0", c.thresholds.tau0);
  read_double("rho", c.thresholds.rho);
  if (c.levels >= 2) c.delta = default_delta(c.levels);
  read_double("delta", c.delta);

  if (doc.contains("family")) {
    const auto& v = doc["family"];
    auto tag = v.is_string() ? parse_family(v.get<std::string>()) : std::nullopt;
    if (!tag || tag->complemented) {
      result.errors.push_back("field \"family\" must be one of G, H, M, path");
    } else {
      c.family = tag->base;
    }
  }
  if (doc.contains("sigma_estimator")) {
    const auto& v = doc["sigma_estimator"];
    auto est = v.is_string() ? parse_estimator(v.get<std::string>()) : std::nullopt;
    if (!est) {
      result.errors.push_back("field \"sigma_estimator\" must be \"pooled\" or \"clustered\"");
    } else {
      c.sigma_estimator = *est;
    }
  }

  for (auto& e : validate(c)) result.errors.push_back(std::move(e));
  if (result.errors.empty()) result.config = c;
  return result;
}

}  // namespace equi
