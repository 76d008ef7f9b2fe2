#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "equidesign/design_gen.hpp"
#include "equidesign/effects.hpp"
#include "equidesign/report.hpp"
#include "equidesign/screening.hpp"
#include "equidesign/serialize.hpp"

namespace equi::cli {

namespace {

/// Thrown inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kIoError, "cannot read " + path.string()};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::optional<std::filesystem::path>& path, std::string_view text,
          std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  try {
    write_atomic(*path, text);
  } catch (const std::exception& e) {
    throw Exit{kIoError, e.what()};
  }
}

DesignFile load_design(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_design_json(text);
  } catch (const ParseError& e) {
    throw Exit{kIoError, path.string() + ": " + e.what()};
  }
}

std::string format_profile(const EdgeProfile& profile) {
  std::string s = "(";
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile.counts[i]);
  }
  return s + ")";
}

std::string format_economy(const Rational& r) {
  std::ostringstream s;
  s << r.numerator() << "/" << r.denominator() << " (" << std::setprecision(6)
    << boost::rational_cast<double>(r) << ")";
  return s.str();
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  int d = 0;
  std::uint64_t m = 1;
  bool complement = false;
  std::optional<std::filesystem::path> out;
  std::string format = "json";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  auto tag = parse_family(a.family);
  if (!tag || tag->complemented) throw Exit{kUsage, "unknown family \"" + a.family + "\""};
  if (auto why = family_constraint_violation(tag->base, a.d, a.m)) throw Exit{kUsage, *why};
  if (a.complement && a.d > kMaxEnumerableDim) {
    throw Exit{kUsage, "--complement requires d <= " + std::to_string(kMaxEnumerableDim)};
  }

  DesignPoly design = [&] {
    try {
      return generate(tag->base, a.d, a.m);
    } catch (const std::length_error& e) {
      throw Exit{kUsage, e.what()};
    }
  }();
  std::uint64_t predicted = predicted_size(tag->base, a.d, a.m);
  std::optional<std::uint64_t> m = a.m;
  if (a.complement) {
    const std::uint64_t full = std::uint64_t{1} << a.d;
    const std::uint64_t size = design.size();
    m = (full >> 1) + a.m - size;
    predicted = full - predicted;
    design = complement(design);
    tag->complemented = true;
  }

  std::ostream& summary = a.out ? out : err;
  summary << "family: " << to_string(*tag) << "\n"
          << "d: " << a.d << "\n"
          << "m: " << *m << "\n"
          << "size: " << design.size() << "\n"
          << "predicted_size: " << predicted << "\n"
          << "economy: "
          << (*m > 0 && !design.empty() ? format_economy(economy_from_size(a.d, *m, design.size()))
                                         : std::string("n/a"))
          << "\n";

  const std::string text =
      a.format == "dot" ? to_dot(design) : to_json(DesignFile{design, m, to_string(*tag)});
  emit(a.out, text, out);
  return kOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::filesystem::path& in, std::ostream& out) {
  const DesignFile file = load_design(in);
  const Equitability check = is_equitable(file.design);
  out << "size: " << file.design.size() << "\n"
      << "profile: " << format_profile(check.profile) << "\n";
  if (check.multiplicity) {
    out << "verdict: equitable, m=" << *check.multiplicity << "\n";
    if (file.m && *file.m != *check.multiplicity) {
      out << "note: file declares m=" << *file.m << "\n";
    }
    return kOk;
  }
  out << "verdict: not equitable\n";
  return kNegative;
}

// --- economy --------------------------------------------------------------

struct EconomyArgs {
  int d = 0;
  std::optional<std::uint64_t> max_m;
  std::optional<std::filesystem::path> out;
};

int cmd_economy(const EconomyArgs& a, std::ostream& out) {
  if (auto why = family_constraint_violation(Family::G, a.d, 1)) throw Exit{kUsage, *why};
  const std::uint64_t cap = std::uint64_t{1} << (a.d - 1);
  const std::uint64_t top = std::min(cap, a.max_m.value_or(std::min<std::uint64_t>(cap, 1024)));

  std::ostringstream csv;
  csv << "family,d,m,size,predicted_size,economy\n" << std::setprecision(10);
  auto row = [&](Family family, std::uint64_t m) {
    if (family_constraint_violation(family, a.d, m)) return;
    DesignPoly design = [&] {
      try {
        return generate(family, a.d, m);
      } catch (const std::length_error& e) {
        throw Exit{kUsage, e.what()};
      }
    }();
    csv << to_string(family) << ',' << a.d << ',' << m << ',' << design.size() << ','
        << predicted_size(family, a.d, m) << ','
        << boost::rational_cast<double>(economy_from_size(a.d, m, design.size())) << '\n';
  };
  row(Family::Path, 1);
  for (std::uint64_t m = 1; m <= top; ++m) {
    row(Family::G, m);
    row(Family::H, m);
    row(Family::M, m);
  }
  emit(a.out, csv.str(), out);
  return kOk;
}

// --- pairs ----------------------------------------------------------------

struct PairsArgs {
  std::filesystem::path in;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> meta;
  int levels = 4;
  std::optional<double> delta;
};

int cmd_pairs(const PairsArgs& a, std::ostream& out, std::ostream& err) {
  const DesignFile file = load_design(a.in);
  if (file.design.empty()) throw Exit{kUsage, "design has no vertices"};
  DesignPoly design = file.design;
  if (a.seed) {
    const double delta = a.delta.value_or(default_delta(a.levels));
    Rng rng = Rng::substream(*a.seed, 1);
    RandomizedDesign rd = randomize(design, rng);
    Point base;
    try {
      base = sample_base(design.dim(), delta, a.levels, rng);
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, e.what()};
    }
    const std::string meta = replication_json(*a.seed, rd.transform, design.dim(), base, delta);
    if (a.meta) {
      emit(a.meta, meta, out);
    } else {
      err << meta;
    }
    design = std::move(rd.design);
  }
  emit(a.out, pairs_csv(order_vertices(std::move(design))), out);
  return kOk;
}

// --- screen ---------------------------------------------------------------

struct ScreenArgs {
  std::filesystem::path config;
  std::filesystem::path out;
  std::optional<std::filesystem::path> meta;
  std::optional<std::filesystem::path> plot;
  std::optional<std::uint64_t> seed;
};

int cmd_screen(const ScreenArgs& a, std::ostream& out) {
  std::string text = read_file(a.config);
  if (a.seed) {
    // The command-line seed overrides (or supplies) the config's.
    try {
      auto doc = nlohmann::ordered_json::parse(text);
      if (doc.is_object()) {
        doc["seed"] = *a.seed;
        text = doc.dump();
      }
    } catch (const nlohmann::json::parse_error&) {
      // reported by parse_screen_config below
    }
  }
  const ConfigParse parsed = parse_screen_config(text);
  if (!parsed.config) {
    std::string msg = a.config.string() + ":";
    for (const auto& e : parsed.errors) msg += "\n  " + e;
    throw Exit{parsed.syntax_error ? kIoError : kUsage, msg};
  }
  const ScreenConfig& config = *parsed.config;
  if (config.d != 20) throw Exit{kUsage, "the built-in test function needs d = 20"};

  const ScreenReport report = run_screen(config);

  std::filesystem::path meta = a.meta.value_or(std::filesystem::path(a.out).replace_extension(".meta.json"));
  emit(a.out, report_csv(report), out);
  emit(meta, run_metadata_json(config, report), out);
  if (a.plot) emit(a.plot, plot_csv(report), out);

  out << "design_size: " << report.design_size << "\n"
      << "n_evals: " << report.n_evals << "\n";
  std::map<FactorClass, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < report.classes.size(); ++i) members[report.classes[i]].push_back(i + 1);
  for (FactorClass c : {FactorClass::C0, FactorClass::C1, FactorClass::C2}) {
    out << to_string(c) << ":";
    for (std::size_t i : members[c]) out << " " << i;
    out << "\n";
  }
  return kOk;
}

// --- oracle ---------------------------------------------------------------

int cmd_oracle(int d, std::uint64_t m, const std::optional<std::filesystem::path>& path,
               std::ostream& out) {
  if (d < 1 || d > kMaxOracleDim) {
    throw Exit{kUsage, "oracle requires 1 <= d <= " + std::to_string(kMaxOracleDim)};
  }
  if (m > (std::uint64_t{1} << (d - 1))) throw Exit{kUsage, "oracle requires m <= 2^(d-1)"};
  const OracleResult result = min_size_oracle(d, m);
  out << "min_size: " << result.min_size << "\n";
  if (!family_constraint_violation(Family::H, d, m)) {
    out << "H_size: " << gen_H(d, m).size() << "\n";
  }
  out << "witness:";
  for (Monomial t : result.witness) out << " " << to_binary(t, d);
  out << "\n";
  if (path) emit(path, to_json(DesignFile{result.witness, m, "oracle"}), out);
  return kOk;
}

}  // namespace

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw std::runtime_error("cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge equitable hypercube designs for elementary-effects screening", "equidesign"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build a G, H, M or path design");
  generate->add_option("--family", gen.family, "G, H, M or path")->required();
  generate->add_option("--d", gen.d, "Ambient dimension")->required();
  generate->add_option("--m", gen.m, "Edges per direction");
  generate->add_flag("--complement", gen.complement, "Emit the complement in Q_d");
  generate->add_option("--out", gen.out, "Output file (default: standard output)");
  generate->add_option("--format", gen.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  std::filesystem::path verify_in;
  auto* verify = app.add_subcommand("verify", "Check that a design file is edge equitable");
  verify->add_option("--in", verify_in, "Design JSON")->required();

  EconomyArgs eco;
  auto* economy = app.add_subcommand("economy", "Tabulate sizes and economies for every family");
  economy->add_option("--d", eco.d, "Ambient dimension")->required();
  economy->add_option("--max-m", eco.max_m, "Largest multiplicity (default min(2^(d-1), 1024))");
  economy->add_option("--out", eco.out, "CSV file (default: standard output)");

  PairsArgs pairs_args;
  auto* pairs = app.add_subcommand("pairs", "List the vertex pairs behind every elementary effect");
  pairs->add_option("--in", pairs_args.in, "Design JSON")->required();
  pairs->add_option("--out", pairs_args.out, "CSV file (default: standard output)");
  pairs->add_option("--seed", pairs_args.seed, "Randomize the design first with this seed");
  pairs->add_option("--meta", pairs_args.meta, "Replication metadata JSON (with --seed)");
  pairs->add_option("--levels", pairs_args.levels, "Grid levels for the base point")
      ->check(CLI::Range(2, 1000));
  pairs->add_option("--delta", pairs_args.delta, "Step size (default levels/(2(levels-1)))");

  ScreenArgs scr;
  auto* screen = app.add_subcommand("screen", "Run the 20-factor screening experiment");
  screen->add_option("--config", scr.config, "Screening config JSON")->required();
  screen->add_option("--out", scr.out, "Report CSV")->required();
  screen->add_option("--meta", scr.meta, "Run metadata JSON (default: <out>.meta.json)");
  screen->add_option("--plot", scr.plot, "mu*/sigma scatter CSV");
  screen->add_option("--seed", scr.seed, "Override the config seed");

  int oracle_d = 0;
  std::uint64_t oracle_m = 0;
  std::optional<std::filesystem::path> oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-size search (d <= 4)");
  oracle->add_option("--d", oracle_d, "Ambient dimension")->required();
  oracle->add_option("--m", oracle_m, "Edges per direction")->required();
  oracle->add_option("--out", oracle_out, "Witness design JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*verify) return cmd_verify(verify_in, out);
    if (*economy) return cmd_economy(eco, out);
    if (*pairs) return cmd_pairs(pairs_args, out, err);
    if (*screen) return cmd_screen(scr, out);
    if (*oracle) return cmd_oracle(oracle_d, oracle_m, oracle_out, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace equi::cli
