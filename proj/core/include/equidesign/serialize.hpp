#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equidesign/design_poly.hpp"

namespace equi {

/// Raised when a design or config document cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk design: {"d": int, "m": int|null, "family": string, "terms": [binary words]}.
struct DesignFile {
  DesignPoly design;
  std::optional<std::uint64_t> m;
  std::string family;
};

/// Canonical JSON text (fixed key order, graded-lex terms, trailing newline).
/// Loading and re-serializing the result yields identical bytes.
std::string to_json(const DesignFile& file);

/// Throws ParseError on malformed input.
DesignFile parse_design_json(std::string_view text);

/// Graphviz text: one node per term labelled by its binary word, one edge per
/// adjacent pair carrying its color as `dir=i`.
std::string to_dot(const DesignPoly& design, std::string_view name = "design");

}  // namespace equi
