#include "equidesign/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace equi {

std::string to_json(const DesignFile& file) {
  nlohmann::ordered_json doc;
  doc["d"] = file.design.dim();
  if (file.m) {
    doc["m"] = *file.m;
  } else {
    doc["m"] = nullptr;
  }
  doc["family"] = file.family;
  auto terms = nlohmann::ordered_json::array();
  for (Monomial t : file.design) terms.push_back(to_binary(t, file.design.dim()));
  doc["terms"] = std::move(terms);
  return doc.dump(2) + "\n";
}

DesignFile parse_design_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("design document must be a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer()) {
    throw ParseError("field \"d\" must be an integer");
  }
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("field \"terms\" must be an array of binary strings");
  }
  const auto dim = doc["d"].get<std::int64_t>();
  if (dim < 1 || dim > kMaxDim) throw ParseError("field \"d\" out of range");

  std::optional<std::uint64_t> m;
  if (doc.contains("m") && !doc["m"].is_null()) {
    if (!doc["m"].is_number_unsigned()) throw ParseError("field \"m\" must be a non-negative integer or null");
    m = doc["m"].get<std::uint64_t>();
  }
  std::string family;
  if (doc.contains("family")) {
    if (!doc["family"].is_string()) throw ParseError("field \"family\" must be a string");
    family = doc["family"].get<std::string>();
  }

  std::vector<Monomial> terms;
  terms.reserve(doc["terms"].size());
  for (const auto& t : doc["terms"]) {
    if (!t.is_string()) throw ParseError("every term must be a binary string");
    const auto& word = t.get_ref<const std::string&>();
    if (word.size() != static_cast<std::size_t>(dim)) {
      throw ParseError("term \"" + word + "\" does not have d characters");
    }
    try {
      terms.push_back(parse_binary(word));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return DesignFile{DesignPoly(static_cast<int>(dim), std::move(terms)), m, std::move(family)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_dot(const DesignPoly& design, std::string_view name) {
  std::ostringstream out;
  const auto terms = design.terms();
  out << "graph " << name << " {\n";
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out << "  v" << k << " [label=\"" << to_binary(terms[k], design.dim()) << "\"];\n";
  }
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (int i = 1; i <= design.dim(); ++i) {
      const Monomial other = terms[a] * Monomial::variable(i);
      if (terms[a].has(i) || !design.contains(other)) continue;
      const auto b = static_cast<std::size_t>(
          std::lower_bound(terms.begin(), terms.end(), other) - terms.begin());
      out << "  v" << a << " -- v" << b << " [dir=" << i << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace equi
