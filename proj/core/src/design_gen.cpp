#include "equidesign/design_gen.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace equi {

namespace {

using Terms = std::vector<Monomial>;

std::uint64_t half_cube(int d) { return std::uint64_t{1} << (d - 1); }

int floor_log2(std::uint64_t m) { return std::bit_width(m) - 1; }

Rational pow2(int e) {
  return e >= 0 ? Rational(std::int64_t{1} << e) : Rational(1, std::int64_t{1} << -e);
}

Monomial var(int i) { return Monomial::variable(i); }

// (1 + X1 Xd) A for even m, A + X1 Xd B for odd m.
Terms compose(int d, Terms lower, const Terms& upper) {
  const Monomial hinge = var(1) * var(d);
  lower.reserve(lower.size() + upper.size());
  for (Monomial t : upper) lower.push_back(hinge * t);
  return lower;
}

Terms g_terms(int d, std::uint64_t m) {
  if (m == 1) {
    Terms out{Monomial::one()};
    for (int i = 1; i <= d; ++i) out.push_back(var(i));
    return out;
  }
  if (m % 2 == 0) {
    Terms half = g_terms(d - 1, m / 2);
    return compose(d, half, half);
  }
  return compose(d, g_terms(d - 1, (m - 1) / 2), g_terms(d - 1, (m + 1) / 2));
}

// H^2_2 is the full square; the chain adds three terms per even step and
// two per odd step.
Terms h2_terms(int d) {
  if (d == 2) return {Monomial::one(), var(1), var(2), var(1) * var(2)};
  if (d % 2 == 0) {
    Terms out = h2_terms(d - 2);
    out.insert(out.end(), {var(d - 1), var(d), var(d - 1) * var(d)});
    return out;
  }
  Terms out = h2_terms(d - 1);
  out.insert(out.end(), {var(1) * var(d), var(d - 1) * var(d)});
  return out;
}

Terms h3_terms(int d) {
  Terms out{Monomial::one(), var(1) * var(d)};
  for (int k = 1; k <= d; ++k) out.push_back(var(k));
  for (int j = 1; j < d; ++j) out.push_back(var(j) * var(j + 1));
  return out;
}

Terms h_terms(int d, std::uint64_t m) {
  if (m == 2) return h2_terms(d);
  if (m == 3) return h3_terms(d);
  if (m % 2 == 0) {
    Terms half = h_terms(d - 1, m / 2);
    return compose(d, half, half);
  }
  return compose(d, h_terms(d - 1, (m - 1) / 2), h_terms(d - 1, (m + 1) / 2));
}

void require(Family family, int d, std::uint64_t m) {
  if (auto why = family_constraint_violation(family, d, m)) throw std::invalid_argument(*why);
}

void require_small(std::uint64_t size) {
  if (size > kMaxTerms) {
    throw std::length_error("design of " + std::to_string(size) + " terms exceeds the limit of " +
                            std::to_string(kMaxTerms));
  }
}

Rational alpha_H(std::uint64_t m, const LeafDecomposition& leaves) {
  const auto mm = static_cast<std::int64_t>(m);
  const Rational p = pow2(leaves.kappa - 1);
  return leaves.i_offset >= 0 ? Rational(mm) - p : (Rational(mm) + p) / 2;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::M: return "M";
    case Family::Path: return "path";
  }
  return "?";
}

std::string to_string(FamilyTag tag) {
  return tag.complemented ? "complement(" + to_string(tag.base) + ")" : to_string(tag.base);
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  bool complemented = false;
  constexpr std::string_view prefix = "complement(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    complemented = true;
    name = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  }
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "g") return FamilyTag{Family::G, complemented};
  if (lower == "h") return FamilyTag{Family::H, complemented};
  if (lower == "m") return FamilyTag{Family::M, complemented};
  if (lower == "path") return FamilyTag{Family::Path, complemented};
  return std::nullopt;
}

std::optional<std::string> family_constraint_violation(Family family, int d, std::uint64_t m) {
  if (d < 1 || d > kMaxDim) {
    return "d must lie in [1, " + std::to_string(kMaxDim) + "]";
  }
  const std::string cap = std::to_string(half_cube(d));
  switch (family) {
    case Family::Path:
      if (m != 1) return std::string("path requires m = 1");
      return std::nullopt;
    case Family::G:
      if (m < 1 || m > half_cube(d)) return "G requires 1 <= m <= 2^(d-1) = " + cap;
      return std::nullopt;
    case Family::H:
      if (d < 2) return std::string("H requires d >= 2");
      if (m < 2 || m > half_cube(d)) return "H requires 2 <= m <= 2^(d-1) = " + cap;
      return std::nullopt;
    case Family::M:
      if (m < 2) return std::string("M requires m >= 2");
      if (d < 2 * q_min(m)) {
        return "M requires d >= 2*q_min(m) = " + std::to_string(2 * q_min(m));
      }
      return std::nullopt;
  }
  return std::string("unknown family");
}

DesignPoly gen_path(int d) {
  require(Family::Path, d, 1);
  Terms out{Monomial::one()};
  Monomial step;
  for (int i = 1; i <= d; ++i) {
    step = step * var(i);
    out.push_back(step);
  }
  return DesignPoly(d, std::move(out));
}

DesignPoly gen_G(int d, std::uint64_t m) {
  require(Family::G, d, m);
  require_small(predicted_size_G(d, m));
  return DesignPoly(d, g_terms(d, m));
}

DesignPoly gen_H(int d, std::uint64_t m) {
  require(Family::H, d, m);
  require_small(predicted_size_H(d, m).value);
  return DesignPoly(d, h_terms(d, m));
}

DesignPoly gen_M(int d, std::uint64_t m) {
  require(Family::M, d, m);
  require_small(predicted_size_M(d, m));
  const MLayout layout = m_layout(d, m);
  const DesignPoly block = gen_H(layout.q, m);
  DesignPoly out(d, {Monomial::one()});
  for (int j = 0; j < layout.blocks; ++j) {
    out = merge_sharing_origin(out, shift(block, j * layout.q, d));
  }
  return merge_sharing_origin(out, shift(gen_H(layout.t, m), layout.blocks * layout.q, d));
}

DesignPoly generate(Family family, int d, std::uint64_t m) {
  switch (family) {
    case Family::G: return gen_G(d, m);
    case Family::H: return gen_H(d, m);
    case Family::M: return gen_M(d, m);
    case Family::Path:
      require(Family::Path, d, m);
      return gen_path(d);
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t predicted_size_G(int d, std::uint64_t m) {
  require(Family::G, d, m);
  const int kappa = floor_log2(m);
  const auto span = static_cast<std::uint64_t>(d - kappa);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t top = std::uint64_t{1} << (kappa + 1);
  if (m > kMax / span || m * span > kMax - top) {
    throw std::overflow_error("|G| does not fit in 64 bits");
  }
  // top > m, so the subtraction cannot wrap.
  return m * span + (top - m);
}

LeafDecomposition leaf_counts(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("leaf decomposition requires m >= 2");
  LeafDecomposition out;
  out.kappa = floor_log2(m);
  const std::uint64_t top = std::uint64_t{1} << out.kappa;
  const std::uint64_t half = top >> 1;
  out.i_offset = static_cast<std::int64_t>(m - top) - static_cast<std::int64_t>(half);
  const std::uint64_t abs_i = out.i_offset < 0 ? static_cast<std::uint64_t>(-out.i_offset)
                                               : static_cast<std::uint64_t>(out.i_offset);
  out.p2 = out.i_offset >= 0 ? 2 * abs_i : abs_i;
  out.p3 = half - abs_i;
  return out;
}

SizePrediction predicted_size_H(int d, std::uint64_t m) {
  require(Family::H, d, m);
  if (m >= (std::uint64_t{1} << 48)) throw std::out_of_range("m too large for the H closed form");
  const LeafDecomposition leaves = leaf_counts(m);
  const int kappa = leaves.kappa;
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t sign = (d - kappa) % 2 == 0 ? 1 : -1;

  SizePrediction out;
  out.alpha = alpha_H(m, leaves);
  if (leaves.i_offset >= 0) {
    out.c_term = -Rational(mm) * (Rational(sign + 1, 2) + kappa) +
                 pow2(kappa - 2) * (3 * sign + 2 * kappa + 9);
  } else {
    out.c_term = -Rational(mm, 2) * (Rational(sign - 1, 2) + kappa) -
                 pow2(kappa - 3) * (-3 * sign + 2 * kappa - 9);
  }
  const Rational size = out.c_term + out.alpha * d;
  if (size.denominator() != 1 || size.numerator() < 0) {
    throw std::domain_error("H size formula is not an integer at d=" + std::to_string(d) +
                            ", m=" + std::to_string(m));
  }
  out.value = static_cast<std::uint64_t>(size.numerator());
  return out;
}

int q_min(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("q_min requires m >= 1");
  return std::bit_width(m - 1) + 1;
}

MLayout m_layout(int d, std::uint64_t m) {
  require(Family::M, d, m);
  MLayout out;
  out.q = q_min(m);
  out.blocks = d / out.q - 1;
  out.t = d - out.blocks * out.q;
  return out;
}

std::uint64_t predicted_size_M(int d, std::uint64_t m) {
  const MLayout layout = m_layout(d, m);
  const std::uint64_t block = predicted_size_H(layout.q, m).value;
  const std::uint64_t tail = predicted_size_H(layout.t, m).value;
  return 1 + static_cast<std::uint64_t>(layout.blocks) * (block - 1) + (tail - 1);
}

std::uint64_t predicted_size(Family family, int d, std::uint64_t m) {
  switch (family) {
    case Family::G: return predicted_size_G(d, m);
    case Family::H: return predicted_size_H(d, m).value;
    case Family::M: return predicted_size_M(d, m);
    case Family::Path:
      require(Family::Path, d, m);
      return static_cast<std::uint64_t>(d) + 1;
  }
  throw std::invalid_argument("unknown family");
}

Rational economy_from_size(int d, std::uint64_t m, std::uint64_t size) {
  if (size == 0) throw std::invalid_argument("economy of an empty design is undefined");
  return Rational(static_cast<std::int64_t>(m) * d, static_cast<std::int64_t>(size));
}

Rational economy(const DesignPoly& p, std::uint64_t m) {
  const Equitability check = is_equitable(p);
  if (check.multiplicity != m) {
    throw std::invalid_argument("design is not (" + std::to_string(p.dim()) + "," +
                                std::to_string(m) + ")-edge equitable");
  }
  return economy_from_size(p.dim(), m, p.size());
}

EconomyLimits economy_limits(std::uint64_t m) {
  EconomyLimits out;
  out.limit_G = Rational(1);
  if (m >= 2) {
    const auto mm = static_cast<std::int64_t>(m);
    out.limit_H = Rational(mm) / alpha_H(m, leaf_counts(m));
    out.bound_M_lower = Rational(mm * mm, 2 * mm - 1);
    out.bound_M_upper = Rational(mm * mm, mm - 1);
  }
  return out;
}

}  // namespace equi
