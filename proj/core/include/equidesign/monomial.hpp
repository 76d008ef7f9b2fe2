#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace equi {

/// Largest supported ambient dimension. Monomials are stored in one machine word.
inline constexpr int kMaxDim = 62;

/// A vertex of the hypercube Q_d, written as the square-free monomial
/// X_1^{s_1} ... X_d^{s_d}. Bit k holds the exponent of X_{k+1}.
///
/// The ambient dimension is carried by the enclosing design, not by the
/// monomial itself. The natural ordering is graded-lexicographic: total
/// degree first, then the bit pattern read as an unsigned integer.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

  /// The constant monomial 1 (the origin of Q_d).
  static constexpr Monomial one() { return Monomial{}; }

  /// The variable X_i, 1-based.
  static Monomial variable(int i);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool is_one() const { return bits_ == 0; }

  /// True when X_i (1-based) divides this monomial.
  constexpr bool has(int i) const { return ((bits_ >> (i - 1)) & 1U) != 0; }

  /// Largest variable index present, 0 for the constant monomial.
  constexpr int max_variable() const { return 64 - std::countl_zero(bits_); }

  constexpr bool fits(int dim) const { return max_variable() <= dim; }

  /// Product modulo X_i^2 = 1: the symmetric difference of the exponent sets.
  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return Monomial{a.bits_ ^ b.bits_};
  }

  friend constexpr bool operator==(Monomial a, Monomial b) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Checked product: both factors must live in ambient dimension `dim`.
Monomial mono_mul(Monomial a, Monomial b, int dim);

/// d-character binary word, leftmost character is the exponent of X_1.
std::string to_binary(Monomial m, int dim);

/// Inverse of to_binary. Throws std::invalid_argument on a malformed word.
Monomial parse_binary(std::string_view word);

/// Human-readable form, e.g. "1", "X1", "X1X3".
std::string to_string(Monomial m);

/// Throws std::invalid_argument unless 1 <= dim <= kMaxDim.
void check_dim(int dim);

}  // namespace equi
