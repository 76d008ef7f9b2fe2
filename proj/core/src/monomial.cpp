#include "equidesign/monomial.hpp"

#include <stdexcept>

namespace equi {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("dimension must lie in [1, " + std::to_string(kMaxDim) +
                                "], got " + std::to_string(dim));
  }
}

Monomial Monomial::variable(int i) {
  if (i < 1 || i > kMaxDim) {
    throw std::invalid_argument("variable index out of range: " + std::to_string(i));
  }
  return Monomial{std::uint64_t{1} << (i - 1)};
}

Monomial mono_mul(Monomial a, Monomial b, int dim) {
  if (!a.fits(dim) || !b.fits(dim)) {
    throw std::invalid_argument("monomial does not belong to dimension " + std::to_string(dim));
  }
  return a * b;
}

std::string to_binary(Monomial m, int dim) {
  check_dim(dim);
  if (!m.fits(dim)) {
    throw std::invalid_argument(to_string(m) + " does not fit in dimension " + std::to_string(dim));
  }
  std::string word(static_cast<std::size_t>(dim), '0');
  for (int i = 1; i <= dim; ++i) {
    if (m.has(i)) word[static_cast<std::size_t>(i - 1)] = '1';
  }
  return word;
}

Monomial parse_binary(std::string_view word) {
  if (word.empty() || word.size() > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("binary term must have 1.." + std::to_string(kMaxDim) +
                                " characters");
  }
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] == '1') {
      bits |= std::uint64_t{1} << k;
    } else if (word[k] != '0') {
      throw std::invalid_argument("binary term contains '" + std::string(1, word[k]) + "'");
    }
  }
  return Monomial{bits};
}

std::string to_string(Monomial m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 1; i <= kMaxDim; ++i) {
    if (m.has(i)) out += "X" + std::to_string(i);
  }
  return out;
}

}  // namespace equi
