#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equidesign/monomial.hpp"

namespace equi {

/// Largest dimension for which the full cube Q_d is ever materialized
/// (complement, full cube).
inline constexpr int kMaxEnumerableDim = 24;

/// A 0/1 polynomial in K_d: a set of distinct monomials in ambient dimension d,
/// i.e. the subgraph of Q_d induced by those vertices. Terms are kept sorted in
/// graded-lex order so equality and iteration order are canonical.
class DesignPoly {
 public:
  /// The zero polynomial (empty design) in dimension `dim`.
  explicit DesignPoly(int dim);

  /// Throws std::invalid_argument on a duplicate term or a term outside `dim`.
  DesignPoly(int dim, std::vector<Monomial> terms);

  /// Every vertex of Q_dim.
  static DesignPoly full(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::span<const Monomial> terms() const { return terms_; }
  bool contains(Monomial m) const;

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const DesignPoly&, const DesignPoly&) = default;

 private:
  int dim_;
  std::vector<Monomial> terms_;
};

/// Per-direction edge counts m_1..m_d; counts[i-1] is the number of edges
/// of color i.
struct EdgeProfile {
  std::vector<std::uint64_t> counts;

  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
};

/// Outcome of the equitability test. `multiplicity` is set iff every
/// direction carries the same number of edges.
struct Equitability {
  EdgeProfile profile;
  std::optional<std::uint64_t> multiplicity;

  explicit operator bool() const { return multiplicity.has_value(); }
};

/// Disjoint union. Overlapping terms are an error in 0/1 semantics.
DesignPoly operator+(const DesignPoly& a, const DesignPoly& b);

/// Union where the two designs may share the constant monomial and nothing else.
DesignPoly merge_sharing_origin(const DesignPoly& a, const DesignPoly& b);

/// s * P: the reflection of P along every direction present in s.
DesignPoly mirror(const DesignPoly& p, Monomial s);

/// <P, Q> = |P ∩ Q|, by sorted-list intersection.
std::size_t scalar_product(const DesignPoly& p, const DesignPoly& q);

/// m_i = <P, X_i P> / 2 for every direction.
EdgeProfile edge_profile(const DesignPoly& p);

Equitability is_equitable(const DesignPoly& p);

/// All vertices of Q_d not in P. Requires d <= kMaxEnumerableDim.
DesignPoly complement(const DesignPoly& p);

/// Relabels coordinates: bit k of every term moves to bit perm[k] (0-based).
/// Throws std::invalid_argument unless perm is a bijection on {0..d-1}.
DesignPoly permute(const DesignPoly& p, std::span<const int> perm);

/// Renames X_i to X_{i+k} and places the result in dimension new_dim.
DesignPoly shift(const DesignPoly& p, int k, int new_dim);

/// Builds a design from variable-index lists, e.g. {{}, {1}, {1, 2}} = 1 + X1 + X1X2.
DesignPoly make_design(int dim, std::initializer_list<std::initializer_list<int>> terms);

}  // namespace equi
