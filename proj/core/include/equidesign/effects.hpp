#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "equidesign/design_poly.hpp"
#include "equidesign/random.hpp"

namespace equi {

/// A design with its vertices numbered in graded-lex order (0-based here;
/// exported files number them from 1).
struct OrderedDesign {
  DesignPoly design;
  std::vector<Monomial> vertices;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> index_of(Monomial m) const;
};

/// Throws std::invalid_argument for an empty design.
OrderedDesign order_vertices(DesignPoly design);

/// One non-zero entry of E_i: vertices `row` < `col` joined by a direction-i edge.
struct EffectPair {
  std::size_t row = 0;
  std::size_t col = 0;
  int sign = 1;

  friend bool operator==(const EffectPair&, const EffectPair&) = default;
};

/// Sparse E_i for one direction. J_i = -diag(E_i 1) + E_i, so row p of J_i
/// holds -sign at (p,p) and +sign at (p,q).
struct EffectIncidence {
  int direction = 1;  ///< 1-based
  std::vector<EffectPair> pairs;
};

EffectIncidence build_incidence(const OrderedDesign& od, int direction);

/// Dense J_i, n x n, for inspection and small examples.
std::vector<std::vector<int>> dense_j(const EffectIncidence& inc, std::size_t n);

/// sign * (f[col] - f[row]) / delta per pair, i.e. the non-zero rows of J_i f / delta.
std::vector<double> elementary_effects(const EffectIncidence& inc, std::span<const double> f_values,
                                       double delta);

/// Reflection by s followed by relabeling of coordinates: bit k -> bit permutation[k].
struct Randomization {
  Monomial reflection;
  std::vector<int> permutation;
};

Randomization identity_randomization(int d);

DesignPoly apply(const DesignPoly& p, const Randomization& transform);

struct RandomizedDesign {
  DesignPoly design;
  Randomization transform;
};

/// permute(mirror(P, s), pi) with s uniform on Q_d and pi uniform.
RandomizedDesign randomize(const DesignPoly& p, Rng& rng);

using Point = std::vector<double>;

/// Vertex k of the ordered design placed at base + delta * bits(k).
struct Embedding {
  Point base;
  double delta = 1.0;
  std::vector<Point> points;
};

/// Requires 0 < delta <= 1 and every base coordinate in [0, 1 - delta].
Embedding embed(const OrderedDesign& od, std::span<const double> base, double delta);

/// Each coordinate drawn uniformly from the grid {0, 1/(levels-1), ...} restricted
/// to values not exceeding 1 - delta. Throws if the restriction leaves nothing.
Point sample_base(int d, double delta, int levels, Rng& rng);

/// Default step for a `levels`-point grid: levels / (2 (levels - 1)).
double default_delta(int levels);

}  // namespace equi
