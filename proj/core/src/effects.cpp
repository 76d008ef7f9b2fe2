#include "equidesign/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace equi {

namespace {

constexpr double kGridTolerance = 1e-12;

}  // namespace

std::optional<std::size_t> OrderedDesign::index_of(Monomial m) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
  if (it == vertices.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

OrderedDesign order_vertices(DesignPoly design) {
  if (design.empty()) throw std::invalid_argument("cannot order an empty design");
  std::vector<Monomial> vertices(design.begin(), design.end());
  return OrderedDesign{std::move(design), std::move(vertices)};
}

EffectIncidence build_incidence(const OrderedDesign& od, int direction) {
  if (direction < 1 || direction > od.design.dim()) {
    throw std::invalid_argument("direction " + std::to_string(direction) + " outside 1.." +
                                std::to_string(od.design.dim()));
  }
  EffectIncidence inc{direction, {}};
  const Monomial x = Monomial::variable(direction);
  for (std::size_t p = 0; p < od.size(); ++p) {
    const auto q = od.index_of(od.vertices[p] * x);
    if (!q || *q < p) continue;
    const int sign = od.vertices[p].has(direction) ? -1 : 1;
    inc.pairs.push_back({p, *q, sign});
  }
  return inc;
}

std::vector<std::vector<int>> dense_j(const EffectIncidence& inc, std::size_t n) {
  std::vector<std::vector<int>> j(n, std::vector<int>(n, 0));
  for (const auto& e : inc.pairs) {
    j[e.row][e.col] += e.sign;
    j[e.row][e.row] -= e.sign;
  }
  return j;
}

std::vector<double> elementary_effects(const EffectIncidence& inc, std::span<const double> f_values,
                                       double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  std::vector<double> out;
  out.reserve(inc.pairs.size());
  for (const auto& e : inc.pairs) {
    if (e.col >= f_values.size()) {
      throw std::invalid_argument("function values shorter than the ordered design");
    }
    out.push_back(e.sign * (f_values[e.col] - f_values[e.row]) / delta);
  }
  return out;
}

Randomization identity_randomization(int d) {
  Randomization t{Monomial::one(), std::vector<int>(static_cast<std::size_t>(d))};
  std::iota(t.permutation.begin(), t.permutation.end(), 0);
  return t;
}

DesignPoly apply(const DesignPoly& p, const Randomization& transform) {
  return permute(mirror(p, transform.reflection), transform.permutation);
}

RandomizedDesign randomize(const DesignPoly& p, Rng& rng) {
  const int d = p.dim();
  const std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  Randomization t{Monomial{rng.next() & mask}, rng.permutation(d)};
  DesignPoly out = apply(p, t);
#ifndef NDEBUG
  if (is_equitable(out).multiplicity != is_equitable(p).multiplicity) {
    throw std::logic_error("randomization broke equitability");
  }
#endif
  return RandomizedDesign{std::move(out), std::move(t)};
}

Embedding embed(const OrderedDesign& od, std::span<const double> base, double delta) {
  const auto d = static_cast<std::size_t>(od.design.dim());
  if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("delta must lie in (0, 1]");
  if (base.size() != d) throw std::invalid_argument("base point has the wrong dimension");
  for (double b : base) {
    if (!(b >= -kGridTolerance) || b > 1.0 - delta + kGridTolerance) {
      throw std::invalid_argument("base coordinate " + std::to_string(b) +
                                  " outside [0, 1 - delta]");
    }
  }
  Embedding out{Point(base.begin(), base.end()), delta, {}};
  out.points.reserve(od.size());
  for (Monomial v : od.vertices) {
    Point x = out.base;
    for (std::size_t k = 0; k < d; ++k) {
      if ((v.bits() >> k) & 1U) x[k] += delta;
    }
    out.points.push_back(std::move(x));
  }
  return out;
}

Point sample_base(int d, double delta, int levels, Rng& rng) {
  if (levels < 2) throw std::invalid_argument("grid needs at least 2 levels");
  if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("delta must lie in (0, 1]");
  std::vector<double> grid;
  for (int k = 0; k < levels; ++k) {
    const double g = static_cast<double>(k) / (levels - 1);
    if (g <= 1.0 - delta + kGridTolerance) grid.push_back(std::min(g, 1.0 - delta));
  }
  if (grid.empty()) throw std::invalid_argument("no grid level leaves room for delta");
  Point base(static_cast<std::size_t>(d));
  for (double& b : base) b = grid[rng.uniform_index(grid.size())];
  return base;
}

double default_delta(int levels) {
  if (levels < 2) throw std::invalid_argument("grid needs at least 2 levels");
  return static_cast<double>(levels) / (2.0 * (levels - 1));
}

}  // namespace equi
