#include "equidesign/design_poly.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace equi {

namespace {

void require_same_dim(const DesignPoly& a, const DesignPoly& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

DesignPoly::DesignPoly(int dim) : dim_(dim) { check_dim(dim); }

DesignPoly::DesignPoly(int dim, std::vector<Monomial> terms) : dim_(dim), terms_(std::move(terms)) {
  check_dim(dim);
  for (Monomial t : terms_) {
    if (!t.fits(dim)) {
      throw std::invalid_argument("term " + to_string(t) + " outside dimension " +
                                  std::to_string(dim));
    }
  }
  std::sort(terms_.begin(), terms_.end());
  if (auto dup = std::adjacent_find(terms_.begin(), terms_.end()); dup != terms_.end()) {
    throw std::invalid_argument("duplicate term " + to_string(*dup));
  }
}

DesignPoly DesignPoly::full(int dim) {
  check_dim(dim);
  if (dim > kMaxEnumerableDim) {
    throw std::invalid_argument("full cube too large to enumerate for dimension " +
                                std::to_string(dim));
  }
  std::vector<Monomial> terms;
  terms.reserve(std::size_t{1} << dim);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << dim); ++v) terms.emplace_back(v);
  return DesignPoly(dim, std::move(terms));
}

bool DesignPoly::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

DesignPoly operator+(const DesignPoly& a, const DesignPoly& b) {
  require_same_dim(a, b);
  std::vector<Monomial> terms;
  terms.reserve(a.size() + b.size());
  terms.insert(terms.end(), a.begin(), a.end());
  terms.insert(terms.end(), b.begin(), b.end());
  return DesignPoly(a.dim(), std::move(terms));
}

DesignPoly merge_sharing_origin(const DesignPoly& a, const DesignPoly& b) {
  require_same_dim(a, b);
  std::vector<Monomial> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  if (shared.size() > 1 || (shared.size() == 1 && !shared.front().is_one())) {
    throw std::invalid_argument("designs overlap outside the origin");
  }
  std::vector<Monomial> terms;
  terms.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(terms));
  return DesignPoly(a.dim(), std::move(terms));
}

DesignPoly mirror(const DesignPoly& p, Monomial s) {
  if (!s.fits(p.dim())) {
    throw std::invalid_argument("mirror monomial " + to_string(s) + " outside dimension " +
                                std::to_string(p.dim()));
  }
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (Monomial t : p) terms.push_back(s * t);
  return DesignPoly(p.dim(), std::move(terms));
}

std::size_t scalar_product(const DesignPoly& p, const DesignPoly& q) {
  require_same_dim(p, q);
  std::size_t n = 0;
  auto i = p.begin();
  auto j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

EdgeProfile edge_profile(const DesignPoly& p) {
  EdgeProfile profile;
  profile.counts.reserve(static_cast<std::size_t>(p.dim()));
  for (int i = 1; i <= p.dim(); ++i) {
    const std::size_t twice = scalar_product(p, mirror(p, Monomial::variable(i)));
    profile.counts.push_back(twice / 2);
  }
  return profile;
}

Equitability is_equitable(const DesignPoly& p) {
  Equitability result{edge_profile(p), std::nullopt};
  const auto& c = result.profile.counts;
  if (std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>{}) == c.end()) {
    result.multiplicity = c.front();
  }
  return result;
}

DesignPoly complement(const DesignPoly& p) {
  if (p.dim() > kMaxEnumerableDim) {
    throw std::invalid_argument("complement requires dimension <= " +
                                std::to_string(kMaxEnumerableDim));
  }
  std::vector<Monomial> terms;
  terms.reserve((std::size_t{1} << p.dim()) - p.size());
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << p.dim()); ++v) {
    if (!p.contains(Monomial{v})) terms.emplace_back(v);
  }
  return DesignPoly(p.dim(), std::move(terms));
}

DesignPoly permute(const DesignPoly& p, std::span<const int> perm) {
  const auto d = static_cast<std::size_t>(p.dim());
  if (perm.size() != d) {
    throw std::invalid_argument("permutation has " + std::to_string(perm.size()) +
                                " entries, expected " + std::to_string(d));
  }
  std::vector<bool> seen(d, false);
  for (int target : perm) {
    if (target < 0 || static_cast<std::size_t>(target) >= d || seen[static_cast<std::size_t>(target)]) {
      throw std::invalid_argument("malformed permutation");
    }
    seen[static_cast<std::size_t>(target)] = true;
  }
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (Monomial t : p) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if ((t.bits() >> k) & 1U) bits |= std::uint64_t{1} << perm[k];
    }
    terms.emplace_back(bits);
  }
  return DesignPoly(p.dim(), std::move(terms));
}

DesignPoly shift(const DesignPoly& p, int k, int new_dim) {
  check_dim(new_dim);
  if (k < 0) throw std::invalid_argument("shift must be non-negative");
  int top = 0;
  for (Monomial t : p) top = std::max(top, t.max_variable());
  if (top + k > new_dim) {
    throw std::invalid_argument("shift by " + std::to_string(k) + " overflows dimension " +
                                std::to_string(new_dim));
  }
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (Monomial t : p) terms.emplace_back(t.bits() << k);
  return DesignPoly(new_dim, std::move(terms));
}

DesignPoly make_design(int dim, std::initializer_list<std::initializer_list<int>> terms) {
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (const auto& vars : terms) {
    Monomial m;
    for (int i : vars) m = m * Monomial::variable(i);
    out.push_back(m);
  }
  return DesignPoly(dim, std::move(out));
}

}  // namespace equi
