#include <array>
#include <stdexcept>
#include <string>

#include "equidesign/design_gen.hpp"

namespace equi {

namespace {

// Depth-first choice of exactly `target` vertices of Q_d in increasing index
// order. Adding a vertex never removes an edge, so any direction whose count
// exceeds m prunes the whole subtree.
class SubsetSearch {
 public:
  SubsetSearch(int d, std::uint64_t m) : d_(d), n_(1U << d), m_(m) {}

  bool find(unsigned target) {
    target_ = target;
    chosen_.clear();
    counts_.fill(0);
    mask_ = 0;
    return descend(0);
  }

  const std::vector<unsigned>& chosen() const { return chosen_; }

 private:
  bool descend(unsigned next) {
    if (chosen_.size() == target_) {
      for (int i = 0; i < d_; ++i) {
        if (counts_[static_cast<std::size_t>(i)] != m_) return false;
      }
      return true;
    }
    const auto missing = target_ - static_cast<unsigned>(chosen_.size());
    for (unsigned v = next; v + missing <= n_; ++v) {
      bool ok = true;
      for (int i = 0; i < d_; ++i) {
        if ((mask_ >> (v ^ (1U << i))) & 1U) {
          if (++counts_[static_cast<std::size_t>(i)] > m_) ok = false;
        }
      }
      if (ok) {
        mask_ |= 1U << v;
        chosen_.push_back(v);
        if (descend(v + 1)) return true;
        chosen_.pop_back();
        mask_ &= ~(1U << v);
      }
      for (int i = 0; i < d_; ++i) {
        if ((mask_ >> (v ^ (1U << i))) & 1U) --counts_[static_cast<std::size_t>(i)];
      }
    }
    return false;
  }

  int d_;
  unsigned n_;
  std::uint64_t m_;
  unsigned target_ = 0;
  std::uint32_t mask_ = 0;
  std::array<std::uint64_t, kMaxOracleDim> counts_{};
  std::vector<unsigned> chosen_;
};

}  // namespace

OracleResult min_size_oracle(int d, std::uint64_t m) {
  if (d < 1 || d > kMaxOracleDim) {
    throw std::invalid_argument("exhaustive search supports 1 <= d <= " +
                                std::to_string(kMaxOracleDim));
  }
  if (m > (std::uint64_t{1} << (d - 1))) {
    throw std::invalid_argument("m exceeds 2^(d-1)");
  }
  SubsetSearch search(d, m);
  for (unsigned size = 0; size <= (1U << d); ++size) {
    if (search.find(size)) {
      std::vector<Monomial> terms;
      for (unsigned v : search.chosen()) terms.emplace_back(v);
      return OracleResult{size, DesignPoly(d, std::move(terms))};
    }
  }
  // Unreachable: Q_d itself has 2^(d-1) edges per direction, and G covers every m.
  throw std::logic_error("no equitable subset found");
}

}  // namespace equi
