#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "equidesign/design_poly.hpp"

namespace equi {

using Rational = boost::rational<std::int64_t>;

/// Largest design the generators will materialize.
inline constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 26;

enum class Family { G, H, M, Path };

/// A construction family, optionally complemented in Q_d.
struct FamilyTag {
  Family base = Family::G;
  bool complemented = false;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// "G", "H", "M", "path", or "complement(X)".
std::string to_string(FamilyTag tag);
std::string to_string(Family family);

/// Accepts the names produced by to_string (case-insensitive for G/H/M).
std::optional<FamilyTag> parse_family(std::string_view name);

/// Why a (family, d, m) triple is not constructible, or nullopt if it is.
std::optional<std::string> family_constraint_violation(Family family, int d, std::uint64_t m);

/// OAT staircase 1 + X1 + X1X2 + ... + X1...Xd; (d,1)-edge equitable.
DesignPoly gen_path(int d);

/// Basic recursion: G^d_1 = 1 + sum X_i, then
/// G^d_m = (1 + X1Xd) G^{d-1}_{m/2} for even m and
/// G^d_m = G^{d-1}_{(m-1)/2} + X1Xd G^{d-1}_{(m+1)/2} for odd m.
DesignPoly gen_G(int d, std::uint64_t m);

/// Same recursion started from the m = 2 and m = 3 initializations.
DesignPoly gen_H(int d, std::uint64_t m);

/// Shared-origin union of shifted H^{q_min}_m blocks plus one H^t_m block.
DesignPoly gen_M(int d, std::uint64_t m);

DesignPoly generate(Family family, int d, std::uint64_t m);

/// m(d - kappa) + 2^{kappa+1} - m with kappa = floor(log2 m).
std::uint64_t predicted_size_G(int d, std::uint64_t m);

struct LeafDecomposition {
  std::uint64_t p2 = 0;  ///< leaves H_2
  std::uint64_t p3 = 0;  ///< leaves H_3
  int kappa = 0;         ///< floor(log2 m)
  std::int64_t i_offset = 0;  ///< m = 2^kappa + 2^(kappa-1) + i_offset
};

/// Number of m = 2 and m = 3 leaves in the recursion tree of H^d_m. Requires m >= 2.
LeafDecomposition leaf_counts(std::uint64_t m);

struct SizePrediction {
  std::uint64_t value = 0;
  Rational alpha;   ///< slope in d
  Rational c_term;  ///< d-independent part (depends on the parity of d - kappa)
};

/// |H^d_m| = c(m) + alpha(m) d, evaluated exactly. Throws std::domain_error if
/// the closed form is not an integer (outside its validity range).
SizePrediction predicted_size_H(int d, std::uint64_t m);

/// ceil(log2 m) + 1, the smallest q with m <= 2^{q-1}.
int q_min(std::uint64_t m);

/// Block layout of M^d_m: `blocks` copies of H^{q}_m followed by one H^{t}_m,
/// with d = blocks * q + t and q <= t < 2q.
struct MLayout {
  int q = 0;
  int blocks = 0;
  int t = 0;
};

MLayout m_layout(int d, std::uint64_t m);

/// 1 + blocks (|H^q_m| - 1) + (|H^t_m| - 1), from the H closed form.
std::uint64_t predicted_size_M(int d, std::uint64_t m);

/// Closed-form size for any family (path, G, H, M).
std::uint64_t predicted_size(Family family, int d, std::uint64_t m);

/// Gamma(S) = m d / |S|. Throws std::invalid_argument unless P is (d,m)-edge equitable.
Rational economy(const DesignPoly& p, std::uint64_t m);

/// Same ratio from a size alone, without verification.
Rational economy_from_size(int d, std::uint64_t m, std::uint64_t size);

struct EconomyLimits {
  Rational limit_G;                 ///< always 1
  std::optional<Rational> limit_H;  ///< m / alpha(m), m >= 2
  Rational bound_H_lower{4, 3};
  Rational bound_H_upper{3, 2};
  std::optional<Rational> bound_M_lower;  ///< m^2 / (2m - 1)
  std::optional<Rational> bound_M_upper;  ///< m^2 / (m - 1)
};

/// Economies as d -> infinity. H and M entries are present for m >= 2.
EconomyLimits economy_limits(std::uint64_t m);

/// Largest d accepted by the exhaustive minimality search.
inline constexpr int kMaxOracleDim = 4;

struct OracleResult {
  std::uint64_t min_size = 0;
  DesignPoly witness;
};

/// Smallest (d,m)-edge equitable subset of Q_d by exhaustive branch and bound,
/// with the first witness in lexicographic search order. Requires
/// d <= kMaxOracleDim and m <= 2^{d-1}.
OracleResult min_size_oracle(int d, std::uint64_t m);

}  // namespace equi
