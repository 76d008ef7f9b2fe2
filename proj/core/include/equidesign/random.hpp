#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace equi {

/// Reproducible random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the distributions below are
/// implemented here (53-bit uniforms, rejection-sampled integers, Box-Muller
/// normals) so draws agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream `stream` of `seed`, keyed through splitmix64.
  static Rng substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform on {0, ..., n-1}; n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal.
  double normal();

  /// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace equi
