#pragma once

// Seeded randomness with results that do not depend on the standard library
// implementation: std::mt19937_64 is fully specified, the distributions are not,
// so bounded draws are done here by rejection.

#include <cstdint>
#include <random>
#include <vector>

#include "sperner/set_word.hpp"

namespace sperner {

// splitmix64 finaliser; used to derive independent substream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}
  // Substream `stream` of `seed`; distinct streams are independent.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) { return Rng(mix_seed(seed) ^ mix_seed(~stream)); }

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  // Uniform subset of {0..n-1} with exactly `size` elements.
  SetWord subset_of_size(std::size_t n, std::size_t size);
  // Each element independently with probability 1/2.
  SetWord subset(std::size_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sperner
