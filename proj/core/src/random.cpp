#include "sperner/random.hpp"

#include <numeric>

namespace sperner {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

SetWord Rng::subset_of_size(std::size_t n, std::size_t size) {
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  SetWord s;
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + below(n - i)]);
    s = s.with(pool[i]);
  }
  return s;
}

SetWord Rng::subset(std::size_t n) {
  const SetWord::Bits bits = (static_cast<SetWord::Bits>(next()) << 64) | next();
  return SetWord(bits) & SetWord::full(n);
}

}  // namespace sperner
