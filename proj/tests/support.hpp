#pragma once

// Seeded generators shared by the property tests.

#include <optional>
#include <vector>

#include "sperner/constructions.hpp"
#include "sperner/family.hpp"
#include "sperner/lattice.hpp"
#include "sperner/random.hpp"
#include "sperner/search.hpp"
#include "sperner/verify.hpp"

namespace support {

using namespace sperner;

// Each set is kept with probability `density`.
inline Family random_family(Rng& rng, std::size_t n, double density) {
  std::vector<SetWord> sets;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (rng.coin(density)) sets.emplace_back(static_cast<SetWord::Bits>(v));
  return Family(GroundSet(n), std::move(sets));
}

// Mixture: sparse random, dense random, maximal k-Sperner, and maximal
// k-Sperner with one set toggled. Roughly half the cases are saturated.
inline Family mixed_family(Rng& rng, std::size_t n, unsigned k) {
  switch (rng.below(4)) {
    case 0:
      return random_family(rng, n, 0.05 + 0.2 * static_cast<double>(rng.below(100)) / 100.0);
    case 1:
      return random_family(rng, n, 0.3 + 0.5 * static_cast<double>(rng.below(100)) / 100.0);
    case 2:
      return random_greedy_saturated(n, k, rng.next());
    default: {
      Family f = random_greedy_saturated(n, k, rng.next());
      const SetWord s(static_cast<SetWord::Bits>(rng.below(std::uint64_t{1} << n)));
      return f.contains(s) ? f.without(s) : f.with(s);
    }
  }
}

// A random maximal antichain drawn from the sets strictly above some member
// of `prev` (or from everything when prev is empty) and outside `used`.
inline Family maximal_antichain_above(Rng& rng, std::size_t n, const Family* prev, const Family& used) {
  std::vector<SetWord> pool;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const SetWord s(static_cast<SetWord::Bits>(v));
    if (used.contains(s)) continue;
    bool above = prev == nullptr;
    if (prev != nullptr)
      for (SetWord p : *prev) above = above || p.is_proper_subset_of(s);
    if (above) pool.push_back(s);
  }
  rng.shuffle(pool);
  std::vector<SetWord> chosen;
  for (SetWord s : pool) {
    bool free = true;
    for (SetWord c : chosen) free = free && !c.is_subset_of(s) && !s.is_subset_of(c);
    if (free) chosen.push_back(s);
  }
  return Family(GroundSet(n), std::move(chosen));
}

// k pairwise disjoint saturated antichains forming a layered sequence, by
// rejection. nullopt when no acceptable draw turned up.
inline std::optional<LayerSequence> random_layered_antichains(Rng& rng, std::size_t n, unsigned k,
                                                              int attempts = 64) {
  for (int a = 0; a < attempts; ++a) {
    std::vector<Family> layers;
    Family used{GroundSet(n)};
    bool ok = true;
    for (unsigned i = 0; i < k && ok; ++i) {
      Family layer = maximal_antichain_above(rng, n, layers.empty() ? nullptr : &layers.back(), used);
      ok = !layer.empty() && is_saturated(layer, 1).verdict;
      used = used.merged(layer);
      layers.push_back(std::move(layer));
    }
    if (!ok) continue;
    LayerSequence seq(std::move(layers));
    if (is_layered(seq).verdict) return seq;
  }
  return std::nullopt;
}

// Saturated families with a homogeneous set, across every construction that
// produces one. Ground sets stay at or below 20.
struct Constructed {
  Family f;
  unsigned k;
};

inline Constructed constructed_with_homogeneous(Rng& rng) {
  switch (rng.below(6)) {
    case 0: {
      const unsigned k = 2 + static_cast<unsigned>(rng.below(6));
      return {powerset_construction(k, k + rng.below(5)), k};
    }
    case 1:
      return {six_sperner(8 + rng.below(5)), 6};
    case 2: {
      const unsigned k = 2 + static_cast<unsigned>(rng.below(4));
      const Family base = powerset_construction(k, k + 1 + rng.below(3));
      return {doubled(base, k + 1), k + 1};
    }
    case 3: {
      const unsigned k1 = 2 + static_cast<unsigned>(rng.below(3));
      const unsigned k2 = 2 + static_cast<unsigned>(rng.below(3));
      const Family a = powerset_construction(k1, k1 + rng.below(3));
      const Family b = powerset_construction(k2, k2 + rng.below(3));
      return {combine(a, b), k1 + k2 - 2};
    }
    case 4: {
      const unsigned k = 2 + static_cast<unsigned>(rng.below(4));
      const Family base = powerset_construction(k, k + rng.below(3));
      return {grow_ground(base, *homogeneous_set(base)), k};
    }
    default: {
      const unsigned k = 6 + static_cast<unsigned>(rng.below(2));
      return {epsilon_pipeline(k), k};
    }
  }
}

}  // namespace support
