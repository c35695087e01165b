#pragma once

// Test oracles that share no code path with the chain dynamic programming.

#include <cstddef>
#include <cstdint>

#include "sperner/family.hpp"
#include "sperner/errors.hpp"

namespace sperner {

// Saturation straight from the definition: recursive chain enumeration in
// f u {S} for every absent S. Ground sets up to 10 elements.
bool naive_is_saturated(const Family& f, unsigned k);

struct SearchResult {
  std::size_t minimum = 0;
  Family witness;
  std::uint64_t families_examined = 0;
  bool exhausted = false;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(SearchResult best) : Error("search budget exceeded"), best_(std::move(best)) {}
  const SearchResult& best() const { return best_; }

 private:
  SearchResult best_;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// Smallest saturated k-Sperner system on n elements, by iterative deepening
// over family size with families enumerated in canonical order.
// Requires n <= 5 and k <= 3.
SearchResult brute_force_min_saturated(std::size_t n, unsigned k, std::uint64_t budget = kDefaultSearchBudget);

// A random maximal k-Sperner family: insert absent sets in seeded random
// order whenever no (k+1)-chain appears. Requires n <= 20.
Family random_greedy_saturated(std::size_t n, unsigned k, std::uint64_t seed);

}  // namespace sperner
