#include "sperner/search.hpp"

#include <algorithm>
#include <numeric>

#include "sperner/random.hpp"

namespace sperner {

namespace {

// Is there a chain of `length` sets in `sets` (canonically ordered) that
// starts at sets[from]? Plain depth-first enumeration, no memoisation.
bool chain_from(const std::vector<SetWord>& sets, std::size_t from, std::size_t length) {
  if (length <= 1) return true;
  for (std::size_t i = from + 1; i < sets.size(); ++i) {
    if (sets[from].is_proper_subset_of(sets[i]) && chain_from(sets, i, length - 1)) return true;
  }
  return false;
}

bool has_chain(const std::vector<SetWord>& sets, std::size_t length) {
  if (length == 0) return true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (chain_from(sets, i, length)) return true;
  }
  return false;
}

std::vector<SetWord> all_subsets_canonical(std::size_t n) {
  std::vector<SetWord> all;
  all.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) all.emplace_back(static_cast<SetWord::Bits>(s));
  std::sort(all.begin(), all.end());
  return all;
}

bool naive_saturated_sets(const std::vector<SetWord>& sets, std::size_t n, unsigned k) {
  if (has_chain(sets, k + 1)) return false;
  std::vector<SetWord> extended;
  extended.reserve(sets.size() + 1);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const SetWord s(static_cast<SetWord::Bits>(v));
    if (std::find(sets.begin(), sets.end(), s) != sets.end()) continue;
    extended.assign(sets.begin(), sets.end());
    extended.insert(std::upper_bound(extended.begin(), extended.end(), s), s);
    if (!has_chain(extended, k + 1)) return false;
  }
  return true;
}

}  // namespace

bool naive_is_saturated(const Family& f, unsigned k) {
  if (k == 0) throw BadParams("k must be positive");
  if (f.n() > 10) throw GroundSetTooLarge("naive oracle is limited to n <= 10");
  return naive_saturated_sets(std::vector<SetWord>(f.begin(), f.end()), f.n(), k);
}

SearchResult brute_force_min_saturated(std::size_t n, unsigned k, std::uint64_t budget) {
  if (n > 5 || k == 0 || k > 3) throw BadParams("brute-force search needs n <= 5 and 1 <= k <= 3");
  const std::vector<SetWord> universe = all_subsets_canonical(n);
  SearchResult result;
  std::vector<SetWord> chosen;
  std::uint64_t nodes = 0;

  // Depth-first over m-subsets of the universe in lexicographic index order.
  // Prefixes that already hold a (k+1)-chain are pruned: supersets of a
  // non-k-Sperner family are never k-Sperner.
  const auto search = [&](auto&& self, std::size_t start, std::size_t m) -> bool {
    if (++nodes > budget) throw BudgetExceeded(result);
    if (chosen.size() == m) {
      ++result.families_examined;
      return naive_saturated_sets(chosen, n, k);
    }
    for (std::size_t i = start; i + (m - chosen.size()) <= universe.size(); ++i) {
      chosen.push_back(universe[i]);
      if (!has_chain(chosen, k + 1) && self(self, i + 1, m)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t m = 1; m <= universe.size(); ++m) {
    chosen.clear();
    if (search(search, 0, m)) {
      result.minimum = m;
      result.witness = Family(GroundSet(n), chosen);
      result.exhausted = true;
      return result;
    }
  }
  // Unreachable: some maximal k-Sperner family always exists.
  result.exhausted = true;
  return result;
}

Family random_greedy_saturated(std::size_t n, unsigned k, std::uint64_t seed) {
  if (n > 20) throw BadParams("greedy generator is limited to n <= 20");
  if (k == 0) throw BadParams("k must be positive");
  Rng rng(seed);
  std::vector<std::uint64_t> order(std::size_t{1} << n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<SetWord> members;
  std::vector<std::size_t> down;  // longest chain ending at members[i]
  std::vector<std::size_t> up;    // longest chain starting at members[i]
  const auto rebuild = [&] {
    std::sort(members.begin(), members.end());
    const std::size_t m = members.size();
    down.assign(m, 1);
    up.assign(m, 1);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (members[i].is_proper_subset_of(members[j])) down[j] = std::max(down[j], down[i] + 1);
    for (std::size_t j = m; j-- > 0;)
      for (std::size_t i = j + 1; i < m; ++i)
        if (members[j].is_proper_subset_of(members[i])) up[j] = std::max(up[j], up[i] + 1);
  };

  bool inserted = true;
  while (inserted) {
    inserted = false;
    rng.shuffle(order);
    for (std::uint64_t v : order) {
      const SetWord s(static_cast<SetWord::Bits>(v));
      if (std::binary_search(members.begin(), members.end(), s)) continue;
      std::size_t below = 0;
      std::size_t above = 0;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].is_proper_subset_of(s)) below = std::max(below, down[i]);
        if (s.is_proper_subset_of(members[i])) above = std::max(above, up[i]);
      }
      if (below + above + 1 <= k) {
        members.push_back(s);
        rebuild();
        inserted = true;
      }
    }
  }
  return Family(GroundSet(n), std::move(members));
}

}  // namespace sperner
