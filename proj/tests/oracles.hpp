#pragma once

// Brute-force reference implementations. These enumerate directly from the
// definitions and deliberately avoid the library's dynamic programming.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "sperner/family.hpp"

namespace oracle {

using sperner::Family;
using sperner::SetWord;

inline bool is_chain(const std::vector<SetWord>& sets) {
  // sets in any order; a chain iff sorted by size it is strictly increasing.
  std::vector<SetWord> s = sets;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!s[i - 1].is_proper_subset_of(s[i])) return false;
  return true;
}

// Number of L-element subcollections of f that are chains.
inline std::uint64_t count_chains(const Family& f, std::size_t length) {
  const std::size_t m = f.size();
  if (length > m) return 0;
  std::uint64_t total = 0;
  std::vector<std::size_t> idx(length);
  for (std::size_t i = 0; i < length; ++i) idx[i] = i;
  while (true) {
    std::vector<SetWord> pick;
    for (std::size_t i : idx) pick.push_back(f[i]);
    if (is_chain(pick)) ++total;
    std::size_t i = length;
    while (i > 0 && idx[i - 1] == m - length + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < length; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

// Largest chain among the members strictly below (or above) s, by trying
// every subcollection. Only for families with at most ~20 relevant members.
inline std::size_t longest_chain_relative(const Family& f, SetWord s, bool below) {
  std::vector<SetWord> rel;
  for (SetWord a : f)
    if (below ? a.is_proper_subset_of(s) : s.is_proper_subset_of(a)) rel.push_back(a);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rel.size()); ++mask) {
    std::vector<SetWord> pick;
    for (std::size_t i = 0; i < rel.size(); ++i)
      if ((mask >> i) & 1U) pick.push_back(rel[i]);
    if (pick.size() > best && is_chain(pick)) best = pick.size();
  }
  return best;
}

// Atoms by grouping elements with identical membership vectors.
inline std::vector<SetWord> atoms(const Family& f) {
  std::map<std::vector<bool>, SetWord> groups;
  for (unsigned x = 0; x < f.n(); ++x) {
    std::vector<bool> key;
    for (SetWord s : f) key.push_back(s.contains(x));
    groups[key] = groups[key].with(x);
  }
  std::vector<SetWord> out;
  for (auto& [key, block] : groups) out.push_back(block);
  std::sort(out.begin(), out.end(), [](SetWord a, SetWord b) { return a.lowest() < b.lowest(); });
  return out;
}

// Repeatedly strip minimal elements.
inline std::vector<std::vector<SetWord>> strip_minimal(const Family& f) {
  std::vector<SetWord> rest(f.begin(), f.end());
  std::vector<std::vector<SetWord>> layers;
  while (!rest.empty()) {
    std::vector<SetWord> minimal, keep;
    for (SetWord a : rest) {
      bool has_below = false;
      for (SetWord b : rest)
        if (b.is_proper_subset_of(a)) has_below = true;
      (has_below ? keep : minimal).push_back(a);
    }
    layers.push_back(minimal);
    rest = keep;
  }
  return layers;
}

}  // namespace oracle
