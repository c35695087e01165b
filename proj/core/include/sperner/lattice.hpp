#pragma once

// Chain dynamic programming, atoms, small/large splitting and the canonical
// decomposition of a family into antichains.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sperner/family.hpp"

namespace sperner {

// Number of L-chains A_1 < ... < A_L (strict inclusion) in f. Throws
// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_chains(const Family& f, std::size_t length);

// Longest-chain lengths for every member of a family, plus queries for
// arbitrary sets. Built once in O(|f|^2); each query is O(|f|).
class ChainIndex {
 public:
  explicit ChainIndex(const Family& f);

  const Family& family() const { return family_; }
  // Longest chain in f whose top is f[i] (counting f[i]).
  std::size_t ending_at(std::size_t i) const { return down_[i]; }
  // Longest chain in f whose bottom is f[i] (counting f[i]).
  std::size_t starting_at(std::size_t i) const { return up_[i]; }
  std::size_t longest() const { return longest_; }

  // Longest chain of members strictly below / strictly above s.
  std::size_t below(SetWord s) const;
  std::size_t above(SetWord s) const;

  // A longest chain, bottom first. Ties are broken towards the lowest
  // canonical index at every step, so the result is deterministic.
  std::vector<SetWord> longest_chain() const;
  // The longest chain strictly below s, bottom first.
  std::vector<SetWord> chain_below(SetWord s) const;
  // The longest chain strictly above s, bottom first.
  std::vector<SetWord> chain_above(SetWord s) const;

 private:
  std::vector<SetWord> descend_from(std::size_t top) const;
  std::vector<SetWord> ascend_from(std::size_t bottom) const;

  Family family_;
  std::vector<std::size_t> down_;
  std::vector<std::size_t> up_;
  std::size_t longest_ = 0;
};

std::size_t longest_chain_below(const Family& f, SetWord s);
std::size_t longest_chain_above(const Family& f, SetWord s);

// Per-subset chain lengths over the whole power set of a small ground set.
// below(S) is the longest chain of members contained in S, with S itself
// counted only when S is a member; above(S) is the symmetric quantity for
// supersets. For S outside f these are exactly the strict below/above lengths.
class SubsetSweep {
 public:
  // Refuses ground sets above max_n with GroundSetTooLarge.
  SubsetSweep(const Family& f, std::size_t max_n);

  std::size_t n() const { return n_; }
  std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }
  bool member(std::uint64_t s) const { return (member_[s >> 6] >> (s & 63)) & 1U; }
  std::size_t below(std::uint64_t s) const { return below_[s]; }
  std::size_t above(std::uint64_t s) const { return above_[s]; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> member_;
  std::vector<std::uint8_t> below_;
  std::vector<std::uint8_t> above_;
};

struct AtomPartition {
  std::vector<SetWord> atoms;            // ordered by lowest element
  std::vector<SetWord> homogeneous_atoms;  // atoms of size >= 2
};

AtomPartition atoms(const Family& f);

// The unique atom of size >= 2, nullopt if every atom is a singleton.
// Throws AmbiguousHomogeneous if there are several.
std::optional<SetWord> homogeneous_set(const Family& f);

// True iff every member meets h in nothing or all of h.
bool splits_cleanly(const Family& f, SetWord h);

struct SplitFamily {
  Family small;
  Family large;
  SetWord h;
};

// Throws NotHomogeneous with the first offending member.
SplitFamily split_small_large(const Family& f, SetWord h);

// Layer i holds the minimal members of what layers 0..i-1 leave behind.
LayerSequence canonical_decomposition(const Family& f);

Family complement_family(const Family& f);

}  // namespace sperner
