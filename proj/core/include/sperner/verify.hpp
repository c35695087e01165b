#pragma once

// Decision procedures for the defining properties of Sperner systems.
// A false verdict always carries a witness that has been re-checked by an
// independent route before it is returned.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sperner/family.hpp"

namespace sperner {

using Chain = std::vector<SetWord>;

// Either the set S whose addition fails the property, or a chain.
using Witness = std::variant<SetWord, Chain>;

struct VerifyReport {
  bool verdict = true;
  std::optional<Witness> witness;
  std::uint64_t subsets_checked = 0;
  bool exhaustive = true;

  explicit operator bool() const { return verdict; }
  // Convenience accessors; empty when the witness has the other shape.
  std::optional<SetWord> witness_set() const;
  std::optional<Chain> witness_chain() const;
};

inline constexpr std::size_t kDefaultMaxN = 28;

struct SweepOptions {
  // Exhaustive sweeps refuse ground sets larger than this.
  std::size_t max_n = kDefaultMaxN;
  // When set, test this many random sets instead of all 2^n (non-exhaustive).
  // Sets are drawn size-stratified: a uniform size in [0, n], then a uniform
  // subset of that size.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
};

// No chain of k+1 members. Witness: a (k+1)-chain, bottom first.
VerifyReport is_k_sperner(const Family& f, unsigned k);

// k-Sperner, and every absent set completes a (k+1)-chain. Throws NotKSperner
// (carrying a chain) if f has a (k+1)-chain, GroundSetTooLarge past the guard.
VerifyReport is_saturated(const Family& f, unsigned k, const SweepOptions& options = {});

// Every absent set lies on a (k+1)-chain of f plus that set. f may itself
// contain (k+1)-chains.
VerifyReport is_oversaturated(const Family& f, unsigned k, const SweepOptions& options = {});

// Every member of layer i > 0 strictly contains a member of layer i-1.
VerifyReport is_layered(const LayerSequence& seq);

// Diagnostic: members of layer i have cardinality in [i, n-k+i+1].
// Requires exactly k layers (BadParams otherwise).
VerifyReport check_between(const LayerSequence& seq, unsigned k);

// True iff the set lies on a (k+1)-chain of f plus s, recomputed from scratch.
bool completes_chain(const Family& f, SetWord s, unsigned k);

}  // namespace sperner
