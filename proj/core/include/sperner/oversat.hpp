#pragma once

// Small oversaturated k-Sperner systems on k^2 + k elements.
//
// For every set size t we draw two collections F_t and G_t such that
//   (a) |F| + |G| >= k for all F in F_t, G in G_t, and
//   (c) every t-set S strictly contains some F and is disjoint from some G.
// Padding every F (and the complement of every G) with a chain of subsets
// then threads a (k+1)-chain through every absent set.
//
// The existence argument behind (c) is probabilistic; here (c) is checked
// after each draw and the draw is repeated on failure.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/constructions.hpp"
#include "sperner/family.hpp"

namespace sperner {

// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

enum class ProfileName { paper, desk };

struct FunProfile {
  ProfileName name = ProfileName::desk;
  unsigned retries = 32;
  // Property (c) is checked over all t-sets when C(n, t) is at most this,
  // otherwise on `sample_count` uniform t-sets.
  std::uint64_t verify_budget = std::uint64_t{1} << 21;
  std::uint64_t sample_count = std::uint64_t{1} << 14;

  static FunProfile paper();
  static FunProfile desk();

  // Collection sizes before capping at the number of available subsets.
  std::uint64_t f_target(unsigned k) const;
  std::uint64_t g_target(unsigned k) const;
  std::uint64_t case1_g_target(unsigned k) const;
};

enum class FunCase { case1, case2, mirrored };
enum class CoverCheck { exhaustive, sampled };

std::string to_string(ProfileName p);
std::string to_string(FunCase c);
std::string to_string(CoverCheck c);

struct FunCollections {
  unsigned t = 0;
  Family f_t;
  Family g_t;
  FunCase case_tag = FunCase::case1;
  std::optional<unsigned> a_k;  // size of the F_t members (Case 2 and its mirror)
  CoverCheck check = CoverCheck::exhaustive;
  bool verified = false;  // property (c) held under `check`
  unsigned attempts = 0;
  bool greedy_fallback = false;
};

// floor(-k log(sqrt 2) / log(p) + 1) with p = t / (k^2 + k), unclamped.
long fun_exponent_raw(unsigned k, unsigned t);
// The raw value clamped into [1, k-1] (or 0 for k = 1) and below t.
unsigned fun_exponent(unsigned k, unsigned t);

// Case 1 when t <= floor(n/8), Case 2 up to floor(n/2), mirrored above.
FunCase fun_case(unsigned k, unsigned t);

// Ground set of size k^2 + k. Throws RetriesExhausted (with an uncovered
// t-set) if no draw satisfies (c) and the greedy fallback is out of reach.
FunCollections lemma_fun_collections(unsigned k, unsigned t, const FunProfile& profile, std::uint64_t seed);

// Checks property (c) exhaustively, returning the first uncovered t-set.
std::optional<SetWord> find_uncovered(std::size_t n, unsigned t, const Family& f_t, const Family& g_t);

// F together with the chain F_1 < ... < F_i < F, i = min(k-1, |F|), where
// F_{j} drops the highest-indexed element of F_{j+1}.
Family chain_padding(SetWord f, unsigned k, std::size_t n);

struct OversatConstruction {
  Family family;
  std::vector<FunCollections> per_t;  // indexed by t-1
  ProfileName profile = ProfileName::desk;
  std::uint64_t seed = 0;
  unsigned k = 0;

  // '#'-prefixed lines describing the run, for the family file.
  std::vector<std::string> metadata() const;
};

// Requires k^2 + k <= kCapacity.
OversatConstruction oversat_construction(unsigned k, const FunProfile& profile, std::uint64_t seed);

// g u {T u H : T in g} with H = `extra` fresh elements.
Family extend_oversat(const Family& g, unsigned extra, unsigned k, Checks checks = Checks::verify);

}  // namespace sperner
