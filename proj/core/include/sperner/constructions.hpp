#pragma once

// Deterministic constructions of saturated k-Sperner systems and the maps
// that transform them.
//
// Operations that take a saturated family as input check that hypothesis
// exhaustively when the ground set is at most `kDefaultMaxN` and Checks::verify
// is in effect. Structural hypotheses (containing the empty and full sets,
// homogeneity) are always checked.

#include <cstddef>
#include <optional>
#include <vector>

#include "sperner/family.hpp"
#include "sperner/verify.hpp"

namespace sperner {

enum class Checks { verify, trust };

// Y = {0..k-3}, H = the remaining n-k+2 elements; returns P(Y) together with
// {S u H : S in P(Y)}. Size 2^(k-1). Requires k >= 2 and n >= k-1.
Family powerset_construction(unsigned k, std::size_t n);

// f u {A u {y} : A in f} for a fresh element y = n. f must be a saturated
// (k-1)-Sperner system containing the empty and full sets.
Family doubled(const Family& f, unsigned k, Checks checks = Checks::verify);

struct StableSets {
  Family sets;
  bool degenerate = false;  // the empty set was in the input; nothing is stable
};

// Minimal hitting sets of b, canonically ordered.
std::vector<SetWord> minimal_transversals(const Family& b);

// All maximal S containing no member of b, i.e. complements of the minimal
// transversals of b.
StableSets maximal_stable_sets(const Family& b);

// Element roles: 0..5 are x1, x2, y1, y2, w, z; H = {6..n-1}. Requires n >= 8.
LayerSequence six_sperner_layers(std::size_t n);
// Union of six_sperner_layers(n): a saturated 6-Sperner system of size 30.
Family six_sperner(std::size_t n);

// Union of k layered, pairwise disjoint saturated antichains.
// Throws PreconditionFailed naming the first layer that is not a saturated antichain.
Family union_layered(const LayerSequence& seq, unsigned k, Checks checks = Checks::verify);

struct CombineOptions {
  std::optional<SetWord> h1, h2;  // default: the family's own homogeneous set
  std::optional<unsigned> k1, k2;  // default: the family's longest chain
  Checks checks = Checks::verify;
};

// Places f2's ground set after f1's and returns
//   {A u B : A small in f1, B small in f2} u {S u T : S large in f1, T large in f2}.
Family combine(const Family& f1, const Family& f2, const CombineOptions& options = {});

// k = 4j + 2 + s with j >= 1 and 0 <= s <= 3.
struct EpsilonShape {
  unsigned j;
  unsigned s;
};
EpsilonShape epsilon_shape(unsigned k);

// j copies of six_sperner(8) combined left to right, then doubled s times.
// Size 2^(s+1) * 15^j on 8j + s elements. Requires k >= 6.
Family epsilon_pipeline(unsigned k);

struct CambridgeFixture {
  Family b0;
  Family b1;
  Family f;  // b0 u b1
};

// Element order x1, x2, x3, y1, y2, y3.
CambridgeFixture cambridge_fixture();

// Drops the first and last canonical layers and adds the empty and full sets.
Family normalize_top_bottom(const Family& f, unsigned k, Checks checks = Checks::verify);

// Removes the lowest element of h from the ground set (renumbering the ones
// above it) and from every member. Needs |h| >= 2 and h homogeneous for f.
Family shrink_ground(const Family& f, SetWord h);
// Adds a fresh element n to the ground set and to every member containing h.
Family grow_ground(const Family& f, SetWord h);

// Copies f onto a ground set of size n_total, shifting every element by offset.
Family embed(const Family& f, std::size_t offset, std::size_t n_total);

}  // namespace sperner
