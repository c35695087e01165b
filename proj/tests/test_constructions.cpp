#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sperner/constructions.hpp"
#include "sperner/verify.hpp"
#include "support.hpp"

using namespace sperner;

namespace {

Family fam(std::size_t n, std::initializer_list<std::initializer_list<unsigned>> sets) {
  std::vector<SetWord> v;
  for (auto s : sets) v.push_back(SetWord::of(s));
  return Family(GroundSet(n), v);
}

}  // namespace

TEST_CASE("powerset construction") {
  CHECK(powerset_construction(3, 3) == fam(3, {{}, {0}, {1, 2}, {0, 1, 2}}));
  CHECK(powerset_construction(2, 3) == fam(3, {{}, {0, 1, 2}}));
  const Family p = powerset_construction(6, 8);
  CHECK(p.size() == 32);
  CHECK(is_saturated(p, 6));
  for (unsigned k = 2; k <= 10; ++k) CHECK(powerset_construction(k, k + 1).size() == (std::size_t{1} << (k - 1)));
  CHECK_THROWS_AS(powerset_construction(1, 3), BadParams);
  CHECK_THROWS_AS(powerset_construction(5, 3), BadParams);
}

TEST_CASE("doubling") {
  const Family d = doubled(fam(2, {{}, {0, 1}}), 3);
  CHECK(d == fam(3, {{}, {0, 1}, {2}, {0, 1, 2}}));
  CHECK(is_saturated(d, 3));
  const Family six = doubled(six_sperner(8), 7);
  CHECK(six.size() == 60);
  CHECK(is_saturated(six, 7));
  CHECK_THROWS_AS(doubled(fam(1, {{}}), 2), PreconditionFailed);
  CHECK_THROWS_AS(doubled(fam(1, {{}, {0}}), 1), BadParams);
  CHECK_THROWS_AS(doubled(fam(2, {{}, {0}, {0, 1}}), 2), PreconditionFailed);
}

TEST_CASE("minimal transversals and stable sets") {
  // sml(A2): the four {x_i, y_j} pairs and {w, z}; x1,x2,y1,y2,w,z = 0..5
  const Family a2 = fam(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}});
  const StableSets s2 = maximal_stable_sets(a2);
  CHECK(s2.sets.size() == 4);
  for (SetWord s : s2.sets) CHECK(SetWord::range(6, 8).is_subset_of(s));
  const Family a3 = fam(8, {{0, 2, 4}, {0, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  const std::vector<SetWord> t3 = minimal_transversals(a3);
  CHECK(t3.size() == 5);
  CHECK(std::find(t3.begin(), t3.end(), SetWord::of({4, 5})) != t3.end());
  CHECK(maximal_stable_sets(a3).sets.size() == 5);
  const StableSets none = maximal_stable_sets(Family(GroundSet(3)));
  CHECK(none.sets == fam(3, {{0, 1, 2}}));
}

TEST_CASE("minimal transversals by enumeration") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng.below(6);
    std::vector<SetWord> edges;
    const std::size_t m = 1 + rng.below(5);
    for (std::size_t j = 0; j < m; ++j) {
      SetWord e = rng.subset(n);
      if (e.empty()) e = SetWord::singleton(static_cast<unsigned>(rng.below(n)));
      edges.push_back(e);
    }
    const Family b(GroundSet(n), edges);
    std::vector<SetWord> expect;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      const SetWord t(static_cast<SetWord::Bits>(v));
      const auto hits = [&](SetWord c) {
        for (SetWord e : b)
          if (!e.intersects(c)) return false;
        return true;
      };
      if (!hits(t)) continue;
      bool minimal = true;
      for (unsigned x : t.elements()) minimal = minimal && !hits(t.without(x));
      if (minimal) expect.push_back(t);
    }
    std::sort(expect.begin(), expect.end());
    std::vector<SetWord> got = minimal_transversals(b);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("six sperner") {
  const Family f = six_sperner(8);
  CHECK(f.size() == 30);
  CHECK(is_saturated(f, 6));
  const LayerSequence layers = six_sperner_layers(8);
  std::vector<std::size_t> sizes;
  for (const Family& l : layers) sizes.push_back(l.size());
  CHECK(sizes == std::vector<std::size_t>{1, 5, 9, 9, 5, 1});
  CHECK(canonical_decomposition(f) == layers);
  const Family g = six_sperner(9);
  CHECK(g.size() == 30);
  CHECK(is_saturated(g, 6));
  CHECK(homogeneous_set(g)->size() == 3);
  CHECK_THROWS_AS(six_sperner(7), BadParams);
}

TEST_CASE("union of layers") {
  CHECK(union_layered(six_sperner_layers(8), 6) == six_sperner(8));
  const Family top_bottom = union_layered(LayerSequence({fam(3, {{}}), fam(3, {{0, 1, 2}})}), 2);
  CHECK(top_bottom == fam(3, {{}, {0, 1, 2}}));
  CHECK(is_saturated(top_bottom, 2));
  const CambridgeFixture c = cambridge_fixture();
  CHECK_THROWS_AS(union_layered(LayerSequence({c.b0, c.b1}), 2), PreconditionFailed);
  CHECK_THROWS_AS(union_layered(six_sperner_layers(8), 5), PreconditionFailed);
}

TEST_CASE("combine") {
  const Family p = powerset_construction(3, 3);
  const Family c = combine(p, p);
  CHECK(c.size() == 8);
  CHECK(c.n() == 6);
  CHECK(is_saturated(c, 4));
  const Family tb = combine(fam(2, {{}, {0, 1}}), fam(3, {{}, {0, 1, 2}}));
  CHECK(tb == fam(5, {{}, {0, 1, 2, 3, 4}}));
  CHECK(is_saturated(tb, 2));
  CHECK_THROWS_AS(combine(cambridge_fixture().f, p), PreconditionFailed);
}

TEST_CASE("combine size formula") {
  std::vector<Family> inputs;
  for (unsigned k = 2; k <= 5; ++k) inputs.push_back(powerset_construction(k, k + 1));
  inputs.push_back(six_sperner(8));
  for (const Family& a : inputs)
    for (const Family& b : inputs) {
      if (a.n() + b.n() > 20) continue;
      const SplitFamily sa = split_small_large(a, *homogeneous_set(a));
      const SplitFamily sb = split_small_large(b, *homogeneous_set(b));
      const Family c = combine(a, b);
      CHECK(c.size() == sa.small.size() * sb.small.size() + sa.large.size() * sb.large.size());
      const unsigned k = static_cast<unsigned>(ChainIndex(a).longest() + ChainIndex(b).longest() - 2);
      CHECK(is_saturated(c, k));
      CHECK(homogeneous_set(c).has_value());
    }
}

TEST_CASE("epsilon pipeline") {
  CHECK(epsilon_shape(6).j == 1);
  CHECK(epsilon_shape(6).s == 0);
  CHECK(epsilon_shape(13).j == 2);
  CHECK(epsilon_shape(13).s == 3);
  const std::size_t expect[] = {30, 60, 120, 240, 450, 900, 1800, 3600};
  for (unsigned k = 6; k <= 13; ++k) {
    const Family f = epsilon_pipeline(k);
    const EpsilonShape sh = epsilon_shape(k);
    CHECK(f.size() == expect[k - 6]);
    CHECK(f.size() == (std::size_t{2} << sh.s) * static_cast<std::size_t>(std::pow(15, sh.j)));
    CHECK(f.size() < (std::size_t{1} << (k - 1)));
    CHECK(is_k_sperner(f, k));
  }
  CHECK(epsilon_pipeline(10).n() == 16);
  CHECK_THROWS_AS(epsilon_pipeline(5), BadParams);
}

TEST_CASE("cambridge fixture") {
  const CambridgeFixture c = cambridge_fixture();
  CHECK(c.b0.size() == 10);
  CHECK(c.b1.size() == 10);
  CHECK(c.f.size() == 20);
  CHECK(is_saturated(c.f, 2));
  CHECK(count_chains(c.b0, 2) == 0);
  CHECK(count_chains(c.b1, 2) == 0);
}

TEST_CASE("top and bottom normalisation") {
  const Family p = powerset_construction(3, 3);
  CHECK(normalize_top_bottom(p, 3) == p);
  const Family c = normalize_top_bottom(cambridge_fixture().f, 2);
  CHECK(c == fam(6, {{}, {0, 1, 2, 3, 4, 5}}));
  CHECK(normalize_top_bottom(fam(2, {{}, {0, 1}}), 2) == fam(2, {{}, {0, 1}}));
  CHECK_THROWS_AS(normalize_top_bottom(fam(2, {{0}, {1}}), 1), BadParams);
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const unsigned k = 2 + static_cast<unsigned>(rng.below(3));
    const Family f = random_greedy_saturated(2 + rng.below(5), k, rng.next());
    const Family g = normalize_top_bottom(f, k);
    CHECK(g.contains(SetWord{}));
    CHECK(g.contains(SetWord::full(g.n())));
    CHECK(g.size() <= f.size());
    CHECK(is_saturated(g, k));
  }
}

TEST_CASE("ground set transfer") {
  const Family six = six_sperner(8);
  const SetWord h = *homogeneous_set(six);
  const Family grown = grow_ground(six, h);
  CHECK(grown.n() == 9);
  CHECK(grown.size() == 30);
  CHECK(is_saturated(grown, 6));
  const SetWord h2 = h.with(8);
  CHECK(*homogeneous_set(grown) == h2);
  CHECK(shrink_ground(grown, h2) == six);
  for (unsigned k = 3; k <= 7; ++k) {
    const Family p = powerset_construction(k, k + 1);
    const Family q = grow_ground(p, *homogeneous_set(p));
    for (std::size_t len = 1; len <= k + 1; ++len) CHECK(count_chains(q, len) == count_chains(p, len));
  }
  CHECK_THROWS_AS(shrink_ground(powerset_construction(3, 3), SetWord::of({0})), PreconditionFailed);
  CHECK_THROWS_AS(shrink_ground(powerset_construction(3, 3), SetWord::of({0, 1})), PreconditionFailed);
}

TEST_CASE("shrink renumbers around the removed element") {
  // h = {1, 3} on n=4: removing element 1 shifts 2, 3 down.
  const Family f = fam(4, {{}, {1, 3}, {0, 1, 3}, {0, 1, 2, 3}});
  const Family g = shrink_ground(f, SetWord::of({1, 3}));
  CHECK(g == fam(3, {{}, {2}, {0, 2}, {0, 1, 2}}));
  CHECK_THROWS_AS(grow_ground(g, SetWord::of({2})), PreconditionFailed);
}

TEST_CASE("layers of a saturated layered union are the input layers") {
  const LayerSequence six = six_sperner_layers(10);
  CHECK(canonical_decomposition(union_layered(six, 6)) == six);
}
