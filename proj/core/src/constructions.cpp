#include "sperner/constructions.hpp"

#include <algorithm>

#include "sperner/errors.hpp"
#include "sperner/lattice.hpp"

namespace sperner {

namespace {

void require_saturated(const Family& f, unsigned k, Checks checks, const std::string& what) {
  if (checks == Checks::trust || f.n() > kDefaultMaxN) return;
  try {
    const VerifyReport r = is_saturated(f, k);
    if (!r.verdict) {
      throw PreconditionFailed(what + " is not a saturated " + std::to_string(k) + "-Sperner system (add {" +
                               to_string(*r.witness_set()) + "})");
    }
  } catch (const NotKSperner&) {
    throw PreconditionFailed(what + " is not " + std::to_string(k) + "-Sperner");
  }
}

void require_top_bottom(const Family& f, const std::string& what) {
  if (!f.contains(SetWord{}) || !f.contains(f.ground().all())) {
    throw PreconditionFailed(what + " must contain the empty set and the full ground set");
  }
}

SetWord shift(SetWord s, std::size_t offset) { return SetWord(s.bits() << offset); }

// Drops bit `pos` and moves every higher bit down by one.
SetWord squeeze_out(SetWord s, unsigned pos) {
  const SetWord low = s & SetWord::full(pos);
  const SetWord high = pos + 1 >= kCapacity ? SetWord{} : SetWord(s.bits() >> (pos + 1));
  return low | shift(high, pos);
}

}  // namespace

Family embed(const Family& f, std::size_t offset, std::size_t n_total) {
  if (f.n() + offset > n_total) throw BadParams("embedding does not fit");
  std::vector<SetWord> sets;
  sets.reserve(f.size());
  for (SetWord s : f) sets.push_back(shift(s, offset));
  return Family(GroundSet(n_total), std::move(sets));
}

Family powerset_construction(unsigned k, std::size_t n) {
  if (k < 2) throw BadParams("powerset construction needs k >= 2");
  if (n + 1 < k) throw BadParams("powerset construction needs n >= k-1");
  const GroundSet ground(n);
  const std::size_t y = k - 2;
  const SetWord h = SetWord::range(y, n);
  std::vector<SetWord> sets;
  sets.reserve(std::size_t{2} << y);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << y); ++mask) {
    const SetWord s(static_cast<SetWord::Bits>(mask));
    sets.push_back(s);
    sets.push_back(s | h);
  }
  return Family(ground, std::move(sets));
}

Family doubled(const Family& f, unsigned k, Checks checks) {
  if (k < 2) throw BadParams("doubling needs k >= 2");
  require_top_bottom(f, "doubling input");
  require_saturated(f, k - 1, checks, "doubling input");
  const std::size_t n = f.n();
  const GroundSet ground(n + 1);
  std::vector<SetWord> sets;
  sets.reserve(2 * f.size());
  for (SetWord a : f) {
    sets.push_back(a);
    sets.push_back(a.with(static_cast<unsigned>(n)));
  }
  return Family(ground, std::move(sets));
}

std::vector<SetWord> minimal_transversals(const Family& b) {
  // Berge's incremental algorithm: extend the transversals of the first i
  // edges to the (i+1)-th and keep the minimal ones.
  std::vector<SetWord> current{SetWord{}};
  std::vector<SetWord> next;
  for (SetWord edge : b) {
    next.clear();
    for (SetWord t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for (unsigned e : edge.elements()) next.push_back(t.with(e));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.clear();
    // Canonical order puts subsets first, so one forward pass keeps the minimal ones.
    for (SetWord t : next) {
      const bool dominated =
          std::any_of(current.begin(), current.end(), [t](SetWord m) { return m.is_proper_subset_of(t); });
      if (!dominated) current.push_back(t);
    }
  }
  return current;
}

StableSets maximal_stable_sets(const Family& b) {
  if (b.contains(SetWord{})) return {Family(b.ground()), true};
  std::vector<SetWord> sets;
  for (SetWord t : minimal_transversals(b)) sets.push_back(t.complement(b.n()));
  return {Family(b.ground(), std::move(sets)), false};
}

LayerSequence six_sperner_layers(std::size_t n) {
  if (n < 8) throw BadParams("six_sperner needs n >= 8");
  enum : unsigned { x1 = 0, x2 = 1, y1 = 2, y2 = 3, w = 4, z = 5 };
  const GroundSet ground(n);
  const SetWord all = ground.all();
  const SetWord h = SetWord::range(6, n);

  const Family a0(ground, {SetWord{}});
  const Family a1(ground, {SetWord::of({x1}), SetWord::of({x2}), SetWord::of({y1}), SetWord::of({w}),
                           h | SetWord::of({y2, z})});
  const Family a4 = complement_family(a1);
  const Family a5(ground, {all});

  const Family small2(ground, {SetWord::of({x1, y1}), SetWord::of({x1, y2}), SetWord::of({x2, y1}),
                               SetWord::of({x2, y2}), SetWord::of({w, z})});
  const Family small3(ground, {SetWord::of({x1, y1, w}), SetWord::of({x1, y1, z}), SetWord::of({x2, y2, w}),
                               SetWord::of({x2, y2, z})});
  const Family a2 = small2.merged(maximal_stable_sets(small2).sets);
  const Family a3 = small3.merged(maximal_stable_sets(small3).sets);
  return LayerSequence({a0, a1, a2, a3, a4, a5});
}

Family six_sperner(std::size_t n) {
  const LayerSequence layers = six_sperner_layers(n);
  Family out(layers[0].ground());
  for (const Family& layer : layers) out = out.merged(layer);
  return out;
}

Family union_layered(const LayerSequence& seq, unsigned k, Checks checks) {
  if (seq.size() != k) {
    throw PreconditionFailed("expected " + std::to_string(k) + " layers, got " + std::to_string(seq.size()));
  }
  if (checks == Checks::verify) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const std::string name = "layer " + std::to_string(i);
      if (seq[i].empty()) throw PreconditionFailed(name + " is empty");
      if (!is_k_sperner(seq[i], 1).verdict) throw PreconditionFailed(name + " is not an antichain");
      require_saturated(seq[i], 1, checks, name);
    }
    const VerifyReport layered = is_layered(seq);
    if (!layered.verdict) {
      throw PreconditionFailed("sequence is not layered at {" + to_string(*layered.witness_set()) + "}");
    }
  }
  Family out(seq.empty() ? GroundSet() : seq[0].ground());
  for (const Family& layer : seq) out = out.merged(layer);
  return out;
}

Family combine(const Family& f1, const Family& f2, const CombineOptions& options) {
  const auto prepare = [&](const Family& f, const std::optional<SetWord>& given,
                           const std::optional<unsigned>& k_given, const std::string& name) {
    require_top_bottom(f, name);
    std::optional<SetWord> h = given;
    if (!h) {
      try {
        h = homogeneous_set(f);
      } catch (const AmbiguousHomogeneous&) {
        throw PreconditionFailed(name + " has several homogeneous atoms; pass one explicitly");
      }
    }
    if (!h || h->size() < 2) throw PreconditionFailed(name + " has no homogeneous set");
    if (!h->is_subset_of(f.ground().all()) || !splits_cleanly(f, *h)) {
      throw PreconditionFailed("given set is not homogeneous for " + name);
    }
    const unsigned k = k_given ? *k_given : static_cast<unsigned>(ChainIndex(f).longest());
    require_saturated(f, k, options.checks, name);
    return split_small_large(f, *h);
  };
  const SplitFamily s1 = prepare(f1, options.h1, options.k1, "first family");
  const SplitFamily s2 = prepare(f2, options.h2, options.k2, "second family");

  const std::size_t n1 = f1.n();
  const std::size_t n = n1 + f2.n();
  if (n > kCapacity) throw CapacityError("combined ground set exceeds capacity");
  std::vector<SetWord> sets;
  sets.reserve(s1.small.size() * s2.small.size() + s1.large.size() * s2.large.size());
  for (SetWord a : s1.small)
    for (SetWord b : s2.small) sets.push_back(a | shift(b, n1));
  for (SetWord a : s1.large)
    for (SetWord b : s2.large) sets.push_back(a | shift(b, n1));
  return Family(GroundSet(n), std::move(sets));
}

EpsilonShape epsilon_shape(unsigned k) {
  if (k < 6) throw BadParams("pipeline needs k >= 6");
  return {(k - 2) / 4, (k - 2) % 4};
}

Family epsilon_pipeline(unsigned k) {
  const EpsilonShape shape = epsilon_shape(k);
  const Family six = six_sperner(8);
  const SetWord six_h = SetWord::range(6, 8);
  Family acc = six;
  SetWord acc_h = six_h;
  for (unsigned i = 1; i < shape.j; ++i) {
    const std::size_t offset = acc.n();
    acc = combine(acc, six,
                  {.h1 = acc_h, .h2 = six_h, .k1 = 4 * i + 2, .k2 = 6, .checks = Checks::trust});
    acc_h = acc_h | SetWord(six_h.bits() << offset);
  }
  for (unsigned i = 0; i < shape.s; ++i) acc = doubled(acc, 4 * shape.j + 2 + i + 1, Checks::trust);
  return acc;
}

CambridgeFixture cambridge_fixture() {
  enum : unsigned { x1 = 0, x2 = 1, x3 = 2, y1 = 3, y2 = 4, y3 = 5 };
  const GroundSet ground(6);
  const unsigned xs[3] = {x1, x2, x3};
  const unsigned ys[3] = {y1, y2, y3};

  std::vector<SetWord> b0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) b0.push_back(SetWord::of({xs[i], xs[j]}));
  for (int i = 0; i < 3; ++i) b0.push_back(SetWord::of({xs[i], ys[i]}));
  // {x_k, y_i, y_j} with i, j, k distinct.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) b0.push_back(SetWord::of({xs[3 - i - j], ys[i], ys[j]}));
  b0.push_back(SetWord::of({y1, y2, y3}));

  const std::vector<SetWord> b1 = {
      SetWord::of({x1, x2, x3}),     SetWord::of({x1, x2, y1}),     SetWord::of({x1, x3, y3}),
      SetWord::of({x2, x3, y2}),     SetWord::of({x1, y1, y3}),     SetWord::of({x2, y1, y2}),
      SetWord::of({x3, y2, y3}),     SetWord::of({x1, x2, y2, y3}), SetWord::of({x1, x3, y1, y2}),
      SetWord::of({x2, x3, y1, y3}),
  };
  CambridgeFixture out{Family::strict(ground, b0), Family::strict(ground, b1), Family(ground)};
  out.f = out.b0.merged(out.b1);
  return out;
}

Family normalize_top_bottom(const Family& f, unsigned k, Checks checks) {
  // k = 1 cannot hold both the empty set and X.
  if (k < 2) throw BadParams("normalisation needs k >= 2");
  require_saturated(f, k, checks, "input");
  if (f.empty()) throw PreconditionFailed("input is empty");
  const LayerSequence layers = canonical_decomposition(f);
  const std::size_t last = std::min<std::size_t>(k, layers.size()) - 1;
  std::vector<SetWord> sets{SetWord{}, f.ground().all()};
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i == 0 || i == last) continue;
    for (SetWord s : layers[i]) sets.push_back(s);
  }
  return Family(f.ground(), std::move(sets));
}

namespace {

void require_transfer_block(const Family& f, SetWord h) {
  if (h.size() < 2) throw PreconditionFailed("homogeneous set needs at least two elements");
  if (!h.is_subset_of(f.ground().all())) throw PreconditionFailed("homogeneous set exceeds the ground set");
  if (!splits_cleanly(f, h)) throw PreconditionFailed("given set is not homogeneous for the family");
}

}  // namespace

Family shrink_ground(const Family& f, SetWord h) {
  require_transfer_block(f, h);
  const unsigned x1 = h.lowest();
  std::vector<SetWord> sets;
  sets.reserve(f.size());
  for (SetWord s : f) sets.push_back(squeeze_out(s, x1));
  return Family(GroundSet(f.n() - 1), std::move(sets));
}

Family grow_ground(const Family& f, SetWord h) {
  require_transfer_block(f, h);
  if (f.n() + 1 > kCapacity) throw CapacityError("grown ground set exceeds capacity");
  const auto x2 = static_cast<unsigned>(f.n());
  std::vector<SetWord> sets;
  sets.reserve(f.size());
  for (SetWord s : f) sets.push_back(h.is_subset_of(s) ? s.with(x2) : s);
  return Family(GroundSet(f.n() + 1), std::move(sets));
}

}  // namespace sperner
