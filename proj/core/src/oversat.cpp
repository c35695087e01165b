#include "sperner/oversat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "sperner/errors.hpp"
#include "sperner/random.hpp"
#include "sperner/verify.hpp"

namespace sperner {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i < r; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

FunProfile FunProfile::paper() { return FunProfile{.name = ProfileName::paper}; }
FunProfile FunProfile::desk() { return FunProfile{.name = ProfileName::desk}; }

namespace {

std::uint64_t ceil_to_u64(double x) {
  if (x >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(x));
}

double half_power(unsigned k) { return std::exp2(static_cast<double>(k) / 2.0); }

}  // namespace

std::uint64_t FunProfile::f_target(unsigned k) const {
  if (name == ProfileName::paper) return ceil_to_u64(8.0 * std::exp(8.0) * k * k * half_power(k));
  return ceil_to_u64(4.0 * half_power(k));
}

std::uint64_t FunProfile::g_target(unsigned k) const {
  if (name == ProfileName::paper) return ceil_to_u64(std::exp(2.0) * k * k * half_power(k));
  return ceil_to_u64(4.0 * half_power(k));
}

std::uint64_t FunProfile::case1_g_target(unsigned k) const {
  // Both profiles use the paper-sized Case 1 collection; the desk profile may
  // not exceed it.
  return ceil_to_u64(half_power(k));
}

std::string to_string(ProfileName p) { return p == ProfileName::paper ? "paper" : "desk"; }

std::string to_string(FunCase c) {
  switch (c) {
    case FunCase::case1:
      return "case1";
    case FunCase::case2:
      return "case2";
    case FunCase::mirrored:
      return "mirrored";
  }
  return "?";
}

std::string to_string(CoverCheck c) { return c == CoverCheck::exhaustive ? "exhaustive" : "sampled"; }

long fun_exponent_raw(unsigned k, unsigned t) {
  const double n = static_cast<double>(k) * k + k;
  const double p = t / n;
  if (p >= 1.0) return static_cast<long>(k);
  // log(sqrt 2) / log(p) = 0.5 / log2(p); the epsilon absorbs rounding at exact integers.
  const double value = -static_cast<double>(k) * 0.5 / std::log2(p) + 1.0;
  return static_cast<long>(std::floor(value + 1e-9));
}

unsigned fun_exponent(unsigned k, unsigned t) {
  long a = fun_exponent_raw(k, t);
  const long lo = k >= 2 ? 1 : 0;
  const long hi = k >= 2 ? static_cast<long>(k) - 1 : 0;
  a = std::clamp(a, lo, hi);
  a = std::min<long>(a, static_cast<long>(t) - 1);
  return static_cast<unsigned>(std::max<long>(a, 0));
}

FunCase fun_case(unsigned k, unsigned t) {
  const unsigned n = k * k + k;
  if (t > n / 2) return FunCase::mirrored;
  if (t <= n / 8) return FunCase::case1;
  return FunCase::case2;
}

namespace {

// Calls fn on every r-subset of `within`, in lexicographic order of indices.
template <typename Fn>
void for_each_subset(SetWord within, std::size_t r, Fn&& fn) {
  const std::vector<unsigned> elems = within.elements();
  const std::size_t m = elems.size();
  if (r > m) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    SetWord s;
    for (std::size_t i : idx) s = s.with(elems[i]);
    fn(s);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Colex rank of a set among the sets of its size.
std::uint64_t colex_rank(SetWord s) {
  std::uint64_t rank = 0;
  std::uint64_t i = 1;
  for (unsigned e : s.elements()) rank += binomial(e, i++);
  return rank;
}

Family sample_distinct(Rng& rng, std::size_t n, std::size_t size, std::uint64_t target) {
  const GroundSet ground(n);
  const std::uint64_t total = binomial(n, size);
  const std::uint64_t m = std::min(target, total);
  std::vector<SetWord> sets;
  constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 22;
  if (m == total || (2 * m >= total && total <= kEnumerateLimit)) {
    sets.reserve(total);
    for_each_subset(ground.all(), size, [&](SetWord s) { sets.push_back(s); });
    if (m < total) {
      rng.shuffle(sets);
      sets.resize(m);
    }
  } else {
    std::unordered_set<SetWord, SetWordHash> seen;
    while (sets.size() < m) {
      const SetWord s = rng.subset_of_size(n, size);
      if (seen.insert(s).second) sets.push_back(s);
    }
  }
  return Family(ground, std::move(sets));
}

bool covers_contain(const Family& f_t, SetWord s) {
  return std::any_of(f_t.begin(), f_t.end(), [s](SetWord f) { return f.is_proper_subset_of(s); });
}

bool covers_disjoint(const Family& g_t, SetWord s) {
  return std::any_of(g_t.begin(), g_t.end(), [s](SetWord g) { return !g.intersects(s); });
}

std::optional<SetWord> find_uncovered_sampled(Rng& rng, std::size_t n, unsigned t, const Family& f_t,
                                              const Family& g_t, std::uint64_t samples) {
  for (std::uint64_t i = 0; i < samples; ++i) {
    const SetWord s = rng.subset_of_size(n, t);
    if (!covers_contain(f_t, s) || !covers_disjoint(g_t, s)) return s;
  }
  return std::nullopt;
}

enum class CoverMode { contain, disjoint };

// Greedily extends `start` with size-`size` sets until every t-set is covered:
// in contain mode a candidate covers the t-sets strictly containing it, in
// disjoint mode the t-sets avoiding it. Each step adds the candidate covering
// the most uncovered t-sets, lowest colex rank first among ties.
Family greedy_cover(std::size_t n, unsigned t, std::size_t size, CoverMode mode, const Family& start) {
  const SetWord all = SetWord::full(n);
  std::vector<bool> covered(binomial(n, t), false);
  std::uint64_t remaining = covered.size();
  const std::uint64_t per_candidate =
      mode == CoverMode::contain ? binomial(n - size, t - size) : binomial(n - size, t);
  std::vector<std::uint64_t> count(binomial(n, size), per_candidate);

  const auto mark = [&](SetWord s) {
    auto slot = covered[colex_rank(s)];
    if (slot) return;
    slot = true;
    --remaining;
    const SetWord pool = mode == CoverMode::contain ? s : all - s;
    for_each_subset(pool, size, [&](SetWord c) { --count[colex_rank(c)]; });
  };
  const auto take = [&](SetWord c) {
    if (mode == CoverMode::contain) {
      for_each_subset(all - c, t - size, [&](SetWord rest) { mark(c | rest); });
    } else {
      for_each_subset(all - c, t, mark);
    }
  };

  std::vector<SetWord> chosen(start.begin(), start.end());
  for (SetWord c : start) take(c);
  std::vector<SetWord> by_rank(count.size());
  for_each_subset(all, size, [&](SetWord c) { by_rank[colex_rank(c)] = c; });
  while (remaining > 0) {
    const auto best = std::max_element(count.begin(), count.end());
    if (*best == 0) throw std::logic_error("greedy cover stalled");
    const SetWord c = by_rank[static_cast<std::size_t>(best - count.begin())];
    chosen.push_back(c);
    take(c);
  }
  return Family(GroundSet(n), std::move(chosen));
}

}  // namespace

std::optional<SetWord> find_uncovered(std::size_t n, unsigned t, const Family& f_t, const Family& g_t) {
  std::optional<SetWord> miss;
  for_each_subset(SetWord::full(n), t, [&](SetWord s) {
    if (!miss && (!covers_contain(f_t, s) || !covers_disjoint(g_t, s))) miss = s;
  });
  return miss;
}

FunCollections lemma_fun_collections(unsigned k, unsigned t, const FunProfile& profile, std::uint64_t seed) {
  if (k == 0) throw BadParams("k must be positive");
  const std::size_t n = static_cast<std::size_t>(k) * k + k;
  if (n > kCapacity) throw CapacityError("k^2 + k exceeds capacity");
  if (t < 1 || t > n) throw BadParams("t must lie in [1, k^2 + k]");

  const FunCase which = fun_case(k, t);
  if (t == n) {
    // Mirror of the empty t: k-sets below X, and the empty set as the disjoint partner.
    FunCollections out;
    out.t = t;
    out.case_tag = FunCase::mirrored;
    out.check = CoverCheck::exhaustive;
    out.attempts = 1;
    Rng rng = Rng::substream(seed, 0);
    out.f_t = sample_distinct(rng, n, k, profile.case1_g_target(k));
    out.g_t = Family(GroundSet(n), {SetWord{}});
    if (find_uncovered(n, t, out.f_t, out.g_t)) throw std::logic_error("full set left uncovered");
    out.verified = true;
    return out;
  }
  if (which == FunCase::mirrored) {
    FunCollections base = lemma_fun_collections(k, static_cast<unsigned>(n - t), profile, seed);
    std::swap(base.f_t, base.g_t);
    base.t = t;
    base.case_tag = FunCase::mirrored;
    return base;
  }

  FunCollections out;
  out.t = t;
  out.case_tag = which;
  std::size_t f_size = 0;
  std::size_t g_size = k;
  std::uint64_t f_target = 1;
  std::uint64_t g_target = profile.case1_g_target(k);
  if (which == FunCase::case2) {
    const unsigned a = fun_exponent(k, t);
    out.a_k = a;
    f_size = a;
    g_size = k - a;
    f_target = profile.f_target(k);
    g_target = profile.g_target(k);
  }
  if (f_size + g_size < k) throw std::logic_error("collection sizes violate |F| + |G| >= k");

  const bool exhaustive = binomial(n, t) <= profile.verify_budget;
  out.check = exhaustive ? CoverCheck::exhaustive : CoverCheck::sampled;
  Rng rng = Rng::substream(seed, t);
  std::optional<SetWord> miss;
  for (unsigned attempt = 1; attempt <= std::max(1U, profile.retries); ++attempt) {
    out.attempts = attempt;
    out.f_t = which == FunCase::case1 ? Family(GroundSet(n), {SetWord{}}) : sample_distinct(rng, n, f_size, f_target);
    out.g_t = sample_distinct(rng, n, g_size, g_target);
    miss = exhaustive ? find_uncovered(n, t, out.f_t, out.g_t)
                      : find_uncovered_sampled(rng, n, t, out.f_t, out.g_t, profile.sample_count);
    if (!miss) {
      out.verified = true;
      return out;
    }
  }

  // Deterministic repair of the last draw, when the t-sets are few enough to enumerate.
  const auto work = [&](std::size_t size, std::uint64_t pool) {
    return binomial(n, size) <= profile.verify_budget &&
           binomial(n, t) / 64 <= profile.verify_budget / std::max<std::uint64_t>(1, binomial(pool, size));
  };
  if (exhaustive && work(f_size, t) && work(g_size, n - t)) {
    if (which == FunCase::case2) out.f_t = greedy_cover(n, t, f_size, CoverMode::contain, out.f_t);
    out.g_t = greedy_cover(n, t, g_size, CoverMode::disjoint, out.g_t);
    out.greedy_fallback = true;
    if (find_uncovered(n, t, out.f_t, out.g_t)) throw std::logic_error("greedy cover left a t-set uncovered");
    out.verified = true;
    return out;
  }
  throw RetriesExhausted("no draw for t=" + std::to_string(t) + " covered every t-set after " +
                             std::to_string(profile.retries) + " attempts",
                         miss);
}

Family chain_padding(SetWord f, unsigned k, std::size_t n) {
  if (k == 0) throw BadParams("k must be positive");
  const std::size_t i = std::min<std::size_t>(k - 1, f.size());
  std::vector<SetWord> chain{f};
  SetWord cur = f;
  for (std::size_t j = 0; j < i; ++j) {
    cur = cur.without(cur.highest());
    chain.push_back(cur);
  }
  return Family(GroundSet(n), std::move(chain));
}

std::vector<std::string> OversatConstruction::metadata() const {
  std::vector<std::string> lines;
  lines.push_back("# oversat k=" + std::to_string(k) + " profile=" + to_string(profile) +
                  " seed=" + std::to_string(seed) + " size=" + std::to_string(family.size()));
  for (const FunCollections& c : per_t) {
    lines.push_back("# t=" + std::to_string(c.t) + " case=" + to_string(c.case_tag) +
                    " a_k=" + (c.a_k ? std::to_string(*c.a_k) : std::string("-")) +
                    " f_t=" + std::to_string(c.f_t.size()) + " g_t=" + std::to_string(c.g_t.size()) +
                    " check=" + to_string(c.check) + " verified=" + (c.verified ? "yes" : "no") +
                    " attempts=" + std::to_string(c.attempts) + " fallback=" + (c.greedy_fallback ? "greedy" : "no"));
  }
  return lines;
}

OversatConstruction oversat_construction(unsigned k, const FunProfile& profile, std::uint64_t seed) {
  if (k == 0) throw BadParams("k must be positive");
  const std::size_t n = static_cast<std::size_t>(k) * k + k;
  if (n > kCapacity) throw CapacityError("k^2 + k exceeds capacity");
  OversatConstruction out;
  out.profile = profile.name;
  out.seed = seed;
  out.k = k;
  out.per_t.reserve(n);
  std::vector<SetWord> sets;
  for (unsigned t = 1; t <= n; ++t) {
    FunCollections c;
    if (fun_case(k, t) == FunCase::mirrored && t < n) {
      c = out.per_t[n - t - 1];
      std::swap(c.f_t, c.g_t);
      c.t = t;
      c.case_tag = FunCase::mirrored;
    } else {
      c = lemma_fun_collections(k, t, profile, seed);
    }
    for (SetWord f : c.f_t)
      for (SetWord s : chain_padding(f, k, n)) sets.push_back(s);
    for (SetWord g : c.g_t)
      for (SetWord s : chain_padding(g, k, n)) sets.push_back(s.complement(n));
    out.per_t.push_back(std::move(c));
  }
  out.family = Family(GroundSet(n), std::move(sets));
  return out;
}

Family extend_oversat(const Family& g, unsigned extra, unsigned k, Checks checks) {
  if (extra == 0) throw BadParams("extend by at least one element");
  const std::size_t n = g.n() + extra;
  if (n > kCapacity) throw CapacityError("extended ground set exceeds capacity");
  if (checks == Checks::verify && g.n() <= kDefaultMaxN && !is_oversaturated(g, k).verdict) {
    throw PreconditionFailed("input is not an oversaturated " + std::to_string(k) + "-Sperner system");
  }
  const SetWord h = SetWord::range(g.n(), n);
  std::vector<SetWord> sets;
  sets.reserve(2 * g.size());
  for (SetWord s : g) {
    sets.push_back(s);
    sets.push_back(s | h);
  }
  return Family(GroundSet(n), std::move(sets));
}

}  // namespace sperner
