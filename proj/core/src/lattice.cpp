#include "sperner/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "sperner/errors.hpp"

namespace sperner {

std::uint64_t count_chains(const Family& f, std::size_t length) {
  if (length == 0) throw BadParams("chain length must be positive");
  const std::size_t m = f.size();
  if (length > m) return 0;
  // cur[j]: number of chains of the current length whose top is f[j].
  std::vector<std::uint64_t> cur(m, 1);
  std::vector<std::uint64_t> next(m);
  for (std::size_t level = 2; level <= length; ++level) {
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < j; ++i) {
        if (cur[i] != 0 && f[i].is_proper_subset_of(f[j])) {
          if (__builtin_add_overflow(total, cur[i], &total)) throw std::overflow_error("chain count overflow");
        }
      }
      next[j] = total;
    }
    std::swap(cur, next);
  }
  std::uint64_t result = 0;
  for (std::uint64_t c : cur) {
    if (__builtin_add_overflow(result, c, &result)) throw std::overflow_error("chain count overflow");
  }
  return result;
}

ChainIndex::ChainIndex(const Family& f) : family_(f), down_(f.size(), 1), up_(f.size(), 1) {
  const std::size_t m = f.size();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (f[i].is_proper_subset_of(f[j])) down_[j] = std::max(down_[j], down_[i] + 1);
    }
    longest_ = std::max(longest_, down_[j]);
  }
  for (std::size_t j = m; j-- > 0;) {
    for (std::size_t i = j + 1; i < m; ++i) {
      if (f[j].is_proper_subset_of(f[i])) up_[j] = std::max(up_[j], up_[i] + 1);
    }
  }
}

std::size_t ChainIndex::below(SetWord s) const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (family_[i].is_proper_subset_of(s)) best = std::max(best, down_[i]);
  }
  return best;
}

std::size_t ChainIndex::above(SetWord s) const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (s.is_proper_subset_of(family_[i])) best = std::max(best, up_[i]);
  }
  return best;
}

std::vector<SetWord> ChainIndex::descend_from(std::size_t top) const {
  std::vector<SetWord> chain{family_[top]};
  std::size_t cur = top;
  while (down_[cur] > 1) {
    for (std::size_t i = 0; i < cur; ++i) {
      if (down_[i] + 1 == down_[cur] && family_[i].is_proper_subset_of(family_[cur])) {
        cur = i;
        break;
      }
    }
    chain.push_back(family_[cur]);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<SetWord> ChainIndex::ascend_from(std::size_t bottom) const {
  std::vector<SetWord> chain{family_[bottom]};
  std::size_t cur = bottom;
  while (up_[cur] > 1) {
    for (std::size_t i = cur + 1; i < family_.size(); ++i) {
      if (up_[i] + 1 == up_[cur] && family_[cur].is_proper_subset_of(family_[i])) {
        cur = i;
        break;
      }
    }
    chain.push_back(family_[cur]);
  }
  return chain;
}

std::vector<SetWord> ChainIndex::longest_chain() const {
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (down_[i] == longest_) return descend_from(i);
  }
  return {};
}

std::vector<SetWord> ChainIndex::chain_below(SetWord s) const {
  const std::size_t target = below(s);
  if (target == 0) return {};
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (down_[i] == target && family_[i].is_proper_subset_of(s)) return descend_from(i);
  }
  return {};
}

std::vector<SetWord> ChainIndex::chain_above(SetWord s) const {
  const std::size_t target = above(s);
  if (target == 0) return {};
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (up_[i] == target && s.is_proper_subset_of(family_[i])) return ascend_from(i);
  }
  return {};
}

std::size_t longest_chain_below(const Family& f, SetWord s) {
  std::size_t best = 0;
  std::vector<std::size_t> down(f.size(), 1);
  for (std::size_t j = 0; j < f.size() && f[j].size() < s.size(); ++j) {
    if (!f[j].is_proper_subset_of(s)) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (f[i].is_proper_subset_of(f[j])) down[j] = std::max(down[j], down[i] + 1);
    }
    best = std::max(best, down[j]);
  }
  return best;
}

std::size_t longest_chain_above(const Family& f, SetWord s) { return ChainIndex(f).above(s); }

SubsetSweep::SubsetSweep(const Family& f, std::size_t max_n) : n_(f.n()) {
  constexpr std::size_t kHardLimit = 32;
  if (n_ > max_n || n_ > kHardLimit) {
    throw GroundSetTooLarge("exhaustive sweep over 2^" + std::to_string(n_) + " subsets refused (guard " +
                            std::to_string(std::min(max_n, kHardLimit)) + ")");
  }
  const std::uint64_t total = subset_count();
  member_.assign((total + 63) / 64, 0);
  for (SetWord s : f) {
    const std::uint64_t v = s.low64();
    member_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  below_.assign(total, 0);
  above_.assign(total, 0);
  // Proper subsets are numerically smaller, so an ascending pass sees them first.
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint8_t best = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      best = std::max(best, below_[s & ~(rest & -rest)]);
    }
    below_[s] = static_cast<std::uint8_t>(best + (member(s) ? 1 : 0));
  }
  const std::uint64_t all = total - 1;
  for (std::uint64_t s = total; s-- > 0;) {
    std::uint8_t best = 0;
    for (std::uint64_t rest = all & ~s; rest != 0; rest &= rest - 1) {
      best = std::max(best, above_[s | (rest & -rest)]);
    }
    above_[s] = static_cast<std::uint8_t>(best + (member(s) ? 1 : 0));
  }
}

AtomPartition atoms(const Family& f) {
  if (f.n() == 0) throw BadParams("atoms of an empty ground set");
  std::vector<SetWord> blocks{f.ground().all()};
  std::vector<SetWord> refined;
  for (SetWord s : f) {
    refined.clear();
    for (SetWord b : blocks) {
      const SetWord in = b & s;
      const SetWord out = b - s;
      if (!in.empty()) refined.push_back(in);
      if (!out.empty()) refined.push_back(out);
    }
    std::swap(blocks, refined);
  }
  std::sort(blocks.begin(), blocks.end(), [](SetWord a, SetWord b) { return a.lowest() < b.lowest(); });
  AtomPartition out;
  out.atoms = blocks;
  for (SetWord b : blocks)
    if (b.size() >= 2) out.homogeneous_atoms.push_back(b);
  return out;
}

std::optional<SetWord> homogeneous_set(const Family& f) {
  if (f.n() == 0) return std::nullopt;
  AtomPartition p = atoms(f);
  if (p.homogeneous_atoms.empty()) return std::nullopt;
  if (p.homogeneous_atoms.size() > 1) throw AmbiguousHomogeneous(std::move(p.homogeneous_atoms));
  return p.homogeneous_atoms.front();
}

bool splits_cleanly(const Family& f, SetWord h) {
  return std::all_of(f.begin(), f.end(), [h](SetWord s) {
    const SetWord meet = s & h;
    return meet.empty() || meet == h;
  });
}

SplitFamily split_small_large(const Family& f, SetWord h) {
  if (h.empty()) throw BadParams("homogeneous set must be nonempty");
  std::vector<SetWord> small;
  std::vector<SetWord> large;
  for (SetWord s : f) {
    const SetWord meet = s & h;
    if (meet.empty()) {
      small.push_back(s);
    } else if (meet == h) {
      large.push_back(s);
    } else {
      throw NotHomogeneous(s);
    }
  }
  return {Family(f.ground(), std::move(small)), Family(f.ground(), std::move(large)), h};
}

LayerSequence canonical_decomposition(const Family& f) {
  if (f.empty()) throw BadParams("canonical decomposition of an empty family");
  // The layer of A is one less than the longest chain ending at A.
  const ChainIndex index(f);
  std::vector<std::vector<SetWord>> layers(index.longest());
  for (std::size_t i = 0; i < f.size(); ++i) layers[index.ending_at(i) - 1].push_back(f[i]);
  std::vector<Family> out;
  out.reserve(layers.size());
  for (auto& layer : layers) out.emplace_back(f.ground(), std::move(layer));
  return LayerSequence(std::move(out));
}

Family complement_family(const Family& f) {
  std::vector<SetWord> sets;
  sets.reserve(f.size());
  for (SetWord s : f) sets.push_back(s.complement(f.n()));
  return Family(f.ground(), std::move(sets));
}

}  // namespace sperner
