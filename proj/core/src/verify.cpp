#include "sperner/verify.hpp"

#include <stdexcept>

#include "sperner/errors.hpp"
#include "sperner/lattice.hpp"
#include "sperner/random.hpp"

namespace sperner {

std::optional<SetWord> VerifyReport::witness_set() const {
  if (witness && std::holds_alternative<SetWord>(*witness)) return std::get<SetWord>(*witness);
  return std::nullopt;
}

std::optional<Chain> VerifyReport::witness_chain() const {
  if (witness && std::holds_alternative<Chain>(*witness)) return std::get<Chain>(*witness);
  return std::nullopt;
}

namespace {

void require_positive(unsigned k) {
  if (k == 0) throw BadParams("k must be positive");
}

bool is_chain_in(const Family& f, const Chain& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!f.contains(chain[i])) return false;
    if (i > 0 && !chain[i - 1].is_proper_subset_of(chain[i])) return false;
  }
  return true;
}

// Shared sweep for saturation and oversaturation: look for the canonically
// lowest absent set that does not complete a (k+1)-chain.
VerifyReport sweep_for_gap(const Family& f, unsigned k, const SweepOptions& options) {
  VerifyReport report;
  std::optional<SetWord> worst;
  if (options.samples) {
    report.exhaustive = false;
    const ChainIndex index(f);
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < *options.samples; ++i) {
      const std::size_t size = rng.below(f.n() + 1);
      const SetWord s = rng.subset_of_size(f.n(), size);
      ++report.subsets_checked;
      if (f.contains(s)) continue;
      if (index.below(s) + index.above(s) < k && (!worst || s < *worst)) worst = s;
    }
  } else {
    const SubsetSweep sweep(f, options.max_n);
    const std::uint64_t total = sweep.subset_count();
    for (std::uint64_t s = 0; s < total; ++s) {
      if (sweep.member(s)) continue;
      if (sweep.below(s) + sweep.above(s) < k) {
        const SetWord candidate(static_cast<SetWord::Bits>(s));
        if (!worst || candidate < *worst) worst = candidate;
      }
    }
    report.subsets_checked = total;
  }
  if (worst) {
    if (completes_chain(f, *worst, k)) throw std::logic_error("witness failed re-validation");
    report.verdict = false;
    report.witness = *worst;
  }
  return report;
}

}  // namespace

bool completes_chain(const Family& f, SetWord s, unsigned k) {
  if (f.contains(s)) return true;
  return longest_chain_below(f, s) + longest_chain_above(f, s) >= k;
}

VerifyReport is_k_sperner(const Family& f, unsigned k) {
  require_positive(k);
  VerifyReport report;
  report.subsets_checked = f.size();
  const ChainIndex index(f);
  if (index.longest() > k) {
    Chain chain = index.longest_chain();
    chain.resize(k + 1);
    if (!is_chain_in(f, chain)) throw std::logic_error("chain witness failed re-validation");
    report.verdict = false;
    report.witness = std::move(chain);
  }
  return report;
}

VerifyReport is_saturated(const Family& f, unsigned k, const SweepOptions& options) {
  VerifyReport sperner = is_k_sperner(f, k);
  if (!sperner.verdict) throw NotKSperner(*sperner.witness_chain());
  return sweep_for_gap(f, k, options);
}

VerifyReport is_oversaturated(const Family& f, unsigned k, const SweepOptions& options) {
  require_positive(k);
  return sweep_for_gap(f, k, options);
}

VerifyReport is_layered(const LayerSequence& seq) {
  VerifyReport report;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (SetWord d : seq[i]) {
      ++report.subsets_checked;
      bool ok = false;
      for (SetWord below : seq[i - 1]) {
        if (below.is_proper_subset_of(d)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        report.verdict = false;
        report.witness = d;
        return report;
      }
    }
  }
  return report;
}

VerifyReport check_between(const LayerSequence& seq, unsigned k) {
  require_positive(k);
  if (seq.size() != k) {
    throw BadParams("expected " + std::to_string(k) + " layers, got " + std::to_string(seq.size()));
  }
  VerifyReport report;
  if (seq.empty()) return report;
  const long n = static_cast<long>(seq[0].n());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const long lo = static_cast<long>(i);
    const long hi = n - static_cast<long>(k) + lo + 1;
    for (SetWord s : seq[i]) {
      ++report.subsets_checked;
      const long c = static_cast<long>(s.size());
      if (c < lo || c > hi) {
        report.verdict = false;
        report.witness = s;
        return report;
      }
    }
  }
  return report;
}

}  // namespace sperner
