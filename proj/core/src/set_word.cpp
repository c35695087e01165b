#include "sperner/set_word.hpp"

#include "sperner/errors.hpp"

namespace sperner {

namespace {

SetWord from_range(auto&& elements) {
  SetWord s;
  for (unsigned e : elements) {
    if (e >= kCapacity) throw CapacityError("element " + std::to_string(e) + " exceeds capacity");
    s = s.with(e);
  }
  return s;
}

}  // namespace

SetWord SetWord::of(std::initializer_list<unsigned> elements) { return from_range(elements); }
SetWord SetWord::of(std::span<const unsigned> elements) { return from_range(elements); }

unsigned SetWord::lowest() const {
  if (low64() != 0) return static_cast<unsigned>(__builtin_ctzll(low64()));
  return 64 + static_cast<unsigned>(__builtin_ctzll(high64()));
}

unsigned SetWord::highest() const {
  if (high64() != 0) return 127 - static_cast<unsigned>(__builtin_clzll(high64()));
  return 63 - static_cast<unsigned>(__builtin_clzll(low64()));
}

std::vector<unsigned> SetWord::elements() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (std::uint64_t w = low64(); w != 0; w &= w - 1) out.push_back(static_cast<unsigned>(__builtin_ctzll(w)));
  for (std::uint64_t w = high64(); w != 0; w &= w - 1)
    out.push_back(64 + static_cast<unsigned>(__builtin_ctzll(w)));
  return out;
}

std::string to_string(SetWord s) {
  if (s.empty()) return "-";
  std::string out;
  for (unsigned e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

}  // namespace sperner
