#pragma once

// Fixed-width subsets of a finite ground set.
//
// A SetWord is a 128-bit membership vector; bit i set means element i is a
// member. Ordering is the canonical family order used everywhere in the
// library: ascending cardinality, ties broken by the numeric value of the bits.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sperner {

inline constexpr std::size_t kCapacity = 128;

class SetWord {
 public:
  using Bits = unsigned __int128;

  constexpr SetWord() = default;
  constexpr explicit SetWord(Bits bits) : bits_(bits) {}

  static SetWord of(std::initializer_list<unsigned> elements);
  static SetWord of(std::span<const unsigned> elements);
  static constexpr SetWord singleton(unsigned i) { return SetWord(Bits{1} << i); }
  // The first n elements {0, ..., n-1}.
  static constexpr SetWord full(std::size_t n) {
    if (n >= kCapacity) return SetWord(~Bits{0});
    return SetWord((Bits{1} << n) - 1);
  }
  // Elements [lo, hi).
  static constexpr SetWord range(std::size_t lo, std::size_t hi) {
    return SetWord(full(hi).bits_ & ~full(lo).bits_);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr std::uint64_t low64() const { return static_cast<std::uint64_t>(bits_); }
  constexpr std::uint64_t high64() const { return static_cast<std::uint64_t>(bits_ >> 64); }

  constexpr bool contains(unsigned i) const { return ((bits_ >> i) & 1U) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const {
    return static_cast<std::size_t>(__builtin_popcountll(low64()) + __builtin_popcountll(high64()));
  }
  // Index of the lowest / highest member; undefined on the empty set.
  unsigned lowest() const;
  unsigned highest() const;
  // Number of bit positions actually used (highest member + 1, or 0).
  std::size_t width() const { return empty() ? 0 : highest() + 1; }

  constexpr bool is_subset_of(SetWord other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(SetWord other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(SetWord other) const { return (bits_ & other.bits_) != 0; }

  constexpr SetWord with(unsigned i) const { return SetWord(bits_ | (Bits{1} << i)); }
  constexpr SetWord without(unsigned i) const { return SetWord(bits_ & ~(Bits{1} << i)); }

  constexpr SetWord operator|(SetWord o) const { return SetWord(bits_ | o.bits_); }
  constexpr SetWord operator&(SetWord o) const { return SetWord(bits_ & o.bits_); }
  constexpr SetWord operator^(SetWord o) const { return SetWord(bits_ ^ o.bits_); }
  // Set difference.
  constexpr SetWord operator-(SetWord o) const { return SetWord(bits_ & ~o.bits_); }
  SetWord& operator|=(SetWord o) {
    bits_ |= o.bits_;
    return *this;
  }

  // Complement relative to a ground set of size n.
  constexpr SetWord complement(std::size_t n) const { return SetWord(full(n).bits_ & ~bits_); }

  std::vector<unsigned> elements() const;

  constexpr bool operator==(const SetWord&) const = default;
  std::strong_ordering operator<=>(const SetWord& o) const {
    const auto a = size();
    const auto b = o.size();
    if (a != b) return a <=> b;
    if (bits_ == o.bits_) return std::strong_ordering::equal;
    return bits_ < o.bits_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Bits bits_ = 0;
};

struct SetWordHash {
  std::size_t operator()(SetWord s) const noexcept {
    std::uint64_t h = s.low64() * 0x9E3779B97F4A7C15ULL;
    h ^= s.high64() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// "-" for the empty set, otherwise ascending comma-separated indices.
std::string to_string(SetWord s);

}  // namespace sperner
