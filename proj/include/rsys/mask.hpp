#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "rsys/error.hpp"

namespace rsys {

// Widest supported background set. Encoder constructions add 2^|S| fresh
// symbols, so 128 bits covers |S| <= 6 with room to spare.
inline constexpr std::size_t kMaxSymbols = 128;

// Subset of a background set as a fixed-width bit vector. Bit i stands for
// the symbol at index i of the owning alphabet; the mask itself carries no
// alphabet, widths are checked where alphabets are known.
class StateMask {
public:
  constexpr StateMask() = default;

  static constexpr StateMask from_value(std::uint64_t bits) {
    StateMask m;
    m.words_[0] = bits;
    return m;
  }

  static constexpr StateMask single(std::size_t bit) {
    StateMask m;
    m.set(bit);
    return m;
  }

  // First `width` bits set.
  static constexpr StateMask universe(std::size_t width) {
    StateMask m;
    for (std::size_t b = 0; b < width; ++b) m.set(b);
    return m;
  }

  constexpr bool test(std::size_t bit) const {
    return bit < kMaxSymbols && (words_[bit >> 6] >> (bit & 63)) & 1;
  }

  constexpr StateMask& set(std::size_t bit) {
    if (bit >= kMaxSymbols) throw Error("mask bit out of range");
    words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    return *this;
  }

  constexpr StateMask& reset(std::size_t bit) {
    if (bit >= kMaxSymbols) throw Error("mask bit out of range");
    words_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
    return *this;
  }

  constexpr std::size_t count() const {
    return std::size_t(std::popcount(words_[0])) + std::size_t(std::popcount(words_[1]));
  }

  constexpr bool empty() const { return words_[0] == 0 && words_[1] == 0; }
  constexpr bool any() const { return !empty(); }

  // One past the highest set bit; 0 for the empty mask.
  constexpr std::size_t width() const {
    if (words_[1] != 0) return 128 - std::size_t(std::countl_zero(words_[1]));
    if (words_[0] != 0) return 64 - std::size_t(std::countl_zero(words_[0]));
    return 0;
  }

  // Numeric value of the mask; requires all set bits below 64. Used to
  // index function tables, whose domains are capped well under 64 symbols.
  std::uint64_t value() const {
    if (words_[1] != 0) throw Error("state mask too wide for numeric indexing");
    return words_[0];
  }

  constexpr bool subset_of(const StateMask& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  constexpr bool intersects(const StateMask& o) const {
    return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
  }

  // Lowest set bit at position >= from, or kMaxSymbols when none.
  constexpr std::size_t next_bit(std::size_t from) const {
    for (std::size_t w = from >> 6; w < 2; ++w) {
      std::uint64_t word = words_[w];
      if (w == (from >> 6)) word &= ~std::uint64_t{0} << (from & 63);
      if (word != 0) return w * 64 + std::size_t(std::countr_zero(word));
    }
    return kMaxSymbols;
  }

  friend constexpr StateMask operator|(StateMask a, const StateMask& b) {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }

  friend constexpr StateMask operator&(StateMask a, const StateMask& b) {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }

  // Set difference.
  friend constexpr StateMask operator-(StateMask a, const StateMask& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }

  constexpr StateMask& operator|=(const StateMask& b) { return *this = *this | b; }
  constexpr StateMask& operator&=(const StateMask& b) { return *this = *this & b; }
  constexpr StateMask& operator-=(const StateMask& b) { return *this = *this - b; }

  constexpr bool operator==(const StateMask&) const = default;

  constexpr std::strong_ordering operator<=>(const StateMask& o) const {
    if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
    return words_[0] <=> o.words_[0];
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

private:
  std::array<std::uint64_t, 2> words_{};
};

}  // namespace rsys

template <>
struct std::hash<rsys::StateMask> {
  std::size_t operator()(const rsys::StateMask& m) const noexcept {
    std::uint64_t h = m.word(0) * 0x9e3779b97f4a7c15ull;
    h ^= m.word(1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return std::size_t(h);
  }
};
