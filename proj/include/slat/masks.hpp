#pragma once

#include <bit>
#include <cstdint>

namespace slat {

// Subsets of a carrier with at most 64 elements are single machine words.
using Mask = std::uint64_t;

inline constexpr int max_elements = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask all_of(int n) {
  return n >= max_elements ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool has(Mask m, int i) { return (m >> i) & 1; }

inline constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline constexpr int count(Mask m) { return std::popcount(m); }

inline constexpr int lowest(Mask m) { return std::countr_zero(m); }

// Iterates set bits low to high: for (int i : bits(m)) ...
struct bits {
  Mask m;
  explicit constexpr bits(Mask mask) : m(mask) {}
  struct iterator {
    Mask rest;
    constexpr int operator*() const { return std::countr_zero(rest); }
    constexpr iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  constexpr iterator begin() const { return {m}; }
  constexpr iterator end() const { return {0}; }
};

}  // namespace slat
