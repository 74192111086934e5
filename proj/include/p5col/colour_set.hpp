#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace p5col {

/// Colours are 1-based; 0 never names a colour.
using Colour = int;

inline constexpr Colour kMaxColours = 63;

/// A subset of the colour universe {1..k}, stored as a bitmask.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  ColourSet(std::initializer_list<Colour> colours) {
    for (Colour c : colours) insert(c);
  }

  /// {1..k}
  static ColourSet range(int k) {
    if (k < 0 || k > kMaxColours) throw std::invalid_argument("colour universe size out of range");
    return from_mask((std::uint64_t{1} << k) - 1);
  }
  static constexpr ColourSet from_mask(std::uint64_t mask) {
    ColourSet s;
    s.mask_ = mask;
    return s;
  }

  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(Colour c) const { return c >= 1 && c <= kMaxColours && (mask_ >> (c - 1) & 1U); }
  /// Smallest member; 0 for the empty set.
  Colour front() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  void insert(Colour c) {
    if (c < 1 || c > kMaxColours) throw std::invalid_argument("colour " + std::to_string(c) + " out of range");
    mask_ |= std::uint64_t{1} << (c - 1);
  }
  void erase(Colour c) {
    if (c >= 1 && c <= kMaxColours) mask_ &= ~(std::uint64_t{1} << (c - 1));
  }

  bool is_subset_of(ColourSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(ColourSet other) const { return (mask_ & other.mask_) != 0; }

  friend ColourSet operator&(ColourSet a, ColourSet b) { return from_mask(a.mask_ & b.mask_); }
  friend ColourSet operator|(ColourSet a, ColourSet b) { return from_mask(a.mask_ | b.mask_); }
  friend ColourSet operator-(ColourSet a, ColourSet b) { return from_mask(a.mask_ & ~b.mask_); }
  ColourSet& operator&=(ColourSet o) { return *this = *this & o; }
  ColourSet& operator|=(ColourSet o) { return *this = *this | o; }
  ColourSet& operator-=(ColourSet o) { return *this = *this - o; }
  friend bool operator==(ColourSet, ColourSet) = default;

  /// Members in increasing order.
  std::vector<Colour> members() const {
    std::vector<Colour> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// Lexicographic order on the increasing member sequences, so
  /// {1,2} < {1,3} < {2,3}.
  friend bool lex_less(ColourSet a, ColourSet b) {
    // Both sequences agree below the smallest differing colour x. The one
    // holding x is smaller unless the other has no members past x, in which
    // case the other is a proper prefix.
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    const std::uint64_t lowest = diff & (~diff + 1);
    const std::uint64_t below = lowest - 1;
    if ((a.mask_ & lowest) != 0) return (b.mask_ & ~below) != 0;
    return (a.mask_ & ~below) == 0;
  }

  /// "{1,2,3}"
  std::string to_string() const;

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace p5col
