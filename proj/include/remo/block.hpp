#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace remo {

// Hard ceiling on ground-set size; every block fits a 32-bit mask and the
// building-set lookup table has 2^n entries.
inline constexpr int kMaxGround = 12;

// A subset of the ground set, stored as a bitmask over ground positions.
//
// Blocks are totally ordered lexicographically by their sorted member lists,
// so {1} < {1,2} < {1,2,3} < {1,3} < {2}. Every sorted container in the
// library uses this order, which keeps enumeration output reproducible.
class Block {
 public:
  using Mask = std::uint32_t;

  constexpr Block() = default;
  constexpr explicit Block(Mask bits) : bits_(bits) {}

  static constexpr Block singleton(int i) { return Block(Mask{1} << i); }
  static constexpr Block full(int n) { return Block((Mask{1} << n) - 1); }
  static Block from_indices(std::span<const int> indices);

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Block other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(Block other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(Block other) const { return (bits_ & other.bits_) != 0; }
  // Lowest member position; undefined on the empty block.
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (Mask m = bits_; m != 0; m &= m - 1) f(std::countr_zero(m));
  }

  friend constexpr Block operator|(Block a, Block b) { return Block(a.bits_ | b.bits_); }
  friend constexpr Block operator&(Block a, Block b) { return Block(a.bits_ & b.bits_); }
  friend constexpr Block operator-(Block a, Block b) { return Block(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Block a, Block b) = default;

  friend constexpr std::strong_ordering operator<=>(Block a, Block b) {
    const Mask diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // Both member lists agree below the lowest differing position d. The list
    // holding d is smaller unless the other list stops before d.
    const Mask low = diff & (~diff + 1);
    const Mask above = ~((low << 1) - 1);
    if (a.bits_ & low) {
      return (b.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  Mask bits_ = 0;
};

struct BlockHash {
  std::size_t operator()(Block b) const noexcept { return std::hash<Block::Mask>{}(b.bits()); }
};

// Ordered list of distinct element names. Position in the list is the
// coordinate index used by blocks and points everywhere downstream.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  // Ground set {1, ..., n} named by decimal strings.
  static GroundSet range(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  Block full() const { return Block::full(size()); }

  // Position of a name; throws ElementNotInGround.
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  Block block_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Block b) const;
  std::string format(Block b) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace remo
