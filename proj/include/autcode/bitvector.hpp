#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace autcode {

/// Packed vector over GF(2). Coordinates are 0-indexed; bits past size() are always zero.
class BitVector {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses a string of '0'/'1' characters; throws ParseError on anything else.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t length, std::size_t index);
  static BitVector ones(std::size_t length);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool none() const;
  bool any() const { return !none(); }
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t lowest_set() const;

  /// Standard GF(2) inner product.
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic on coordinates 0,1,2,... with 1 > 0.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace autcode
