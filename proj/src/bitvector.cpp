#include "autcode/bitvector.hpp"

#include <bit>

#include "autcode/errors.hpp"

namespace autcode {

BitVector::BitVector(std::size_t length)
    : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) v.set(i);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::none() const {
  for (auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.length_ != length_) throw InputError("inner product of vectors with different lengths");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw InputError("sum of vectors with different lengths");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.length_ != length_) throw InputError("product of vectors with different lengths");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const std::uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff != 0) {
      const auto bit = std::countr_zero(diff);
      return ((a.words_[k] >> bit) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace autcode
