#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autcode {

/// A permutation of the coordinates {0, ..., n-1}.
///
/// Text forms are 1-indexed: cycle notation "(1,2,3)(4,5)" with fixed points omitted,
/// or a whitespace-separated image list "2 3 1 5 4".
///
/// Composition is left to right: compose(a, b) applies a first, then b. Together with
/// the action in action.hpp this makes v^(ab) = (v^a)^b.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `image` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t degree);
  /// Builds from 0-indexed cycles; omitted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Cycles of length >= 2, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::size_t fixed_points() const;

  /// Cycle notation, 1-indexed; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Applies `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// tau^sigma = sigma^-1 tau sigma.
Permutation conjugate(const Permutation& tau, const Permutation& sigma);
bool commute(const Permutation& a, const Permutation& b);

/// Cycle profile of a permutation of order p (prime form p-(c,f)) or of order dividing
/// p*q (composite form pq-(a,b,c;f), with a p-cycles, b q-cycles, c pq-cycles).
struct CycleType {
  unsigned p = 0;
  unsigned q = 0;  // 0 for the prime form
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t f = 0;

  static CycleType prime(unsigned p, std::size_t cycles, std::size_t fixed) {
    return CycleType{p, 0, 0, 0, cycles, fixed};
  }
  static CycleType composite(unsigned p, unsigned q, std::size_t a, std::size_t b, std::size_t c,
                             std::size_t f) {
    return CycleType{p, q, a, b, c, f};
  }

  bool is_composite() const { return q != 0; }
  std::size_t degree() const {
    return is_composite() ? p * a + q * b + static_cast<std::size_t>(p) * q * c + f : p * c + f;
  }
  /// "3-(8,0)" or "6-(0,0,1;0)".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Prime-form type. The identity reports p-(0,n). Throws CycleTypeError when the order
/// is neither 1 nor p.
CycleType cycle_type(const Permutation& sigma, unsigned p);
/// Composite-form type for distinct primes p, q; throws CycleTypeError when some cycle
/// length is not in {1, p, q, pq}.
CycleType cycle_type(const Permutation& sigma, unsigned p, unsigned q);

bool is_prime(std::uint64_t n);

}  // namespace autcode
