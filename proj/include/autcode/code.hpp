#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "autcode/bitvector.hpp"

namespace autcode {

/// A linear subspace of GF(2)^n, stored as its reduced row-echelon basis.
///
/// Pivot columns increase strictly with the row index, and every pivot column is
/// zero in all other rows. The canonical basis is unique, so two codes are equal
/// exactly when their stored bases are equal.
class BinaryCode {
 public:
  BinaryCode() = default;
  /// The zero code of the given length.
  explicit BinaryCode(std::size_t length) : length_(length) {}

  /// Canonical span of `rows`; zero and dependent rows are discarded.
  static BinaryCode span(std::size_t length, std::span<const BitVector> rows);
  static BinaryCode full(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of `v` after clearing every pivot column with basis rows.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const;
  /// True when `sub` is a subcode.
  bool contains(const BinaryCode& sub) const;
  /// Codeword whose coordinates in the basis are given by `coeffs` (length = dimension()).
  BitVector combine(const BitVector& coeffs) const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

BinaryCode rref(std::size_t length, std::span<const BitVector> rows);

BinaryCode dual(const BinaryCode& code);

BinaryCode code_sum(const BinaryCode& a, const BinaryCode& b);
/// Intersection via the kernel of the stacked map (x, y) -> x + y on a x b.
BinaryCode intersection(const BinaryCode& a, const BinaryCode& b);
bool is_direct_sum(const BinaryCode& a, const BinaryCode& b);

/// All coefficient vectors `l` with sum_i l_i * images[i] = 0, as a basis of that kernel.
/// Every image must have the same length.
std::vector<BitVector> kernel_combinations(std::span<const BitVector> images);

/// {c in code : f(c) = 0} for a linear map f given on vectors.
template <class LinearMap>
BinaryCode kernel_subcode(const BinaryCode& code, LinearMap&& f) {
  std::vector<BitVector> images;
  images.reserve(code.dimension());
  for (const auto& row : code.basis()) images.push_back(f(row));
  std::vector<BitVector> members;
  for (const auto& combo : kernel_combinations(images)) members.push_back(code.combine(combo));
  return BinaryCode::span(code.length(), members);
}

/// Image of a code under a linear map into GF(2)^out_length.
template <class LinearMap>
BinaryCode image_code(const BinaryCode& code, std::size_t out_length, LinearMap&& f) {
  std::vector<BitVector> images;
  images.reserve(code.dimension());
  for (const auto& row : code.basis()) images.push_back(f(row));
  return BinaryCode::span(out_length, images);
}

inline constexpr std::size_t kDefaultEnumerationCap = 28;

/// Minimum nonzero weight by exhaustive enumeration of all 2^k codewords.
/// Throws DomainError for the zero code and CapacityError when k > cap.
std::size_t min_distance(const BinaryCode& code, std::size_t cap = kDefaultEnumerationCap);

/// Coefficients A_0..A_n of the weight enumerator.
std::vector<std::uint64_t> weight_enumerator(const BinaryCode& code,
                                             std::size_t cap = kDefaultEnumerationCap);

/// Deletes the given (0-indexed) coordinates.
BinaryCode puncture(const BinaryCode& code, std::span<const std::size_t> positions);

struct SelfDuality {
  bool self_orthogonal = false;
  bool self_dual = false;
};
SelfDuality self_duality(const BinaryCode& code);

inline bool is_self_dual(const BinaryCode& code) { return self_duality(code).self_dual; }

}  // namespace autcode
