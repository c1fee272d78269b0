#include "autcode/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "autcode/errors.hpp"

namespace autcode {

namespace {

// In-place Gauss-Jordan elimination restricted to the first `columns` coordinates.
// Returns the pivot column of each leading row; rows past the returned size are zero
// on those columns.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t found = rank;
    while (found < rows.size() && !rows[found].test(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

template <class Visit>
void for_each_codeword(const BinaryCode& code, Visit&& visit) {
  const std::size_t k = code.dimension();
  BitVector word(code.length());
  visit(word);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= code.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    visit(word);
  }
}

}  // namespace

BinaryCode BinaryCode::span(std::size_t length, std::span<const BitVector> rows) {
  std::vector<BitVector> work;
  work.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != length) {
      throw InputError("row of length " + std::to_string(row.size()) + " in a code of length " +
                       std::to_string(length));
    }
    if (row.any()) work.push_back(row);
  }
  BinaryCode code(length);
  code.pivots_ = eliminate(work, length);
  work.resize(code.pivots_.size());
  code.basis_ = std::move(work);
  return code;
}

BinaryCode BinaryCode::full(std::size_t length) {
  std::vector<BitVector> rows;
  rows.reserve(length);
  for (std::size_t i = 0; i < length; ++i) rows.push_back(BitVector::unit(length, i));
  return span(length, rows);
}

BitVector BinaryCode::reduce(BitVector v) const {
  if (v.size() != length_) throw InputError("vector length does not match code length");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (v.test(pivots_[r])) v ^= basis_[r];
  }
  return v;
}

bool BinaryCode::contains(const BitVector& v) const { return reduce(v).none(); }

bool BinaryCode::contains(const BinaryCode& sub) const {
  if (sub.length_ != length_) throw InputError("subcode test on codes of different lengths");
  return std::all_of(sub.basis_.begin(), sub.basis_.end(),
                     [&](const BitVector& row) { return contains(row); });
}

BitVector BinaryCode::combine(const BitVector& coeffs) const {
  if (coeffs.size() != basis_.size()) throw InputError("coefficient vector does not match dimension");
  BitVector word(length_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (coeffs.test(r)) word ^= basis_[r];
  }
  return word;
}

BinaryCode rref(std::size_t length, std::span<const BitVector> rows) {
  return BinaryCode::span(length, rows);
}

BinaryCode dual(const BinaryCode& code) {
  const std::size_t n = code.length();
  const auto& pivots = code.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  // For each free column j: e_j plus the pivot columns of rows that have bit j.
  std::vector<BitVector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BitVector v = BitVector::unit(n, j);
    for (std::size_t r = 0; r < code.dimension(); ++r) {
      if (code.basis()[r].test(j)) v.set(pivots[r]);
    }
    rows.push_back(std::move(v));
  }
  return BinaryCode::span(n, rows);
}

BinaryCode code_sum(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw InputError("sum of codes with different lengths");
  std::vector<BitVector> rows(a.basis());
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return BinaryCode::span(a.length(), rows);
}

BinaryCode intersection(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length()) throw InputError("intersection of codes with different lengths");
  // Combinations (x, y) with x.A + y.B = 0 give x.A in both codes.
  std::vector<BitVector> images(a.basis());
  images.insert(images.end(), b.basis().begin(), b.basis().end());
  std::vector<BitVector> members;
  const std::size_t ka = a.dimension();
  for (const auto& combo : kernel_combinations(images)) {
    BitVector coeffs(ka);
    for (std::size_t i = 0; i < ka; ++i) coeffs.set(i, combo.test(i));
    members.push_back(a.combine(coeffs));
  }
  return BinaryCode::span(a.length(), members);
}

bool is_direct_sum(const BinaryCode& a, const BinaryCode& b) {
  return intersection(a, b).dimension() == 0;
}

std::vector<BitVector> kernel_combinations(std::span<const BitVector> images) {
  if (images.empty()) return {};
  const std::size_t m = images.front().size();
  const std::size_t k = images.size();
  std::vector<BitVector> aug;
  aug.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (images[i].size() != m) throw InputError("kernel of images with mixed lengths");
    BitVector row(m + k);
    for (std::size_t j = 0; j < m; ++j) row.set(j, images[i].test(j));
    row.set(m + i);
    aug.push_back(std::move(row));
  }
  const auto rank = eliminate(aug, m).size();
  std::vector<BitVector> combos;
  for (std::size_t r = rank; r < k; ++r) {
    BitVector combo(k);
    for (std::size_t i = 0; i < k; ++i) combo.set(i, aug[r].test(m + i));
    combos.push_back(std::move(combo));
  }
  return combos;
}

std::size_t min_distance(const BinaryCode& code, std::size_t cap) {
  if (code.dimension() == 0) throw DomainError("minimum distance of the zero code is undefined");
  if (code.dimension() > cap || code.dimension() >= 63) {
    throw CapacityError("dimension " + std::to_string(code.dimension()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool first = true;
  for_each_codeword(code, [&](const BitVector& w) {
    if (first) {
      first = false;
      return;
    }
    best = std::min(best, w.weight());
  });
  return best;
}

std::vector<std::uint64_t> weight_enumerator(const BinaryCode& code, std::size_t cap) {
  if (code.dimension() > cap || code.dimension() >= 63) {
    throw CapacityError("dimension " + std::to_string(code.dimension()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> counts(code.length() + 1, 0);
  for_each_codeword(code, [&](const BitVector& w) { ++counts[w.weight()]; });
  return counts;
}

BinaryCode puncture(const BinaryCode& code, std::span<const std::size_t> positions) {
  const std::size_t n = code.length();
  std::vector<bool> drop(n, false);
  for (auto pos : positions) {
    if (pos >= n) throw InputError("puncture position " + std::to_string(pos + 1) + " out of range");
    drop[pos] = true;
  }
  const auto kept = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), false));
  std::vector<BitVector> rows;
  for (const auto& row : code.basis()) {
    BitVector v(kept);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (drop[i]) continue;
      v.set(j++, row.test(i));
    }
    rows.push_back(std::move(v));
  }
  return BinaryCode::span(kept, rows);
}

SelfDuality self_duality(const BinaryCode& code) {
  SelfDuality result;
  const auto& basis = code.basis();
  result.self_orthogonal = true;
  for (std::size_t i = 0; i < basis.size() && result.self_orthogonal; ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (basis[i].dot(basis[j])) {
        result.self_orthogonal = false;
        break;
      }
    }
  }
  result.self_dual = result.self_orthogonal && 2 * code.dimension() == code.length();
  return result;
}

}  // namespace autcode
