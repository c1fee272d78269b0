#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "autcode/code.hpp"
#include "autcode/cyclotomic.hpp"

namespace autcode {

using QVector = std::vector<QuotientPoly>;

/// Coordinates i*p .. i*p+p-1 of the flat vector hold the coefficients of entry i.
BitVector flatten(const QVector& v, unsigned p);
QVector unflatten(const BitVector& flat, unsigned p);

/// An F2-linear subspace of Q^c, Q = F2[x]/(x^p+1), stored through its binary image in
/// GF(2)^(pc). Canonical like BinaryCode, so equality is subspace equality.
class IdealCode {
 public:
  IdealCode() = default;
  IdealCode(unsigned p, std::size_t coords, BinaryCode flat);
  /// F2-span of the given vectors.
  static IdealCode span(unsigned p, std::size_t coords, std::span<const QVector> vectors);

  unsigned p() const { return p_; }
  std::size_t coords() const { return coords_; }
  const BinaryCode& flat() const { return flat_; }
  std::size_t dimension_f2() const { return flat_.dimension(); }
  std::vector<QVector> basis() const;
  bool contains(const QVector& v) const { return flat_.contains(flatten(v, p_)); }

  friend bool operator==(const IdealCode&, const IdealCode&) = default;

 private:
  unsigned p_ = 0;
  std::size_t coords_ = 0;
  BinaryCode flat_;
};

/// F2-span of { s * v : s in scalars, v in basis }.
IdealCode scalar_closure(const IdealCode& code, std::span<const QuotientPoly> scalars);
/// Closure under multiplication by x, i.e. the Q-submodule generated by the code. For
/// vectors inside a field ideal this is the span over that field.
IdealCode ideal_span(const IdealCode& code);

/// sum_i u_i * conj(v_i), with conj(a) = a(x^-1).
QuotientPoly hermitian_form(const QVector& u, const QVector& v);

}  // namespace autcode
