#include "autcode/ideal_code.hpp"

#include "autcode/errors.hpp"

namespace autcode {

BitVector flatten(const QVector& v, unsigned p) {
  BitVector flat(v.size() * p);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].modulus_degree() != p) throw InputError("entry is not a residue modulo x^p+1 for this p");
    for (unsigned k = 0; k < p; ++k) flat.set(i * p + k, v[i].coefficient(k));
  }
  return flat;
}

QVector unflatten(const BitVector& flat, unsigned p) {
  if (flat.size() % p != 0) throw InputError("flat length is not a multiple of p");
  QVector v;
  v.reserve(flat.size() / p);
  for (std::size_t i = 0; i < flat.size() / p; ++i) {
    std::uint64_t bits = 0;
    for (unsigned k = 0; k < p; ++k) {
      if (flat.test(i * p + k)) bits |= std::uint64_t{1} << k;
    }
    v.emplace_back(p, bits);
  }
  return v;
}

IdealCode::IdealCode(unsigned p, std::size_t coords, BinaryCode flat)
    : p_(p), coords_(coords), flat_(std::move(flat)) {
  if (flat_.length() != p_ * coords_) throw InputError("flat code length must be p * coords");
}

IdealCode IdealCode::span(unsigned p, std::size_t coords, std::span<const QVector> vectors) {
  std::vector<BitVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != coords) {
      throw InputError("vector has " + std::to_string(v.size()) + " coordinates, expected " +
                       std::to_string(coords));
    }
    rows.push_back(flatten(v, p));
  }
  return IdealCode(p, coords, BinaryCode::span(p * coords, rows));
}

std::vector<QVector> IdealCode::basis() const {
  std::vector<QVector> out;
  out.reserve(flat_.dimension());
  for (const auto& row : flat_.basis()) out.push_back(unflatten(row, p_));
  return out;
}

IdealCode scalar_closure(const IdealCode& code, std::span<const QuotientPoly> scalars) {
  std::vector<QVector> vectors;
  for (const auto& v : code.basis()) {
    for (const auto& s : scalars) {
      QVector w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = s * v[i];
      vectors.push_back(std::move(w));
    }
  }
  return IdealCode::span(code.p(), code.coords(), vectors);
}

IdealCode ideal_span(const IdealCode& code) {
  std::vector<QuotientPoly> powers;
  for (unsigned k = 0; k < code.p(); ++k) powers.push_back(QuotientPoly::monomial(code.p(), k));
  return scalar_closure(code, powers);
}

QuotientPoly hermitian_form(const QVector& u, const QVector& v) {
  if (u.size() != v.size() || u.empty()) throw InputError("hermitian form of vectors with different lengths");
  QuotientPoly acc = QuotientPoly::zero(u.front().modulus_degree());
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i].reversed();
  return acc;
}

}  // namespace autcode
