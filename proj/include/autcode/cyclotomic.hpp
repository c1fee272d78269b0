#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autcode/bitvector.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// Polynomial over GF(2) of degree <= 63, bit i = coefficient of x^i.
struct Poly2 {
  std::uint64_t bits = 0;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return bits == 0; }
  /// "1+x+x^3"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend bool operator==(Poly2, Poly2) = default;
};

Poly2 poly_mul(Poly2 a, Poly2 b);  // throws InputError past degree 63
Poly2 poly_mod(Poly2 a, Poly2 m);
Poly2 poly_div(Poly2 a, Poly2 m);
Poly2 poly_gcd(Poly2 a, Poly2 b);
/// x^deg * a(1/x).
Poly2 poly_reciprocal(Poly2 a);

/// Residue class in Q = F2[x]/(x^p + 1), p an odd prime below 64.
class QuotientPoly {
 public:
  QuotientPoly() = default;
  QuotientPoly(unsigned p, std::uint64_t bits);

  static QuotientPoly zero(unsigned p) { return {p, 0}; }
  static QuotientPoly one(unsigned p) { return {p, 1}; }
  static QuotientPoly monomial(unsigned p, unsigned k) { return {p, std::uint64_t{1} << (k % p)}; }
  /// Reduces an arbitrary polynomial modulo x^p + 1.
  static QuotientPoly from_poly(unsigned p, Poly2 f);
  /// Coefficient string "c_0 c_1 ... c_{p-1}" of exactly p characters.
  static QuotientPoly from_coefficients(unsigned p, std::string_view coeffs);
  static QuotientPoly from_bits(const BitVector& coeffs);

  unsigned modulus_degree() const { return p_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool coefficient(unsigned k) const { return (bits_ >> k) & 1U; }
  std::size_t weight() const;

  QuotientPoly& operator+=(const QuotientPoly& other);
  friend QuotientPoly operator+(QuotientPoly a, const QuotientPoly& b) { return a += b; }
  friend QuotientPoly operator*(const QuotientPoly& a, const QuotientPoly& b);
  QuotientPoly pow(std::uint64_t e) const;
  QuotientPoly square() const { return *this * *this; }
  /// x^k * a.
  QuotientPoly shift(unsigned k) const;
  /// a(x^-1), i.e. the coefficient of x^k moves to x^(p-k).
  QuotientPoly reversed() const;

  BitVector to_bits() const;
  std::string coefficients() const;
  std::string to_string() const { return Poly2{bits_}.to_string(); }

  friend bool operator==(const QuotientPoly&, const QuotientPoly&) = default;

 private:
  unsigned p_ = 0;
  std::uint64_t bits_ = 0;
};

bool is_odd_prime(unsigned p);

/// s(p): multiplicative order of 2 modulo the odd prime p.
unsigned ord2_mod_p(unsigned p);

/// Cyclotomic coset {k, 2k, 4k, ...} mod p, sorted.
std::vector<unsigned> cyclotomic_coset(unsigned p, unsigned k);

/// Factorization x^p + 1 = q_0 q_1 ... q_t over GF(2) and the associated ideals of Q.
struct IdealDecomposition {
  unsigned p = 0;
  unsigned s = 0;  // s(p)
  unsigned t = 0;  // (p-1)/s
  std::vector<Poly2> factors;            // q_0 = x+1, then by coefficients from the leading term down
  std::vector<QuotientPoly> generators;  // Q_j = (x^p+1)/q_j, generators of I_j (not idempotent)
  std::vector<QuotientPoly> idempotents; // e_j; empty until crt_idempotents has run

  std::size_t ideal_count() const { return factors.size(); }
  unsigned ideal_degree(std::size_t j) const { return static_cast<unsigned>(factors[j].degree()); }
  /// Index of the ideal whose factor is the reciprocal of q_j (the contragredient module).
  std::size_t dual_index(std::size_t j) const;
};

IdealDecomposition factor_xp1(unsigned p);
/// Orthogonal idempotents e_j with e_j = 1 mod q_j, e_j = 0 mod q_i (i != j),
/// computed by extended Euclid on (q_j, (x^p+1)/q_j).
std::vector<QuotientPoly> crt_idempotents(const IdealDecomposition& dec);
/// factor_xp1 followed by crt_idempotents.
IdealDecomposition ideal_decomposition(unsigned p);

/// The ideal I_j = Q e_j viewed as the field GF(2^deg q_j) with identity e_j.
class IdealField {
 public:
  IdealField(const IdealDecomposition& dec, std::size_t j);

  unsigned p() const { return p_; }
  std::size_t index() const { return index_; }
  unsigned degree() const { return degree_; }
  std::uint64_t multiplicative_order() const { return (std::uint64_t{1} << degree_) - 1; }
  const QuotientPoly& identity() const { return identity_; }

  bool contains(const QuotientPoly& a) const;
  /// The element sum_k m_k x^k e_j for the F2-basis {x^k e_j : k < degree}.
  QuotientPoly element(std::uint64_t m) const;
  /// Projection Q -> I_j, a -> a e_j.
  QuotientPoly project(const QuotientPoly& a) const { return a * identity_; }

  QuotientPoly add(const QuotientPoly& a, const QuotientPoly& b) const;
  QuotientPoly mul(const QuotientPoly& a, const QuotientPoly& b) const;
  QuotientPoly pow(const QuotientPoly& a, std::uint64_t e) const;
  /// a^(2^degree - 2); DomainError for zero.
  QuotientPoly inverse(const QuotientPoly& a) const;
  QuotientPoly frobenius(const QuotientPoly& a) const { return mul(a, a); }
  std::uint64_t element_order(const QuotientPoly& a) const;
  /// Smallest element (in the element() enumeration) of full multiplicative order.
  QuotientPoly primitive_element() const;

 private:
  void require_member(const QuotientPoly& a) const;

  unsigned p_ = 0;
  std::size_t index_ = 0;
  unsigned degree_ = 0;
  QuotientPoly identity_;
};

/// The half Frobenius a -> a^(2^((p-1)/2)) on the ideal of even-weight residues when
/// s(p) = p-1, together with the coordinate permutation (2,p)(3,p-1)... of {1..p}
/// that realizes it on coefficient vectors.
///
/// Since 2 generates F_p^x, 2^((p-1)/2) = -1 mod p, so the exponent index map
/// i -> i + (p-1)/2 mod (p-1) on powers of 2 becomes x^k -> x^(p-k).
struct FrobeniusHalf {
  unsigned p = 0;
  Permutation coordinate_permutation;
  std::uint64_t exponent = 0;  // 2^((p-1)/2)
};

/// DomainError unless s(p) = p-1.
FrobeniusHalf frobenius_half_map(unsigned p);
/// a^(2^((p-1)/2)) by repeated squaring; `field` must be the non-trivial ideal with s(p) = p-1.
QuotientPoly frobenius_half(const IdealField& field, const QuotientPoly& a);
/// a + frobenius_half(a), an element of the subfield of order 2^((p-1)/2).
QuotientPoly trace_half(const IdealField& field, const QuotientPoly& a);

}  // namespace autcode
