#pragma once

#include <cstddef>
#include <vector>

#include "autcode/code.hpp"
#include "autcode/ideal_code.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// Canonical dihedral pair of fixed point free permutations on n = c*p coordinates.
///
/// sigma_p cycles each block {bp, ..., bp+p-1} forward. sigma_2 exchanges blocks 2m and
/// 2m+1: position 0 of a block goes to position 0 of its partner, position i to position
/// p-i. On phi_p-coordinates this is (e_1, e_2, ...) -> (conj e_2, conj e_1, ...), and
/// sigma_2 sigma_p sigma_2 = sigma_p^-1.
struct DihedralContext {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t c = 0;  // number of p-cycles, even
  Permutation sigma_p;
  Permutation sigma_2;

  /// InputError unless p is an odd prime with s(p) = p-1 and 2p divides n.
  static DihedralContext canonical(unsigned p, std::size_t n);
};

/// A: self-dual binary code of length c. B: subfield-linear code in I_1^(c/2).
struct DihedralPair {
  BinaryCode a;
  IdealCode b;
};

/// F2-basis {x^k + x^(p-k) : 1 <= k <= (p-1)/2} of the subfield GF(2^((p-1)/2)) of I_1,
/// the elements fixed by conjugation.
std::vector<QuotientPoly> subfield_basis(unsigned p);
IdealCode subfield_span(const IdealCode& code);

/// s(u, v) = sum_i (u_i conj(v_i) + conj(u_i) v_i).
QuotientPoly trace_hermitian_form(const QVector& u, const QVector& v);

/// True iff s vanishes on the subfield span of `b` and dim_F2 = (p-1)c/4.
/// InputError when b does not have c/2 coordinates.
bool trace_hermitian_self_dual(const IdealCode& b, unsigned p, std::size_t c);

/// C = pi_sigma_p^-1(A) + phi_p^-1(<lift(B)>), lift(beta) = (beta_1, conj beta_1, ...),
/// the span taken over GF(2^(p-1)). DomainError when A is not self-dual or not invariant
/// under the block-pair swap, or B is not trace-Hermitian self-dual.
BinaryCode construct(const DihedralPair& pair, const DihedralContext& ctx);

struct ExtractOptions {
  /// Refuse codes for which pi_sigma_2(C(sigma_2)) is not self-dual.
  bool require_hypothesis = false;
};

struct Extraction {
  DihedralPair pair;
  bool hypothesis_met = false;  // pi_sigma_2(C(sigma_2)) is self-dual
};

/// A = pi_sigma_p(C(sigma_p)); B = odd-position entries of the sigma_2-fixed part of
/// phi_p(E(sigma_p)). DomainError unless C is self-dual with sigma_p, sigma_2 in Aut(C);
/// HypothesisError when the extracted pair fails its dimension or self-duality
/// accounting (for instance E(sigma_p) = 0), or when the hypothesis is required and fails.
Extraction extract_pair(const BinaryCode& code, const DihedralContext& ctx, ExtractOptions options = {});

}  // namespace autcode
