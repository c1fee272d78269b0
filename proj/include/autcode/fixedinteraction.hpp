#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "autcode/code.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// Sum of C(g) over the given elements. DomainError if some element is not in Aut(C).
BinaryCode sum_fixed_codes(const BinaryCode& code, const std::vector<Permutation>& elements);

/// All elements of the group generated by `gens`, sorted. `degree` is used when gens is empty.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t degree);

struct Theorem6Result {
  BinaryCode lhs;  // sum over E^x of C(e)
  BinaryCode rhs;  // sum over kappa in <H> of C(e_0)^kappa
  bool equal = false;
};

/// HypothesisError unless <E_gens> is elementary abelian, normalized by <H_gens>, and
/// <H_gens> is transitive on its non-identity elements, or when e_0 is not in E^x.
/// DomainError when some generator is not in Aut(C).
Theorem6Result theorem6_check(const BinaryCode& code, const std::vector<Permutation>& e_gens,
                              const std::vector<Permutation>& h_gens, const Permutation& e0);

struct QuotientProfile {
  BinaryCode d;
  std::size_t dim_d = 0;
  std::size_t dim_d_dual = 0;
  std::size_t dim_quotient = 0;
  std::size_t sigma_p_fixed_dim = 0;
  /// Coset representatives: an RREF basis of a complement of D in D^perp.
  std::vector<BitVector> representatives;
};

/// Profile of Q = D^perp / D with D = sum_fixed_codes(C, elements). DomainError when
/// D is not contained in D^perp or sigma_p does not preserve D.
QuotientProfile quotient_profile(const BinaryCode& code, const std::vector<Permutation>& elements,
                                 const Permutation& sigma_p);

struct Remark7Report {
  Permutation eta_pq;  // eta_{sigma_p}(sigma_q), on sigma_p-orbits
  Permutation eta_qp;  // eta_{sigma_q}(sigma_p), on sigma_q-orbits
  bool flag_a = false;
  bool flag_b = false;
  bool flag_c = false;
  BinaryCode double_p;  // pi_{eta_pq}(pi_{sigma_p}(C(sigma_p))(eta_pq)), orbit-of-orbit order
  BinaryCode double_q;
  /// Present only for distinct p, q.
  std::optional<bool> flag_d;
  std::optional<CycleType> product_type;
  std::optional<CycleType> type_pq;
  std::optional<CycleType> type_qp;
};

/// DomainError unless sigma_p and sigma_q commute, have prime order (or are the identity)
/// and lie in Aut(C).
Remark7Report remark7_check(const BinaryCode& code, const Permutation& sigma_p, const Permutation& sigma_q);

}  // namespace autcode
