#pragma once

#include <cstddef>
#include <vector>

#include "autcode/action.hpp"
#include "autcode/code.hpp"
#include "autcode/ideal_code.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// C = C(sigma) + E(sigma) for an automorphism sigma of odd prime order p.
struct PrimeAutDecomposition {
  BinaryCode code;
  Permutation sigma;
  CycleType type;          // p-(c,f)
  OrbitPartition orbits;   // c cycles first, then f fixed points
  BinaryCode fixed;        // C(sigma)
  BinaryCode even;         // E(sigma): even weight on every cycle, zero on fixed points
  BinaryCode projected;    // pi_sigma(C(sigma)), length c+f

  unsigned p() const { return type.p; }
};

/// Throws DomainError when sigma is not an automorphism or its order is not an odd prime.
PrimeAutDecomposition decompose(const BinaryCode& code, const Permutation& sigma);

inline const BinaryCode& project_fixed(const PrimeAutDecomposition& d) { return d.projected; }

/// phi_p on one vector: entry k is sum_j v[orbit_k[j]] x^j over the p-cycles; fixed
/// points are dropped. Under this labelling v^sigma maps to x * phi_p(v).
QVector phi_p(const BitVector& v, const OrbitPartition& orbits, unsigned p);
/// Inverse of phi_p on the cycle coordinates; fixed points are set to zero.
BitVector phi_p_inverse(const QVector& v, const OrbitPartition& orbits, std::size_t length);

/// phi_p(E(sigma)*) as a code over the field ideal I_1. Requires s(p) = p-1.
IdealCode phi_p_image(const PrimeAutDecomposition& d);

struct ComponentDim {
  std::size_t ideal = 0;
  std::size_t dimension = 0;  // over F2
};

/// dim E(sigma) e_j(sigma) for j = 1..t, where a polynomial f acts by sum_k f_k c^(sigma^k).
std::vector<ComponentDim> component_dims(const BinaryCode& code, const Permutation& sigma);

/// Hermitian self-duality of an I_1-linear code in I_1^c (s(p) = p-1): the form
/// sum_i u_i conj(v_i) vanishes on a basis and the dimension over GF(2^(p-1)) is c/2.
/// The input is closed under I_1 scalars before testing.
bool hermitian_self_dual(const IdealCode& code);

struct YorgovFlags {
  bool code_self_dual = false;          // side a
  bool projection_self_dual = false;
  bool image_hermitian_self_dual = false;
  bool side_b() const { return projection_self_dual && image_hermitian_self_dual; }
};

/// Evaluates both sides of the self-duality equivalence independently.
YorgovFlags yorgov_check(const BinaryCode& code, const Permutation& sigma);

}  // namespace autcode
