#pragma once

#include <cstddef>
#include <vector>

#include "autcode/bitvector.hpp"
#include "autcode/code.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// Orbits of a permutation on the coordinates.
///
/// Ordering convention used everywhere a projection or an induced permutation needs
/// coordinates: non-trivial orbits first, sorted by their minimal element, each listed
/// by repeated application of the permutation from that minimum; then the fixed
/// points in ascending order.
struct OrbitPartition {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of;  // coordinate -> orbit index
  std::size_t cycle_count = 0;        // number of non-trivial orbits

  std::size_t size() const { return orbits.size(); }
  std::size_t fixed_count() const { return orbits.size() - cycle_count; }
};

OrbitPartition orbit_partition(const Permutation& sigma);

/// v^sigma: coordinate sigma(i) of the result is coordinate i of v.
BitVector act(const BitVector& v, const Permutation& sigma);
BinaryCode act(const BinaryCode& code, const Permutation& sigma);

bool is_automorphism(const BinaryCode& code, const Permutation& sigma);

/// C(sigma) = {c in C : c^sigma = c}.
BinaryCode fixed_code(const BinaryCode& code, const Permutation& sigma);

/// pi_sigma: one coordinate per orbit. Throws DomainError if some basis vector is not
/// constant on the orbits.
BinaryCode project_orbits(const BinaryCode& fixed, const OrbitPartition& partition);
BitVector project_orbits(const BitVector& v, const OrbitPartition& partition);
/// Inverse of pi_sigma on vectors: spreads each orbit coordinate over its orbit.
BitVector lift_orbits(const BitVector& v, const OrbitPartition& partition, std::size_t length);

/// The permutation of sigma's orbits induced by tau (numbered as in orbit_partition).
/// Throws DomainError if tau and sigma do not commute.
Permutation eta_projection(const Permutation& tau, const Permutation& sigma);

/// c . f(sigma) = sum_k f_k c^(sigma^k), with f given by its coefficient bits.
BitVector apply_group_poly(const BitVector& v, const Permutation& sigma, const BitVector& coeffs);

}  // namespace autcode
