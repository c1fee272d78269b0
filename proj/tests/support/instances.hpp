#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "autcode/bitvector.hpp"
#include "autcode/code.hpp"
#include "autcode/cyclotomic.hpp"
#include "autcode/permutation.hpp"

namespace testsupport {

using autcode::BinaryCode;
using autcode::BitVector;
using autcode::Permutation;
using Rng = std::mt19937_64;

BitVector bits(std::string_view text);
BinaryCode code_of(std::size_t n, std::initializer_list<std::string_view> rows);
/// 1-indexed cycle notation.
Permutation perm(std::string_view text, std::size_t n);

/// RM(1,3): coordinate i is the point (i&1, i&2, i&4) of F2^3.
BinaryCode extended_hamming();
/// Affine maps of F2^3 acting on extended_hamming() coordinates.
Permutation hamming_translation(unsigned t);
/// x -> A x with A: e1 -> e2, e2 -> e1+e2, e3 -> e3 (order 3, normalizes translations by 1,2,3).
Permutation hamming_rotation();

/// Extended quadratic residue code of length 24; coordinates 0..22 are F_23, 23 is infinity.
BinaryCode extended_golay();
/// x -> -1/(x+1) on the projective line over F_23: fixed point free, order 3.
Permutation golay_order3();

BitVector random_vector(Rng& rng, std::size_t n);
Permutation random_permutation(Rng& rng, std::size_t n);
/// Permutation on n points with `cycles` cycles of each listed length, random support.
Permutation random_cycle_shape(Rng& rng, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& shape);
/// Powers of sigma: {1, sigma, ..., sigma^(ord-1)}.
std::vector<Permutation> cyclic_group(const Permutation& sigma);

/// Span of the images of `seeds` under every element of `group`.
BinaryCode orbit_span(const std::vector<Permutation>& group, const std::vector<BitVector>& seeds, std::size_t n);
/// Group-invariant code spanned by the orbits of `seed_count` random vectors.
BinaryCode random_invariant_code(Rng& rng, const std::vector<Permutation>& group, std::size_t n, std::size_t seed_count);
/// Greedy random group-invariant self-dual code; nullopt when every attempt gets stuck.
std::optional<BinaryCode> random_invariant_self_dual(Rng& rng, const std::vector<Permutation>& group, std::size_t n,
                                                     int attempts = 40);

/// Every codeword of a code (small dimension only).
std::vector<BitVector> codewords(const BinaryCode& code);
/// Applies the convention v^sigma[sigma(i)] = v[i] without the library.
BitVector naive_act(const BitVector& v, const Permutation& sigma);

/// Polynomials over GF(2) as coefficient vectors, c_0 first; test-side arithmetic only.
using NaivePoly = std::vector<int>;
NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b);
NaivePoly naive_trim(NaivePoly a);
/// Multiplication in F2[x]/(x^p+1) on length-p coefficient vectors.
NaivePoly naive_qmul(const NaivePoly& a, const NaivePoly& b, unsigned p);
NaivePoly to_naive(const autcode::QuotientPoly& a);
NaivePoly to_naive(autcode::Poly2 a);

}  // namespace testsupport
