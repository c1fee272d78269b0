#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "autcode/code.hpp"
#include "autcode/permutation.hpp"

namespace autcode {

/// A self-dual code with an automorphism of order 2p (p an odd prime) of type
/// 2p-(w,0,x;0): w transpositions, x cycles of length 2p, nothing else. The involution
/// sigma_2 = sigma^p is then fixed point free and sigma_p = sigma^2 has order p.
class TwoPContext {
 public:
  /// Throws DomainError when the code is not self-dual, sigma is not an automorphism,
  /// or sigma is not of type 2p-(w,0,x;0).
  static TwoPContext make(BinaryCode code, Permutation sigma);

  const BinaryCode& code() const { return code_; }
  const Permutation& sigma() const { return sigma_; }
  const Permutation& sigma_2() const { return sigma_2_; }
  const Permutation& sigma_p() const { return sigma_p_; }
  unsigned p() const { return p_; }
  std::size_t w() const { return w_; }
  std::size_t x() const { return x_; }
  std::size_t length() const { return code_.length(); }

 private:
  TwoPContext() = default;

  BinaryCode code_;
  Permutation sigma_, sigma_2_, sigma_p_;
  unsigned p_ = 0;
  std::size_t w_ = 0, x_ = 0;
};

/// phi(c)_k = c_i + c_sigma2(i) for the k-th orbit {i, sigma2(i)}. Requires a fixed point
/// free involution in Aut(C).
BinaryCode phi_fold(const BinaryCode& code, const Permutation& sigma_2);

struct ChainResult {
  bool contained = false;   // phi(C) <= pi(C(sigma_2))
  bool dual_equal = false;  // pi(C(sigma_2)) = phi(C)^perp
  std::size_t dim_phi = 0;
  std::size_t dim_projection = 0;
  bool holds() const { return contained && dual_equal; }
};

/// Requires C self-dual and sigma_2 a fixed point free involution in Aut(C).
ChainResult bouyuklieva_chain(const BinaryCode& code, const Permutation& sigma_2);

struct ProjectivityFlags {
  bool criterion = false;  // pi(C(sigma_2)) is self-dual
  bool oracle = false;     // C is free over <sigma_2>: dim C(sigma_2) = dim C / 2
};

ProjectivityFlags is_projective(const TwoPContext& ctx);

struct IdealMultiplicity {
  std::size_t ideal = 0;
  unsigned degree = 1;  // s_0 = 1, s_i = s(p)
  std::size_t dual_ideal = 0;
  std::size_t y = 0;    // non-split self-extensions
  std::size_t z = 0;    // simple summands
};

struct ModuleProfile {
  unsigned p = 0;
  unsigned s = 0;
  std::vector<IdealMultiplicity> entries;

  std::size_t accounted_dimension() const;
};

/// Multiplicities from the components C_i = C e_i(sigma_p): (1 + sigma_2) kills the simple
/// summands and maps each non-split extension onto its socle, so
/// y_i = dim (1+sigma_2) C_i / s_i and z_i = dim C_i / s_i - 2 y_i.
ModuleProfile module_profile(const TwoPContext& ctx);

struct ConstraintCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  bool all_passed() const;
  const ConstraintCheck* find(const std::string& name) const;
};

/// Evaluates a) 2y_0+z_0 = x+w; for even s(p) b1) 2y_i+z_i = x and the parity law
/// x = z_i mod 2; for odd s(p) b2) z_i = z_i* and y_i+y_i*+z_i = x, where i* is the
/// ideal of the reciprocal factor. `accounting` checks sum_i s_i(2y_i+z_i) = p x + w.
ConstraintReport check_profile_constraints(const ModuleProfile& profile, std::size_t w, std::size_t x);
ConstraintReport check_profile_constraints(const ModuleProfile& profile, const TwoPContext& ctx);

struct Corollary1Result {
  bool applicable = false;  // n = 0 mod 4, s(p) even, w odd
  bool bound_holds = false; // dim C(sigma_2) >= n/4 + (p-1)/2 and the projection is not self-dual
  std::size_t dim_fixed = 0;
  std::size_t bound = 0;
  bool projection_self_dual = false;
};

Corollary1Result corollary1_check(const TwoPContext& ctx);

}  // namespace autcode
