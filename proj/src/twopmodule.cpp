#include "autcode/twopmodule.hpp"

#include <algorithm>

#include "autcode/action.hpp"
#include "autcode/cyclotomic.hpp"
#include "autcode/errors.hpp"

namespace autcode {

namespace {

void require_fpf_involution(const BinaryCode& code, const Permutation& sigma_2) {
  if (code.length() != sigma_2.degree()) throw InputError("permutation degree does not match code length");
  if (sigma_2.order() != 2 || sigma_2.fixed_points() != 0) {
    throw DomainError(sigma_2.to_string() + " is not a fixed point free involution");
  }
  if (!is_automorphism(code, sigma_2)) throw DomainError(sigma_2.to_string() + " is not an automorphism");
}

BinaryCode projected_fixed(const BinaryCode& code, const Permutation& sigma) {
  return project_orbits(fixed_code(code, sigma), orbit_partition(sigma));
}

}  // namespace

TwoPContext TwoPContext::make(BinaryCode code, Permutation sigma) {
  if (code.length() != sigma.degree()) throw InputError("permutation degree does not match code length");
  if (!is_self_dual(code)) throw DomainError("order-2p analysis needs a self-dual code");
  const auto order = sigma.order();
  if (order % 2 != 0 || order >= 128 || !is_odd_prime(static_cast<unsigned>(order / 2))) {
    throw DomainError("automorphism order " + std::to_string(order) + " is not 2p for an odd prime p");
  }
  if (!is_automorphism(code, sigma)) throw DomainError(sigma.to_string() + " is not an automorphism");

  TwoPContext ctx;
  ctx.p_ = static_cast<unsigned>(order / 2);
  if (sigma.fixed_points() != 0) throw DomainError("type 2p-(w,0,x;0) has no fixed points");
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() == 2) {
      ++ctx.w_;
    } else if (cycle.size() == 2 * ctx.p_) {
      ++ctx.x_;
    } else {
      throw DomainError("cycle of length " + std::to_string(cycle.size()) + " in a 2p-(w,0,x;0) permutation");
    }
  }
  ctx.sigma_2_ = sigma.pow(ctx.p_);
  ctx.sigma_p_ = sigma.pow(2);
  ctx.code_ = std::move(code);
  ctx.sigma_ = std::move(sigma);
  return ctx;
}

BinaryCode phi_fold(const BinaryCode& code, const Permutation& sigma_2) {
  require_fpf_involution(code, sigma_2);
  const auto part = orbit_partition(sigma_2);
  return image_code(code, part.size(), [&](const BitVector& v) {
    BitVector out(part.size());
    for (std::size_t k = 0; k < part.size(); ++k) {
      out.set(k, v.test(part.orbits[k][0]) ^ v.test(part.orbits[k][1]));
    }
    return out;
  });
}

ChainResult bouyuklieva_chain(const BinaryCode& code, const Permutation& sigma_2) {
  require_fpf_involution(code, sigma_2);
  if (!is_self_dual(code)) throw DomainError("the chain phi(C) <= pi(C(sigma_2)) = phi(C)^perp needs C self-dual");
  const auto folded = phi_fold(code, sigma_2);
  const auto projection = projected_fixed(code, sigma_2);
  ChainResult r;
  r.contained = projection.contains(folded);
  r.dual_equal = projection == dual(folded);
  r.dim_phi = folded.dimension();
  r.dim_projection = projection.dimension();
  return r;
}

ProjectivityFlags is_projective(const TwoPContext& ctx) {
  const auto fixed = fixed_code(ctx.code(), ctx.sigma_2());
  ProjectivityFlags flags;
  flags.criterion = is_self_dual(project_orbits(fixed, orbit_partition(ctx.sigma_2())));
  flags.oracle = 2 * fixed.dimension() == ctx.code().dimension();
  return flags;
}

std::size_t ModuleProfile::accounted_dimension() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.degree * (2 * e.y + e.z);
  return total;
}

ModuleProfile module_profile(const TwoPContext& ctx) {
  const auto dec = ideal_decomposition(ctx.p());
  const std::size_t n = ctx.length();
  ModuleProfile profile;
  profile.p = ctx.p();
  profile.s = dec.s;
  for (std::size_t i = 0; i < dec.ideal_count(); ++i) {
    const BitVector coeffs = dec.idempotents[i].to_bits();
    const auto component = image_code(ctx.code(), n, [&](const BitVector& v) {
      return apply_group_poly(v, ctx.sigma_p(), coeffs);
    });
    const auto socle_image = image_code(component, n, [&](const BitVector& v) { return v ^ act(v, ctx.sigma_2()); });
    const unsigned degree = dec.ideal_degree(i);
    if (component.dimension() % degree != 0 || socle_image.dimension() % degree != 0) {
      throw std::logic_error("component dimension not divisible by the ideal degree");
    }
    IdealMultiplicity m;
    m.ideal = i;
    m.degree = degree;
    m.dual_ideal = dec.dual_index(i);
    m.y = socle_image.dimension() / degree;
    m.z = component.dimension() / degree - 2 * m.y;
    profile.entries.push_back(m);
  }
  return profile;
}

bool ConstraintReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.passed; });
}

const ConstraintCheck* ConstraintReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ConstraintReport check_profile_constraints(const ModuleProfile& profile, std::size_t w, std::size_t x) {
  ConstraintReport report;
  const auto& e = profile.entries;
  if (e.empty()) return report;

  const std::size_t lhs0 = 2 * e[0].y + e[0].z;
  report.checks.push_back({"a", lhs0 == x + w,
                           "2y_0+z_0 = " + std::to_string(lhs0) + ", x+w = " + std::to_string(x + w)});

  if (profile.s % 2 == 0) {
    bool b1 = true;
    bool parity = true;
    std::string detail;
    std::string parity_detail;
    for (std::size_t i = 1; i < e.size(); ++i) {
      const std::size_t lhs = 2 * e[i].y + e[i].z;
      b1 = b1 && lhs == x;
      parity = parity && (e[i].z % 2) == (x % 2);
      detail += "2y_" + std::to_string(i) + "+z_" + std::to_string(i) + " = " + std::to_string(lhs) + "; ";
      parity_detail += "z_" + std::to_string(i) + " = " + std::to_string(e[i].z) + "; ";
    }
    report.checks.push_back({"b1", b1, detail + "x = " + std::to_string(x)});
    report.checks.push_back({"parity", parity, parity_detail + "x = " + std::to_string(x)});
  } else {
    bool b2 = true;
    std::string detail = "pairing i <-> i* by reciprocal factor; ";
    for (std::size_t i = 1; i < e.size(); ++i) {
      const std::size_t j = e[i].dual_ideal;
      if (j >= e.size()) {
        b2 = false;
        continue;
      }
      const bool ok = e[i].z == e[j].z && e[i].y + e[j].y + e[i].z == x;
      b2 = b2 && ok;
      detail += std::to_string(i) + "<->" + std::to_string(j) + (ok ? " ok; " : " fails; ");
    }
    report.checks.push_back({"b2", b2, detail});
  }

  const std::size_t accounted = profile.accounted_dimension();
  const std::size_t expected = static_cast<std::size_t>(profile.p) * x + w;
  report.checks.push_back({"accounting", accounted == expected,
                           "sum s_i(2y_i+z_i) = " + std::to_string(accounted) + ", dim C = " +
                               std::to_string(expected)});
  return report;
}

ConstraintReport check_profile_constraints(const ModuleProfile& profile, const TwoPContext& ctx) {
  return check_profile_constraints(profile, ctx.w(), ctx.x());
}

Corollary1Result corollary1_check(const TwoPContext& ctx) {
  Corollary1Result r;
  const std::size_t n = ctx.length();
  r.applicable = n % 4 == 0 && ord2_mod_p(ctx.p()) % 2 == 0 && ctx.w() % 2 == 1;
  const auto fixed = fixed_code(ctx.code(), ctx.sigma_2());
  r.dim_fixed = fixed.dimension();
  r.bound = n / 4 + (ctx.p() - 1) / 2;
  r.projection_self_dual = is_self_dual(project_orbits(fixed, orbit_partition(ctx.sigma_2())));
  r.bound_holds = r.applicable && r.dim_fixed >= r.bound && !r.projection_self_dual;
  return r;
}

}  // namespace autcode
