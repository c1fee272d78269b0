#include <doctest.h>

#include <functional>

#include "autcode/action.hpp"
#include "autcode/errors.hpp"
#include "autcode/twopmodule.hpp"
#include "instances.hpp"

using namespace autcode;
using namespace testsupport;

namespace {

const BinaryCode& six_three() {
  static const auto c = code_of(6, {"110000", "001100", "000011"});
  return c;
}

// Self-dual codes invariant under a random element of type 2p-(w,0,x;0).
std::vector<TwoPContext> random_contexts(Rng& rng, unsigned p, std::size_t w, std::size_t x, int count) {
  std::vector<TwoPContext> out;
  const std::size_t n = 2 * w + 2 * p * x;
  for (int i = 0; i < count; ++i) {
    const auto sigma = random_cycle_shape(rng, n, {{2 * p, x}, {2, w}});
    auto code = random_invariant_self_dual(rng, cyclic_group(sigma), n, 10);
    if (code) out.push_back(TwoPContext::make(std::move(*code), sigma));
  }
  return out;
}

std::size_t brute_fixed_dim(const BinaryCode& code, const Permutation& s) {
  std::size_t count = 0;
  for (const auto& w : codewords(code)) count += naive_act(w, s) == w;
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < count) ++dim;
  return dim;
}

}  // namespace

TEST_CASE("context validation") {
  const auto sigma = perm("(1,4,5,2,3,6)", 6);
  const auto ctx = TwoPContext::make(six_three(), sigma);
  CHECK(ctx.p() == 3);
  CHECK(ctx.w() == 0);
  CHECK(ctx.x() == 1);
  CHECK(ctx.sigma_2() == perm("(1,2)(3,4)(5,6)", 6));
  CHECK(ctx.sigma_p() == perm("(1,5,3)(2,6,4)", 6));
  CHECK_THROWS_AS(TwoPContext::make(code_of(6, {"111111"}), sigma), DomainError);
  CHECK_THROWS_AS(TwoPContext::make(six_three(), perm("(1,2)(3,4)(5,6)", 6)), DomainError);
  CHECK_THROWS_AS(TwoPContext::make(six_three(), perm("(1,3,2,4,5,6)", 6)), DomainError);
}

TEST_CASE("fold examples") {
  const auto s = perm("(1,2)(3,4)", 4);
  CHECK(phi_fold(code_of(4, {"1100", "0011"}), s).dimension() == 0);
  CHECK(phi_fold(code_of(4, {"1011", "0111"}), s) == code_of(2, {"10"}));
  const auto h = extended_hamming();
  const auto t = hamming_translation(1);
  CHECK(phi_fold(fixed_code(h, t), t).dimension() == 0);
  CHECK_THROWS_AS(phi_fold(code_of(3, {"110"}), perm("(1,2)", 3)), DomainError);
}

TEST_CASE("fold chain examples") {
  auto r = bouyuklieva_chain(code_of(2, {"11"}), perm("(1,2)", 2));
  CHECK(r.holds());
  CHECK(r.dim_phi == 0);
  CHECK(r.dim_projection == 1);

  // Every self-dual [4,2] code with (1,2)(3,4) as an automorphism.
  const auto s = perm("(1,2)(3,4)", 4);
  int seen = 0;
  for (unsigned a = 1; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      BitVector u(4), v(4);
      for (unsigned i = 0; i < 4; ++i) {
        if ((a >> i) & 1U) u.set(i);
        if ((b >> i) & 1U) v.set(i);
      }
      const auto c = BinaryCode::span(4, std::vector<BitVector>{u, v});
      if (c.dimension() != 2 || !is_self_dual(c) || !is_automorphism(c, s)) continue;
      ++seen;
      CHECK(bouyuklieva_chain(c, s).holds());
    }
  }
  CHECK(seen > 0);

  // Every fixed point free involution of the extended Hamming code.
  const auto h = extended_hamming();
  int involutions = 0;
  std::vector<std::size_t> image(8);
  std::vector<bool> used(8, false);
  std::function<void(std::size_t)> pair_up = [&](std::size_t i) {
    while (i < 8 && used[i]) ++i;
    if (i == 8) {
      const Permutation t(image);
      if (is_automorphism(h, t)) {
        ++involutions;
        CHECK(bouyuklieva_chain(h, t).holds());
      }
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < 8; ++j) {
      if (used[j]) continue;
      used[j] = true;
      image[i] = j;
      image[j] = i;
      pair_up(i + 1);
      used[j] = false;
    }
    used[i] = false;
  };
  pair_up(0);
  CHECK(involutions > 0);
}

TEST_CASE("projectivity examples") {
  const auto ctx = TwoPContext::make(six_three(), perm("(1,4,5,2,3,6)", 6));
  auto flags = is_projective(ctx);
  CHECK_FALSE(flags.criterion);
  CHECK_FALSE(flags.oracle);

  Rng rng(12);
  bool found = false;
  for (const auto& c : random_contexts(rng, 3, 0, 2, 60)) {
    flags = is_projective(c);
    CHECK(flags.criterion == flags.oracle);
    if (flags.criterion && fixed_code(c.code(), c.sigma_2()).dimension() == 3) found = true;
  }
  CHECK(found);
}

TEST_CASE("profile of the six-three instance") {
  const auto ctx = TwoPContext::make(six_three(), perm("(1,4,5,2,3,6)", 6));
  const auto prof = module_profile(ctx);
  REQUIRE(prof.entries.size() == 2);
  CHECK(prof.entries[0].y == 0);
  CHECK(prof.entries[0].z == 1);
  CHECK(prof.entries[1].y == 0);
  CHECK(prof.entries[1].z == 1);
  CHECK(prof.accounted_dimension() == 3);
  const auto report = check_profile_constraints(prof, ctx);
  CHECK(report.find("a")->passed);
  CHECK(report.find("b1")->passed);
  CHECK(report.find("parity")->passed);
  CHECK(report.find("b2") == nullptr);
  CHECK(report.all_passed());
}

TEST_CASE("synthetic constraint violation") {
  ModuleProfile prof;
  prof.p = 3;
  prof.s = 2;
  prof.entries = {IdealMultiplicity{0, 1, 0, 0, 1}, IdealMultiplicity{1, 2, 1, 1, 0}};
  const auto report = check_profile_constraints(prof, 0, 1);
  CHECK(report.find("a")->passed);
  CHECK_FALSE(report.find("b1")->passed);
  CHECK_FALSE(report.all_passed());
}

TEST_CASE("profile constraints on generated contexts") {
  Rng rng(31);
  int total = 0;
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t w = 0; 2 * w + 6 * x <= 24; ++w) {
      for (const auto& ctx : random_contexts(rng, 3, w, x, 6)) {
        ++total;
        const auto prof = module_profile(ctx);
        CHECK(prof.accounted_dimension() == ctx.code().dimension());
        const auto report = check_profile_constraints(prof, ctx);
        for (const auto& check : report.checks) {
          CAPTURE(check.name);
          CAPTURE(check.detail);
          CHECK(check.passed);
        }
        const auto chain = bouyuklieva_chain(ctx.code(), ctx.sigma_2());
        CHECK(chain.holds());
        const auto flags = is_projective(ctx);
        CHECK(flags.criterion == flags.oracle);
        if (ctx.code().dimension() <= 12) {
          CHECK(flags.oracle == (2 * brute_fixed_dim(ctx.code(), ctx.sigma_2()) == ctx.code().dimension()));
        }
      }
    }
  }
  CHECK(total >= 30);
}

TEST_CASE("odd s(p): p = 7 on length 28") {
  Rng rng(57);
  int checked = 0;
  for (const auto& [w, x] : {std::pair<std::size_t, std::size_t>{0, 2}, {7, 1}}) {
    for (const auto& ctx : random_contexts(rng, 7, w, x, 6)) {
      ++checked;
      const auto prof = module_profile(ctx);
      REQUIRE(prof.entries.size() == 3);
      CHECK(prof.entries[1].dual_ideal == 2);
      const auto report = check_profile_constraints(prof, ctx);
      REQUIRE(report.find("b2") != nullptr);
      CHECK(report.find("b2")->passed);
      CHECK(report.find("b1") == nullptr);
      CHECK(report.all_passed());
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("profile does not depend on the chosen generator") {
  Rng rng(91);
  for (const auto& ctx : random_contexts(rng, 3, 1, 2, 10)) {
    const auto other = TwoPContext::make(ctx.code(), ctx.sigma().pow(5));
    REQUIRE(other.sigma_2() == ctx.sigma_2());
    const auto a = module_profile(ctx);
    const auto b = module_profile(other);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].y == b.entries[i].y);
      CHECK(a.entries[i].z == b.entries[i].z);
    }
  }
  for (const auto& ctx : random_contexts(rng, 7, 0, 2, 4)) {
    for (long long k : {9LL, 11LL}) {
      const auto other = TwoPContext::make(ctx.code(), ctx.sigma().pow(k));
      const auto a = module_profile(ctx);
      const auto b = module_profile(other);
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].y == b.entries[i].y);
        CHECK(a.entries[i].z == b.entries[i].z);
      }
    }
  }
}

TEST_CASE("lower bound on the involution fixed code") {
  const auto six = TwoPContext::make(six_three(), perm("(1,4,5,2,3,6)", 6));
  auto r = corollary1_check(six);
  CHECK_FALSE(r.applicable);
  CHECK_FALSE(r.bound_holds);

  Rng rng(63);
  int applicable = 0;
  struct Shape {
    unsigned p;
    std::size_t w, x;
  };
  for (const auto& shape : {Shape{3, 1, 1}, Shape{3, 3, 1}, Shape{3, 3, 3}, Shape{5, 1, 1}, Shape{3, 5, 1}}) {
    for (const auto& ctx : random_contexts(rng, shape.p, shape.w, shape.x, 8)) {
      r = corollary1_check(ctx);
      CHECK(r.applicable);
      if (!r.applicable) continue;
      ++applicable;
      CHECK(r.bound == ctx.length() / 4 + (shape.p - 1) / 2);
      CHECK(r.dim_fixed >= r.bound);
      CHECK_FALSE(r.projection_self_dual);
      CHECK(r.bound_holds);
    }
  }
  CHECK(applicable > 0);

  // w even: not applicable.
  for (const auto& ctx : random_contexts(rng, 3, 2, 2, 4)) CHECK_FALSE(corollary1_check(ctx).applicable);
}
