#include <doctest.h>

#include <algorithm>
#include <array>

#include "autcode/action.hpp"
#include "autcode/errors.hpp"
#include "autcode/primedecomp.hpp"
#include "instances.hpp"

using namespace autcode;
using namespace testsupport;

namespace {

QuotientPoly q(unsigned p, const char* coeffs) { return QuotientPoly::from_coefficients(p, coeffs); }

// Orbit-constant codewords and orbit-even codewords counted by enumeration.
struct BruteCounts {
  std::size_t fixed = 0;
  std::size_t even = 0;
};

BruteCounts brute_counts(const BinaryCode& code, const Permutation& sigma) {
  const auto orbits = orbit_partition(sigma).orbits;
  BruteCounts out;
  for (const auto& w : codewords(code)) {
    bool constant = true;
    bool even = true;
    for (const auto& orbit : orbits) {
      std::size_t ones = 0;
      for (auto i : orbit) ones += w.test(i);
      constant = constant && (ones == 0 || ones == orbit.size());
      even = even && ones % 2 == 0;
    }
    out.fixed += constant;
    out.even += even;
  }
  return out;
}

// The [12,6] code from A and the GF(4)-span of (1,1,0,0), (0,0,1,1), sigma = (1,2,3)...(10,11,12).
BinaryCode assembled_12(const std::vector<std::string_view>& a_rows) {
  std::vector<BitVector> rows;
  for (auto a : a_rows) {
    BitVector v(12);
    for (std::size_t k = 0; k < 4; ++k) {
      if (a[k] == '1') {
        for (std::size_t j = 0; j < 3; ++j) v.set(3 * k + j);
      }
    }
    rows.push_back(v);
  }
  // e_1 = x + x^2 and its multiples by x, x^2 written on a block.
  for (std::string_view block : {"011", "101", "110"}) {
    for (std::size_t pair = 0; pair < 2; ++pair) {
      BitVector v(12);
      for (std::size_t j = 0; j < 3; ++j) {
        if (block[j] == '1') {
          v.set(6 * pair + j);
          v.set(6 * pair + 3 + j);
        }
      }
      rows.push_back(v);
    }
  }
  return BinaryCode::span(12, rows);
}

}  // namespace

TEST_CASE("decompose examples") {
  const auto c = code_of(6, {"111000", "000111"});
  const auto s = perm("(1,2,3)(4,5,6)", 6);
  auto d = decompose(c, s);
  CHECK(d.fixed == c);
  CHECK(d.even.dimension() == 0);
  CHECK(d.projected == BinaryCode::full(2));
  CHECK(d.type == CycleType::prime(3, 2, 0));

  const auto even4 = code_of(4, {"1100", "0110", "0011"});
  d = decompose(even4, perm("(1,2,3)", 4));
  CHECK(d.fixed.dimension() == 1);
  CHECK(d.even.dimension() == 2);
  CHECK(d.fixed == code_of(4, {"1111"}));
  CHECK(d.projected.length() == 2);
  CHECK(d.projected == code_of(2, {"11"}));

  CHECK_THROWS_AS(decompose(code_of(4, {"1100"}), perm("(1,2,3)", 4)), DomainError);
  CHECK_THROWS_AS(decompose(extended_hamming(), hamming_translation(1)), DomainError);
  CHECK_THROWS_AS(decompose(code_of(6, {"111111"}), perm("(1,2,3)(4,5)", 6)), DomainError);
}

TEST_CASE("golay with a fixed point free element of order 3") {
  const auto g = extended_golay();
  const auto s = golay_order3();
  REQUIRE(is_automorphism(g, s));
  const auto d = decompose(g, s);
  CHECK(d.type == CycleType::prime(3, 8, 0));
  CHECK(d.fixed.dimension() == 4);
  CHECK(d.even.dimension() == 8);
  CHECK(d.projected.length() == 8);
  CHECK(is_self_dual(d.projected));
  const auto image = phi_p_image(d);
  CHECK(image.coords() == 8);
  CHECK(image.dimension_f2() == 8);  // GF(4)-dimension 4
  CHECK(hermitian_self_dual(image));
  const auto flags = yorgov_check(g, s);
  CHECK(flags.code_self_dual);
  CHECK(flags.side_b());
}

TEST_CASE("phi_p examples") {
  const auto part = orbit_partition(perm("(1,2,3)(4,5,6)", 6));
  auto v = phi_p(bits("110000"), part, 3);
  CHECK(v == QVector{q(3, "110"), q(3, "000")});
  v = phi_p(bits("011101"), part, 3);
  CHECK(v == QVector{q(3, "011"), q(3, "101")});
  CHECK(phi_p(BitVector(6), part, 3) == QVector{QuotientPoly::zero(3), QuotientPoly::zero(3)});
  CHECK(phi_p_inverse(v, part, 6) == bits("011101"));
}

TEST_CASE("phi_p intertwines sigma with multiplication by x") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const unsigned p = (i % 2) ? 5 : 3;
    const std::size_t c = 1 + rng() % 3;
    const std::size_t n = p * c + rng() % 3;
    const auto s = random_cycle_shape(rng, n, {{p, c}});
    const auto part = orbit_partition(s);
    const auto v = random_vector(rng, n);
    const auto image = phi_p(v, part, p);
    const auto moved = phi_p(act(v, s), part, p);
    for (std::size_t k = 0; k < c; ++k) CHECK(moved[k] == image[k].shift(1));
  }
}

TEST_CASE("component dims") {
  const auto g = extended_golay();
  const auto s = golay_order3();
  const auto comps = component_dims(g, s);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].dimension == 8);
  const auto none = component_dims(code_of(6, {"111000", "000111"}), perm("(1,2,3)(4,5,6)", 6));
  REQUIRE(none.size() == 1);
  CHECK(none[0].dimension == 0);

  Rng rng(77);
  const auto sigma = perm("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14);
  const auto code = random_invariant_self_dual(rng, cyclic_group(sigma), 14);
  REQUIRE(code.has_value());
  const auto dims = component_dims(*code, sigma);
  REQUIRE(dims.size() == 2);
  const auto d = decompose(*code, sigma);
  CHECK(dims[0].dimension + dims[1].dimension == d.even.dimension());
  CHECK(dims[0].dimension % 3 == 0);
  CHECK(dims[1].dimension % 3 == 0);
  CHECK_THROWS_AS(yorgov_check(*code, sigma), DomainError);
}

TEST_CASE("hermitian self-duality examples") {
  const auto one = q(3, "011");
  const auto zero = QuotientPoly::zero(3);
  const QVector v11{one, one};
  CHECK(hermitian_self_dual(IdealCode::span(3, 2, std::vector<QVector>{v11})));
  CHECK_FALSE(hermitian_self_dual(IdealCode(3, 2, BinaryCode(6))));
  const QVector v10{one, zero};
  CHECK_FALSE(hermitian_self_dual(IdealCode::span(3, 2, std::vector<QVector>{v10})));
  const QVector odd{one, one, one};
  CHECK_FALSE(hermitian_self_dual(IdealCode::span(3, 3, std::vector<QVector>{odd})));
}

TEST_CASE("self-duality equivalence examples") {
  const auto s = perm("(1,2,3)(4,5,6)(7,8,9)(10,11,12)", 12);
  const auto good = assembled_12({"1100", "0011"});
  REQUIRE(good.dimension() == 6);
  REQUIRE(is_automorphism(good, s));
  auto flags = yorgov_check(good, s);
  CHECK(flags.code_self_dual);
  CHECK(flags.projection_self_dual);
  CHECK(flags.image_hermitian_self_dual);

  const auto bad = assembled_12({"1000", "0100"});
  REQUIRE(is_automorphism(bad, s));
  flags = yorgov_check(bad, s);
  CHECK_FALSE(flags.code_self_dual);
  CHECK_FALSE(flags.side_b());
}

TEST_CASE("fixed plus even subcode on random invariant codes") {
  Rng rng(101);
  for (int i = 0; i < 150; ++i) {
    const unsigned p = std::array<unsigned, 3>{3, 5, 7}[i % 3];
    const std::size_t c = 1 + rng() % 3;
    const std::size_t n = std::min<std::size_t>(18, p * c + rng() % 4);
    const std::size_t cycles = std::min(c, n / p);
    const auto s = random_cycle_shape(rng, n, {{p, cycles}});
    const auto code = random_invariant_code(rng, cyclic_group(s), n, 1 + rng() % 3);
    if (code.dimension() > 16) continue;
    const auto d = decompose(code, s);
    CHECK(intersection(d.fixed, d.even).dimension() == 0);
    CHECK(code_sum(d.fixed, d.even) == code);
    CHECK(d.projected.dimension() == d.fixed.dimension());

    const auto counts = brute_counts(code, s);
    CHECK(counts.fixed == (std::size_t{1} << d.fixed.dimension()));
    CHECK(counts.even == (std::size_t{1} << d.even.dimension()));

    // Definitional form: E = C intersected with the dual of the orbit indicators.
    std::vector<BitVector> indicators;
    for (const auto& orbit : orbit_partition(s).orbits) {
      BitVector v(n);
      for (auto k : orbit) v.set(k);
      indicators.push_back(v);
    }
    CHECK(d.even == intersection(code, dual(BinaryCode::span(n, indicators))));
  }
}

TEST_CASE("self-duality equivalence on invariant self-dual codes") {
  Rng rng(202);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const unsigned p = (i % 2) ? 5 : 3;
    const std::size_t c = 2 * (1 + rng() % 2);
    const std::size_t f = 2 * (rng() % 2);
    const std::size_t n = p * c + f;
    const auto s = random_cycle_shape(rng, n, {{p, c}});
    const auto code = random_invariant_self_dual(rng, cyclic_group(s), n);
    if (!code) continue;
    ++checked;
    const auto flags = yorgov_check(*code, s);
    CHECK(flags.code_self_dual);
    CHECK(flags.projection_self_dual);
    CHECK(flags.image_hermitian_self_dual);
  }
  CHECK(checked >= 20);
}
