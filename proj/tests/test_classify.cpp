#include <doctest.h>

#include <algorithm>
#include <set>

#include "autcode/classify.hpp"
#include "autcode/errors.hpp"
#include "instances.hpp"

using namespace autcode;
using namespace testsupport;

namespace {

// n/m + f5 * 4/(2^delta * 5) as a single fraction, checked for integrality.
std::set<std::uint64_t> oracle_orders(std::uint64_t n, std::uint64_t f5, const std::vector<unsigned>& deltas) {
  std::set<std::uint64_t> out;
  for (std::uint64_t a = 1; a <= 1024; a *= 2) {
    for (std::uint64_t b = 1; b <= 729; b *= 3) {
      for (std::uint64_t c : {1, 5}) {
        const std::uint64_t m = a * b * c;
        if (c == 1) {
          if (n % m == 0) out.insert(m);
          continue;
        }
        for (unsigned d : deltas) {
          const std::uint64_t den = (std::uint64_t{1} << d) * 5;
          if ((4 * m) % den != 0) continue;
          const std::uint64_t num = n * den + f5 * 4 * m;
          if (num % (m * den) == 0 && num / (m * den) >= 1) out.insert(m);
        }
      }
    }
  }
  return out;
}

bool naive_prime(std::size_t v) {
  if (v < 2) return false;
  for (std::size_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default order list") {
  const auto list = burnside_order_list(ClassifyParams{});
  const std::vector<std::uint64_t> expected{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 18, 24, 30, 36, 60, 72, 180, 360};
  CHECK(list == expected);
  const auto oracle = oracle_orders(72, 2, {0, 1});
  CHECK(std::vector<std::uint64_t>(oracle.begin(), oracle.end()) == list);
  CHECK(std::find(list.begin(), list.end(), 20) == list.end());
}

TEST_CASE("no order-5 part gives the 3-smooth divisors") {
  ClassifyParams params;
  params.five_cap = 0;
  const std::vector<std::uint64_t> expected{1, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72};
  CHECK(burnside_order_list(params) == expected);
}

TEST_CASE("order list properties") {
  for (std::size_t n : {24u, 48u, 72u, 96u, 120u}) {
    for (std::size_t f5 : {0u, 2u, 4u}) {
      ClassifyParams params;
      params.n = n;
      params.f5 = f5;
      params.admissible.clear();
      const auto list = burnside_order_list(params);
      CHECK(std::is_sorted(list.begin(), list.end()));
      const auto oracle = oracle_orders(n, f5, params.deltas);
      CHECK(std::vector<std::uint64_t>(oracle.begin(), oracle.end()) == list);
      for (auto m : list) {
        auto r = m;
        unsigned fives = 0;
        while (r % 2 == 0) r /= 2;
        while (r % 3 == 0) r /= 3;
        while (r % 5 == 0) {
          r /= 5;
          ++fives;
        }
        CHECK(r == 1);
        CHECK(fives <= 1);
        if (fives == 0) CHECK(n % m == 0);
      }

      // Enlarging the delta set keeps every candidate.
      auto wider = params;
      wider.deltas = {0, 1, 2};
      const auto more = burnside_order_list(wider);
      for (auto m : list) CHECK(std::find(more.begin(), more.end(), m) != more.end());
      auto narrower = params;
      narrower.deltas = {0};
      for (auto m : burnside_order_list(narrower)) CHECK(std::find(list.begin(), list.end(), m) != list.end());
    }
  }
}

TEST_CASE("parameter validation") {
  ClassifyParams params;
  params.n = 70;
  CHECK_THROWS_AS(validate(params), InputError);
  CHECK_THROWS_AS(burnside_order_list(params), InputError);
  params.admissible.clear();
  CHECK_NOTHROW(validate(params));
  ClassifyParams capped;
  capped.two_cap = 40;
  CHECK_THROWS_AS(validate(capped), InputError);
}

TEST_CASE("admissible type examples") {
  const ClassifyParams params;
  CHECK(admissible_type_filter(CycleType::prime(2, 36, 0), params).admissible);
  CHECK_FALSE(admissible_type_filter(CycleType::prime(2, 34, 4), params).admissible);
  CHECK_FALSE(admissible_type_filter(CycleType::prime(7, 10, 2), params).admissible);
  CHECK(admissible_type_filter(CycleType::prime(5, 14, 2), params).admissible);

  std::vector<std::size_t> image(72);
  for (std::size_t i = 0; i < 72; ++i) image[i] = i % 6 == 5 ? i - 5 : i + 1;
  const auto verdict = admissible_type_filter(Permutation(image), params);
  CHECK_FALSE(verdict.admissible);
  CHECK(verdict.reason == "composite order");
  CHECK(admissible_type_filter(Permutation::identity(72), params).reason == "identity");

  for (std::size_t i = 0; i < 72; ++i) image[i] = i ^ 1;
  CHECK(admissible_type_filter(Permutation(image), params).admissible);
}

TEST_CASE("prime cycle types of 72") {
  const auto types = prime_cycle_types(72);
  std::size_t expected = 0;
  for (std::size_t p = 2; p <= 72; ++p) {
    if (naive_prime(p)) expected += 72 / p;
  }
  CHECK(types.size() == expected);
  std::vector<std::string> accepted;
  for (const auto& t : types) {
    CHECK(t.p * t.c + t.f == 72);
    if (admissible_type_filter(t, ClassifyParams{}).admissible) accepted.push_back(t.to_string());
  }
  std::sort(accepted.begin(), accepted.end());
  CHECK(accepted == std::vector<std::string>{"2-(36,0)", "3-(24,0)", "5-(14,2)"});
}
