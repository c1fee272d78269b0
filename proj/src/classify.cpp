#include "autcode/classify.hpp"

#include <algorithm>

#include "autcode/errors.hpp"

namespace autcode {

void validate(const ClassifyParams& params) {
  for (const auto& t : params.admissible) {
    if (t.degree() != params.n) throw InputError("admissible type " + t.to_string() + " does not have degree n");
  }
  if (params.two_cap > 20 || params.three_cap > 12 || params.five_cap > 8) throw InputError("exponent cap too large");
}

TypeVerdict admissible_type_filter(const CycleType& type, const ClassifyParams& params) {
  if (type.is_composite()) return {false, "composite order"};
  if (type.c == 0) return {false, "identity"};
  if (std::find(params.admissible.begin(), params.admissible.end(), type) != params.admissible.end()) {
    return {true, "admissible type " + type.to_string()};
  }
  return {false, "type " + type.to_string() + " is not admissible"};
}

TypeVerdict admissible_type_filter(const Permutation& sigma, const ClassifyParams& params) {
  const auto order = sigma.order();
  if (order == 1) return {false, "identity"};
  if (!is_prime(order)) return {false, "composite order"};
  return admissible_type_filter(cycle_type(sigma, static_cast<unsigned>(order)), params);
}

std::vector<CycleType> prime_cycle_types(std::size_t n) {
  std::vector<CycleType> out;
  for (std::size_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t c = 1; p * c <= n; ++c) out.push_back(CycleType::prime(static_cast<unsigned>(p), c, n - p * c));
  }
  return out;
}

std::vector<std::uint64_t> burnside_order_list(const ClassifyParams& params) {
  validate(params);
  const std::uint64_t n = params.n;
  std::vector<std::uint64_t> out;
  std::uint64_t pow2 = 1;
  for (unsigned a = 0; a <= params.two_cap; ++a, pow2 *= 2) {
    std::uint64_t pow3 = 1;
    for (unsigned b = 0; b <= params.three_cap; ++b, pow3 *= 3) {
      std::uint64_t pow5 = 1;
      for (unsigned c = 0; c <= params.five_cap; ++c, pow5 *= 5) {
        const std::uint64_t m = pow2 * pow3 * pow5;
        bool accepted = false;
        if (c == 0) {
          accepted = n % m == 0;
        } else {
          for (const unsigned delta : params.deltas) {
            const std::uint64_t denom = (std::uint64_t{1} << delta) * 5;
            if ((4 * m) % denom != 0) continue;
            const std::uint64_t n5 = 4 * m / denom;
            const std::uint64_t total = n + params.f5 * n5;
            if (n5 > 0 && total % m == 0) accepted = true;
          }
        }
        if (accepted) out.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace autcode
