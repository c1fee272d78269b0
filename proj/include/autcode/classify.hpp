#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "autcode/permutation.hpp"

namespace autcode {

struct ClassifyParams {
  std::size_t n = 72;
  std::vector<CycleType> admissible{CycleType::prime(2, 36, 0), CycleType::prime(3, 24, 0),
                                    CycleType::prime(5, 14, 2)};
  /// Fixed points of an element of order 5.
  std::size_t f5 = 2;
  /// Exponents delta with |N(sigma_5)| = 2^delta * 5 considered admissible.
  std::vector<unsigned> deltas{0, 1};
  unsigned two_cap = 10;
  unsigned three_cap = 6;
  unsigned five_cap = 1;
};

/// Throws InputError when an admissible type does not have degree n.
void validate(const ClassifyParams& params);

struct TypeVerdict {
  bool admissible = false;
  std::string reason;
};

/// Accepts sigma iff it has prime order and its cycle type is listed in params.
TypeVerdict admissible_type_filter(const Permutation& sigma, const ClassifyParams& params);
TypeVerdict admissible_type_filter(const CycleType& type, const ClassifyParams& params);

/// All prime cycle types p-(c,f) with p*c + f = n, c >= 1, p prime <= n.
std::vector<CycleType> prime_cycle_types(std::size_t n);

/// Orders m = 2^a 3^b 5^c that survive the Burnside count, ascending.
std::vector<std::uint64_t> burnside_order_list(const ClassifyParams& params);

}  // namespace autcode
