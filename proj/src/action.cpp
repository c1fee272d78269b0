#include "autcode/action.hpp"

#include <algorithm>

#include "autcode/errors.hpp"

namespace autcode {

OrbitPartition orbit_partition(const Permutation& sigma) {
  OrbitPartition part;
  const std::size_t n = sigma.degree();
  part.orbits = sigma.cycles();
  part.cycle_count = part.orbits.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma(i) == i) part.orbits.push_back({i});
  }
  part.orbit_of.assign(n, 0);
  for (std::size_t k = 0; k < part.orbits.size(); ++k) {
    for (auto i : part.orbits[k]) part.orbit_of[i] = k;
  }
  return part;
}

BitVector act(const BitVector& v, const Permutation& sigma) {
  if (v.size() != sigma.degree()) throw InputError("permutation degree does not match vector length");
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.test(i)) out.set(sigma(i));
  }
  return out;
}

BinaryCode act(const BinaryCode& code, const Permutation& sigma) {
  if (code.length() != sigma.degree()) throw InputError("permutation degree does not match code length");
  return image_code(code, code.length(), [&](const BitVector& v) { return act(v, sigma); });
}

bool is_automorphism(const BinaryCode& code, const Permutation& sigma) {
  if (code.length() != sigma.degree()) throw InputError("permutation degree does not match code length");
  return std::all_of(code.basis().begin(), code.basis().end(),
                     [&](const BitVector& row) { return code.contains(act(row, sigma)); });
}

BinaryCode fixed_code(const BinaryCode& code, const Permutation& sigma) {
  if (code.length() != sigma.degree()) throw InputError("permutation degree does not match code length");
  return kernel_subcode(code, [&](const BitVector& v) { return v ^ act(v, sigma); });
}

BitVector project_orbits(const BitVector& v, const OrbitPartition& partition) {
  BitVector out(partition.size());
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& orbit = partition.orbits[k];
    const bool bit = v.test(orbit.front());
    for (auto i : orbit) {
      if (v.test(i) != bit) throw DomainError("vector is not constant on the orbits");
    }
    out.set(k, bit);
  }
  return out;
}

BinaryCode project_orbits(const BinaryCode& fixed, const OrbitPartition& partition) {
  return image_code(fixed, partition.size(),
                    [&](const BitVector& v) { return project_orbits(v, partition); });
}

BitVector lift_orbits(const BitVector& v, const OrbitPartition& partition, std::size_t length) {
  if (v.size() != partition.size()) throw InputError("vector length does not match the number of orbits");
  BitVector out(length);
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if (!v.test(k)) continue;
    for (auto i : partition.orbits[k]) out.set(i);
  }
  return out;
}

Permutation eta_projection(const Permutation& tau, const Permutation& sigma) {
  if (tau.degree() != sigma.degree()) throw InputError("permutations of different degree");
  if (!commute(tau, sigma)) throw DomainError("eta projection needs tau in the centralizer of sigma");
  const auto part = orbit_partition(sigma);
  std::vector<std::size_t> image(part.size());
  for (std::size_t k = 0; k < part.size(); ++k) image[k] = part.orbit_of[tau(part.orbits[k].front())];
  return Permutation(std::move(image));
}

BitVector apply_group_poly(const BitVector& v, const Permutation& sigma, const BitVector& coeffs) {
  BitVector acc(v.size());
  BitVector power = v;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs.test(k)) acc ^= power;
    power = act(power, sigma);
  }
  return acc;
}

}  // namespace autcode
