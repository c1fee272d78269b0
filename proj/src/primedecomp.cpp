#include "autcode/primedecomp.hpp"

#include "autcode/cyclotomic.hpp"
#include "autcode/errors.hpp"

namespace autcode {

namespace {

unsigned odd_prime_order(const Permutation& sigma) {
  const auto order = sigma.order();
  if (order >= 64 || !is_odd_prime(static_cast<unsigned>(order))) {
    throw DomainError("automorphism order " + std::to_string(order) + " is not an odd prime below 64");
  }
  return static_cast<unsigned>(order);
}

}  // namespace

PrimeAutDecomposition decompose(const BinaryCode& code, const Permutation& sigma) {
  if (code.length() != sigma.degree()) throw InputError("permutation degree does not match code length");
  const unsigned p = odd_prime_order(sigma);
  if (!is_automorphism(code, sigma)) throw DomainError(sigma.to_string() + " is not an automorphism of the code");

  PrimeAutDecomposition d;
  d.code = code;
  d.sigma = sigma;
  d.type = cycle_type(sigma, p);
  d.orbits = orbit_partition(sigma);
  d.fixed = fixed_code(code, sigma);
  d.even = kernel_subcode(code, [&](const BitVector& v) {
    BitVector parity(d.orbits.size());
    for (std::size_t k = 0; k < d.orbits.size(); ++k) {
      bool bit = false;
      for (auto i : d.orbits.orbits[k]) bit ^= v.test(i);
      parity.set(k, bit);
    }
    return parity;
  });
  d.projected = project_orbits(d.fixed, d.orbits);

  if (!is_direct_sum(d.fixed, d.even) || code_sum(d.fixed, d.even) != code) {
    throw std::logic_error("fixed and even subcodes do not decompose the code");
  }
  return d;
}

QVector phi_p(const BitVector& v, const OrbitPartition& orbits, unsigned p) {
  QVector out;
  out.reserve(orbits.cycle_count);
  for (std::size_t k = 0; k < orbits.cycle_count; ++k) {
    const auto& orbit = orbits.orbits[k];
    if (orbit.size() != p) throw InputError("orbit length differs from p");
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < p; ++j) {
      if (v.test(orbit[j])) bits |= std::uint64_t{1} << j;
    }
    out.emplace_back(p, bits);
  }
  return out;
}

BitVector phi_p_inverse(const QVector& v, const OrbitPartition& orbits, std::size_t length) {
  if (v.size() != orbits.cycle_count) throw InputError("vector length does not match the number of cycles");
  BitVector out(length);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& orbit = orbits.orbits[k];
    if (v[k].modulus_degree() != orbit.size()) throw InputError("entry modulus differs from the cycle length");
    for (std::size_t j = 0; j < orbit.size(); ++j) out.set(orbit[j], v[k].coefficient(static_cast<unsigned>(j)));
  }
  return out;
}

IdealCode phi_p_image(const PrimeAutDecomposition& d) {
  const unsigned p = d.p();
  const auto dec = ideal_decomposition(p);
  if (dec.s != p - 1) {
    throw DomainError("phi_p image over a single field needs s(p) = p-1; use component_dims for p = " +
                      std::to_string(p));
  }
  const IdealField field(dec, 1);
  std::vector<QVector> vectors;
  for (const auto& row : d.even.basis()) {
    auto image = phi_p(row, d.orbits, p);
    for (const auto& entry : image) {
      if (!field.contains(entry)) throw std::logic_error("phi_p image left the field ideal");
    }
    vectors.push_back(std::move(image));
  }
  return IdealCode::span(p, d.type.c, vectors);
}

std::vector<ComponentDim> component_dims(const BinaryCode& code, const Permutation& sigma) {
  const auto d = decompose(code, sigma);
  const auto dec = ideal_decomposition(d.p());
  std::vector<ComponentDim> dims;
  std::size_t total = 0;
  for (std::size_t j = 1; j < dec.ideal_count(); ++j) {
    const BitVector coeffs = dec.idempotents[j].to_bits();
    const auto component = image_code(d.even, code.length(), [&](const BitVector& v) {
      return apply_group_poly(v, sigma, coeffs);
    });
    dims.push_back({j, component.dimension()});
    total += component.dimension();
  }
  if (total != d.even.dimension()) throw std::logic_error("ideal components do not add up to E(sigma)");
  return dims;
}

bool hermitian_self_dual(const IdealCode& code) {
  const unsigned p = code.p();
  if (ord2_mod_p(p) != p - 1) throw DomainError("hermitian self-duality over I_1 needs s(p) = p-1");
  const auto dec = ideal_decomposition(p);
  const IdealField field(dec, 1);
  for (const auto& v : code.basis()) {
    for (const auto& entry : v) {
      if (!field.contains(entry)) throw DomainError("entry " + entry.to_string() + " is not in the field ideal");
    }
  }
  const IdealCode closed = ideal_span(code);
  const std::size_t c = code.coords();
  if (c % 2 != 0) return false;
  if (closed.dimension_f2() != (p - 1) * c / 2) return false;
  const auto basis = closed.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (!hermitian_form(basis[i], basis[j]).is_zero()) return false;
    }
  }
  return true;
}

YorgovFlags yorgov_check(const BinaryCode& code, const Permutation& sigma) {
  const auto d = decompose(code, sigma);
  if (ord2_mod_p(d.p()) != d.p() - 1) throw DomainError("the equivalence check needs s(p) = p-1");
  YorgovFlags flags;
  flags.code_self_dual = is_self_dual(code);
  flags.projection_self_dual = is_self_dual(d.projected);
  flags.image_hermitian_self_dual = hermitian_self_dual(phi_p_image(d));
  return flags;
}

}  // namespace autcode
