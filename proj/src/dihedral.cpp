#include "autcode/dihedral.hpp"

#include "autcode/action.hpp"
#include "autcode/cyclotomic.hpp"
#include "autcode/errors.hpp"
#include "autcode/primedecomp.hpp"

namespace autcode {

namespace {

void require_field_entries(const IdealCode& code) {
  const auto dec = ideal_decomposition(code.p());
  const IdealField field(dec, 1);
  for (const auto& v : code.basis()) {
    for (const auto& entry : v) {
      if (!field.contains(entry)) throw DomainError("entry " + entry.to_string() + " is not in the field ideal");
    }
  }
}

Permutation block_pair_swap(std::size_t c) {
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t m = 0; m + 1 < c; m += 2) cycles.push_back({m, m + 1});
  return Permutation::from_cycles(c, cycles);
}

}  // namespace

DihedralContext DihedralContext::canonical(unsigned p, std::size_t n) {
  if (!is_odd_prime(p) || p >= 64) throw InputError("p must be an odd prime below 64");
  if (ord2_mod_p(p) != p - 1) throw InputError("dihedral construction needs s(p) = p-1");
  if (n == 0 || n % (2 * p) != 0) throw InputError("2p must divide n");
  DihedralContext ctx;
  ctx.p = p;
  ctx.n = n;
  ctx.c = n / p;
  std::vector<std::vector<std::size_t>> p_cycles;
  std::vector<std::vector<std::size_t>> swaps;
  for (std::size_t b = 0; b < ctx.c; ++b) {
    std::vector<std::size_t> cycle;
    for (std::size_t i = 0; i < p; ++i) cycle.push_back(b * p + i);
    p_cycles.push_back(std::move(cycle));
  }
  for (std::size_t b = 0; b < ctx.c; b += 2) {
    const std::size_t left = b * p;
    const std::size_t right = (b + 1) * p;
    swaps.push_back({left, right});
    for (std::size_t i = 1; i < p; ++i) swaps.push_back({left + i, right + (p - i)});
  }
  ctx.sigma_p = Permutation::from_cycles(n, p_cycles);
  ctx.sigma_2 = Permutation::from_cycles(n, swaps);
  if (conjugate(ctx.sigma_p, ctx.sigma_2) != ctx.sigma_p.inverse()) {
    throw std::logic_error("canonical permutations violate the dihedral relation");
  }
  return ctx;
}

std::vector<QuotientPoly> subfield_basis(unsigned p) {
  std::vector<QuotientPoly> basis;
  for (unsigned k = 1; k <= (p - 1) / 2; ++k) {
    basis.push_back(QuotientPoly::monomial(p, k) + QuotientPoly::monomial(p, p - k));
  }
  return basis;
}

IdealCode subfield_span(const IdealCode& code) {
  const auto basis = subfield_basis(code.p());
  return scalar_closure(code, basis);
}

QuotientPoly trace_hermitian_form(const QVector& u, const QVector& v) {
  if (u.size() != v.size() || u.empty()) throw InputError("trace form of vectors with different lengths");
  QuotientPoly acc = QuotientPoly::zero(u.front().modulus_degree());
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i].reversed() + u[i].reversed() * v[i];
  return acc;
}

bool trace_hermitian_self_dual(const IdealCode& b, unsigned p, std::size_t c) {
  if (b.p() != p) throw InputError("code is over the wrong quotient ring");
  if (c % 2 != 0 || b.coords() != c / 2) {
    throw InputError("B must have c/2 = " + std::to_string(c / 2) + " coordinates");
  }
  require_field_entries(b);
  const IdealCode closed = subfield_span(b);
  if (((p - 1) * c) % 4 != 0 || closed.dimension_f2() != (p - 1) * c / 4) return false;
  const auto basis = closed.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!trace_hermitian_form(basis[i], basis[j]).is_zero()) return false;
    }
  }
  return true;
}

BinaryCode construct(const DihedralPair& pair, const DihedralContext& ctx) {
  if (pair.a.length() != ctx.c) throw InputError("A must have length c = " + std::to_string(ctx.c));
  if (!is_self_dual(pair.a)) throw DomainError("A is not self-dual");
  if (!is_automorphism(pair.a, block_pair_swap(ctx.c))) {
    throw DomainError("A is not invariant under the block-pair swap induced by sigma_2");
  }
  if (!trace_hermitian_self_dual(pair.b, ctx.p, ctx.c)) throw DomainError("B is not trace-Hermitian self-dual");

  const auto part = orbit_partition(ctx.sigma_p);
  std::vector<BitVector> rows;
  for (const auto& a : pair.a.basis()) rows.push_back(lift_orbits(a, part, ctx.n));

  std::vector<QVector> lifted;
  for (const auto& beta : subfield_span(pair.b).basis()) {
    QVector v;
    v.reserve(ctx.c);
    for (const auto& entry : beta) {
      v.push_back(entry);
      v.push_back(entry.reversed());
    }
    lifted.push_back(std::move(v));
  }
  const IdealCode span = ideal_span(IdealCode::span(ctx.p, ctx.c, lifted));
  for (const auto& v : span.basis()) rows.push_back(phi_p_inverse(v, part, ctx.n));

  BinaryCode code = BinaryCode::span(ctx.n, rows);
  if (!is_self_dual(code) || !is_automorphism(code, ctx.sigma_p) || !is_automorphism(code, ctx.sigma_2)) {
    throw std::logic_error("dihedral construction produced a code without the expected structure");
  }
  return code;
}

Extraction extract_pair(const BinaryCode& code, const DihedralContext& ctx, ExtractOptions options) {
  if (code.length() != ctx.n) throw InputError("code length does not match the dihedral context");
  if (!is_self_dual(code)) throw DomainError("extraction needs a self-dual code");
  if (!is_automorphism(code, ctx.sigma_p)) throw DomainError("sigma_p is not an automorphism");
  if (!is_automorphism(code, ctx.sigma_2)) throw DomainError("sigma_2 is not an automorphism");

  Extraction result;
  result.hypothesis_met =
      is_self_dual(project_orbits(fixed_code(code, ctx.sigma_2), orbit_partition(ctx.sigma_2)));
  if (options.require_hypothesis && !result.hypothesis_met) {
    throw HypothesisError("pi_sigma_2(C(sigma_2)) is not self-dual");
  }

  const auto d = decompose(code, ctx.sigma_p);
  result.pair.a = d.projected;

  const auto even_fixed = fixed_code(d.even, ctx.sigma_2);
  std::vector<QVector> halves;
  for (const auto& row : even_fixed.basis()) {
    const auto image = phi_p(row, d.orbits, ctx.p);
    QVector half;
    for (std::size_t i = 0; i < image.size(); i += 2) half.push_back(image[i]);
    halves.push_back(std::move(half));
  }
  result.pair.b = IdealCode::span(ctx.p, ctx.c / 2, halves);

  const std::size_t expected = (ctx.p - 1) * ctx.c / 4;
  if (2 * result.pair.b.dimension_f2() != d.even.dimension() || result.pair.b.dimension_f2() != expected) {
    throw HypothesisError("extracted B has F2-dimension " + std::to_string(result.pair.b.dimension_f2()) +
                          ", expected " + std::to_string(expected));
  }
  if (!is_self_dual(result.pair.a) || !trace_hermitian_self_dual(result.pair.b, ctx.p, ctx.c)) {
    throw HypothesisError("extracted pair is not self-dual");
  }
  return result;
}

}  // namespace autcode
