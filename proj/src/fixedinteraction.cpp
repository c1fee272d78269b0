#include "autcode/fixedinteraction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "autcode/action.hpp"
#include "autcode/errors.hpp"

namespace autcode {

namespace {

void require_automorphisms(const BinaryCode& code, const std::vector<Permutation>& elements) {
  for (const auto& g : elements) {
    if (g.degree() != code.length()) throw InputError("permutation degree does not match code length");
    if (!is_automorphism(code, g)) throw DomainError(g.to_string() + " is not an automorphism");
  }
}

unsigned prime_order(const Permutation& sigma) {
  const auto order = sigma.order();
  if (order == 1) return 1;
  if (!is_prime(order)) throw DomainError(sigma.to_string() + " does not have prime order");
  return static_cast<unsigned>(order);
}

// Projects the code onto the orbits of sigma restricted to its own fixed code, then reorders
// the coordinates so that a projected coordinate with smaller `key` comes first.
BinaryCode reorder(const BinaryCode& code, const std::vector<std::size_t>& key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<std::size_t> image(key.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) image[order[pos]] = pos;
  return act(code, Permutation(std::move(image)));
}

struct DoubleProjection {
  Permutation eta;
  BinaryCode projected;
  bool automorphism = false;
  BinaryCode doubled;
};

// pi_{eta}(pi_{outer}(C(outer))(eta)) with eta = eta_{outer}(inner); coordinates sorted by
// the minimal original coordinate of each orbit of <outer, inner>.
DoubleProjection double_projection(const BinaryCode& code, const Permutation& outer, const Permutation& inner) {
  DoubleProjection out;
  const auto part = orbit_partition(outer);
  out.eta = eta_projection(inner, outer);
  out.projected = project_orbits(fixed_code(code, outer), part);
  out.automorphism = is_automorphism(out.projected, out.eta);
  const auto eta_part = orbit_partition(out.eta);
  const auto doubled = project_orbits(fixed_code(out.projected, out.eta), eta_part);
  std::vector<std::size_t> key;
  for (const auto& orbit_of_orbits : eta_part.orbits) {
    std::size_t least = code.length();
    for (const auto k : orbit_of_orbits) least = std::min(least, part.orbits[k].front());
    key.push_back(least);
  }
  out.doubled = reorder(doubled, key);
  return out;
}

}  // namespace

BinaryCode sum_fixed_codes(const BinaryCode& code, const std::vector<Permutation>& elements) {
  require_automorphisms(code, elements);
  BinaryCode acc(code.length());
  for (const auto& g : elements) acc = code_sum(acc, fixed_code(code, g));
  return acc;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<Permutation> seen{Permutation::identity(gens.empty() ? degree : gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        auto h = compose(g, s);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Theorem6Result theorem6_check(const BinaryCode& code, const std::vector<Permutation>& e_gens,
                              const std::vector<Permutation>& h_gens, const Permutation& e0) {
  require_automorphisms(code, e_gens);
  require_automorphisms(code, h_gens);
  require_automorphisms(code, {e0});
  const std::size_t n = code.length();
  const auto e_group = generate_group(e_gens, n);
  const auto h_group = generate_group(h_gens, n);

  std::optional<std::uint64_t> exponent;
  for (const auto& a : e_group) {
    if (a.is_identity()) continue;
    const auto order = a.order();
    if (!is_prime(order) || (exponent && *exponent != order)) {
      throw HypothesisError("E is not elementary abelian");
    }
    exponent = order;
    for (const auto& b : e_gens) {
      if (!commute(a, b)) throw HypothesisError("E is not abelian");
    }
  }
  if (!exponent) throw HypothesisError("E is trivial");
  if (e0.is_identity() || !std::binary_search(e_group.begin(), e_group.end(), e0)) {
    throw HypothesisError("e_0 is not a non-identity element of E");
  }

  std::set<Permutation> orbit;
  for (const auto& kappa : h_group) {
    const auto image = conjugate(e0, kappa);
    if (!std::binary_search(e_group.begin(), e_group.end(), image)) throw HypothesisError("H does not normalize E");
    orbit.insert(image);
  }
  if (orbit.size() != e_group.size() - 1) {
    throw HypothesisError("H is not transitive on the non-identity elements of E");
  }

  Theorem6Result result;
  std::vector<Permutation> nonidentity;
  for (const auto& a : e_group) {
    if (!a.is_identity()) nonidentity.push_back(a);
  }
  result.lhs = sum_fixed_codes(code, nonidentity);
  const auto base = fixed_code(code, e0);
  result.rhs = BinaryCode(n);
  for (const auto& kappa : h_group) result.rhs = code_sum(result.rhs, act(base, kappa));
  result.equal = result.lhs == result.rhs;
  return result;
}

QuotientProfile quotient_profile(const BinaryCode& code, const std::vector<Permutation>& elements,
                                 const Permutation& sigma_p) {
  QuotientProfile out;
  out.d = sum_fixed_codes(code, elements);
  const auto d_dual = dual(out.d);
  if (!d_dual.contains(out.d)) throw DomainError("D is not contained in D^perp");
  if (sigma_p.degree() != code.length()) throw InputError("permutation degree does not match code length");
  if (act(out.d, sigma_p) != out.d) throw DomainError("sigma_p does not preserve D");
  out.dim_d = out.d.dimension();
  out.dim_d_dual = d_dual.dimension();
  out.dim_quotient = out.dim_d_dual - out.dim_d;

  // D^perp = D + span(reps); reps are the D^perp basis rows whose reduction mod D is new.
  BinaryCode grown = out.d;
  for (const auto& row : d_dual.basis()) {
    if (grown.contains(row)) continue;
    out.representatives.push_back(row);
    grown = code_sum(grown, BinaryCode::span(code.length(), std::vector<BitVector>{row}));
  }
  out.representatives = rref(code.length(), out.representatives).basis();

  // v -> v^sigma + v lands in D exactly for the fixed cosets.
  std::vector<BitVector> images;
  for (const auto& r : out.representatives) images.push_back(out.d.reduce(act(r, sigma_p) ^ r));
  out.sigma_p_fixed_dim = kernel_combinations(images).size();
  return out;
}

Remark7Report remark7_check(const BinaryCode& code, const Permutation& sigma_p, const Permutation& sigma_q) {
  if (sigma_p.degree() != code.length() || sigma_q.degree() != code.length()) {
    throw InputError("permutation degree does not match code length");
  }
  if (!commute(sigma_p, sigma_q)) throw DomainError("sigma_p and sigma_q do not commute");
  const unsigned p = prime_order(sigma_p);
  const unsigned q = prime_order(sigma_q);
  require_automorphisms(code, {sigma_p, sigma_q});

  Remark7Report report;
  const auto side_p = double_projection(code, sigma_p, sigma_q);
  const auto side_q = double_projection(code, sigma_q, sigma_p);
  report.eta_pq = side_p.eta;
  report.eta_qp = side_q.eta;
  report.flag_a = side_p.automorphism;
  report.flag_b = side_q.automorphism;
  report.double_p = side_p.doubled;
  report.double_q = side_q.doubled;
  report.flag_c = report.double_p == report.double_q;

  if (p > 1 && q > 1 && p != q) {
    const auto t = cycle_type(compose(sigma_p, sigma_q), p, q);
    report.product_type = t;
    const auto orbit_type = [](const Permutation& eta, unsigned prime) {
      try {
        return cycle_type(eta, prime);
      } catch (const CycleTypeError&) {
        return CycleType::prime(0, 0, eta.degree());
      }
    };
    report.type_pq = orbit_type(report.eta_pq, q);
    report.type_qp = orbit_type(report.eta_qp, p);
    report.flag_d = *report.type_pq == CycleType::prime(q, t.c + t.b, t.a + t.f) &&
                    *report.type_qp == CycleType::prime(p, t.c + t.a, t.b + t.f);
  }
  return report;
}

}  // namespace autcode
