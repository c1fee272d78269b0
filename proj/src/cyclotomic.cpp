#include "autcode/cyclotomic.hpp"

#include <algorithm>
#include <bit>

#include "autcode/errors.hpp"

namespace autcode {

namespace {

unsigned __int128 clmul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 acc = 0;
  while (a != 0) {
    const int k = std::countr_zero(a);
    acc ^= static_cast<unsigned __int128>(b) << k;
    a &= a - 1;
  }
  return acc;
}

void divmod(Poly2 a, Poly2 m, Poly2& quotient, Poly2& remainder) {
  if (m.is_zero()) throw DomainError("polynomial division by zero");
  const int dm = m.degree();
  std::uint64_t q = 0;
  std::uint64_t r = a.bits;
  for (int dr = Poly2{r}.degree(); dr >= dm; dr = Poly2{r}.degree()) {
    q |= std::uint64_t{1} << (dr - dm);
    r ^= m.bits << (dr - dm);
  }
  quotient = Poly2{q};
  remainder = Poly2{r};
}

// Returns (g, u) with u*a = g mod b, g = gcd(a, b).
std::pair<Poly2, Poly2> ext_gcd_left(Poly2 a, Poly2 b) {
  Poly2 r0 = a, r1 = b;
  Poly2 s0{1}, s1{0};
  while (!r1.is_zero()) {
    Poly2 q, r;
    divmod(r0, r1, q, r);
    const Poly2 s2{s0.bits ^ poly_mul(q, s1).bits};
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  return {r0, s0};
}

// Coefficient vectors compared from the leading coefficient down; factors of equal
// degree then sort as x^3+x+1 < x^3+x^2+1.
bool coefficient_less(Poly2 a, Poly2 b) { return a.bits < b.bits; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

int Poly2::degree() const { return bits == 0 ? -1 : 63 - std::countl_zero(bits); }

std::string Poly2::to_string() const {
  if (bits == 0) return "0";
  std::string s;
  for (int k = 0; k < 64; ++k) {
    if (((bits >> k) & 1U) == 0) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += '1';
    } else if (k == 1) {
      s += 'x';
    } else {
      s += "x^" + std::to_string(k);
    }
  }
  return s;
}

Poly2 poly_mul(Poly2 a, Poly2 b) {
  const auto wide = clmul(a.bits, b.bits);
  if ((wide >> 64) != 0) throw InputError("polynomial product exceeds degree 63");
  return Poly2{static_cast<std::uint64_t>(wide)};
}

Poly2 poly_mod(Poly2 a, Poly2 m) {
  Poly2 q, r;
  divmod(a, m, q, r);
  return r;
}

Poly2 poly_div(Poly2 a, Poly2 m) {
  Poly2 q, r;
  divmod(a, m, q, r);
  return q;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
  while (!b.is_zero()) {
    const Poly2 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

Poly2 poly_reciprocal(Poly2 a) {
  const int d = a.degree();
  std::uint64_t out = 0;
  for (int k = 0; k <= d; ++k) {
    if ((a.bits >> k) & 1U) out |= std::uint64_t{1} << (d - k);
  }
  return Poly2{out};
}

QuotientPoly::QuotientPoly(unsigned p, std::uint64_t bits) : p_(p), bits_(bits) {
  if (p == 0 || p >= 64) throw InputError("quotient ring modulus degree must be in 1..63");
  if (p < 64 && (bits >> p) != 0) throw InputError("coefficient beyond x^(p-1)");
}

QuotientPoly QuotientPoly::from_poly(unsigned p, Poly2 f) {
  std::uint64_t folded = 0;
  for (int k = 0; k < 64; ++k) {
    if ((f.bits >> k) & 1U) folded ^= std::uint64_t{1} << (static_cast<unsigned>(k) % p);
  }
  return {p, folded};
}

QuotientPoly QuotientPoly::from_coefficients(unsigned p, std::string_view coeffs) {
  if (coeffs.size() != p) {
    throw ParseError("polynomial coefficient string '" + std::string(coeffs) + "' must have " +
                     std::to_string(p) + " characters");
  }
  std::uint64_t bits = 0;
  for (unsigned k = 0; k < p; ++k) {
    if (coeffs[k] == '1') {
      bits |= std::uint64_t{1} << k;
    } else if (coeffs[k] != '0') {
      throw ParseError("invalid coefficient character in '" + std::string(coeffs) + "'");
    }
  }
  return {p, bits};
}

QuotientPoly QuotientPoly::from_bits(const BitVector& coeffs) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs.test(k)) bits |= std::uint64_t{1} << k;
  }
  return {static_cast<unsigned>(coeffs.size()), bits};
}

std::size_t QuotientPoly::weight() const { return static_cast<std::size_t>(std::popcount(bits_)); }

QuotientPoly& QuotientPoly::operator+=(const QuotientPoly& other) {
  if (other.p_ != p_) throw InputError("sum of residues modulo different x^p+1");
  bits_ ^= other.bits_;
  return *this;
}

QuotientPoly operator*(const QuotientPoly& a, const QuotientPoly& b) {
  if (a.p_ != b.p_) throw InputError("product of residues modulo different x^p+1");
  std::uint64_t acc = 0;
  std::uint64_t rest = a.bits_;
  while (rest != 0) {
    const auto k = static_cast<unsigned>(std::countr_zero(rest));
    acc ^= b.shift(k).bits_;
    rest &= rest - 1;
  }
  return {a.p_, acc};
}

QuotientPoly QuotientPoly::pow(std::uint64_t e) const {
  QuotientPoly result = one(p_);
  QuotientPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base.square();
    e >>= 1U;
  }
  return result;
}

QuotientPoly QuotientPoly::shift(unsigned k) const {
  k %= p_;
  if (k == 0) return *this;
  const std::uint64_t mask = (std::uint64_t{1} << p_) - 1;
  return {p_, ((bits_ << k) | (bits_ >> (p_ - k))) & mask};
}

QuotientPoly QuotientPoly::reversed() const {
  std::uint64_t out = bits_ & 1U;
  for (unsigned k = 1; k < p_; ++k) {
    if ((bits_ >> k) & 1U) out |= std::uint64_t{1} << (p_ - k);
  }
  return {p_, out};
}

BitVector QuotientPoly::to_bits() const {
  BitVector v(p_);
  for (unsigned k = 0; k < p_; ++k) v.set(k, coefficient(k));
  return v;
}

std::string QuotientPoly::coefficients() const { return to_bits().to_string(); }

bool is_odd_prime(unsigned p) { return p > 2 && is_prime(p); }

unsigned ord2_mod_p(unsigned p) {
  if (!is_odd_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
  unsigned m = 1;
  std::uint64_t power = 2 % p;
  while (power != 1) {
    power = (power * 2) % p;
    ++m;
  }
  return m;
}

std::vector<unsigned> cyclotomic_coset(unsigned p, unsigned k) {
  std::vector<unsigned> coset;
  unsigned j = k % p;
  do {
    coset.push_back(j);
    j = (2 * j) % p;
  } while (j != k % p);
  std::sort(coset.begin(), coset.end());
  return coset;
}

std::size_t IdealDecomposition::dual_index(std::size_t j) const {
  const Poly2 target = poly_reciprocal(factors.at(j));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == target) return i;
  }
  throw DomainError("no reciprocal factor found");
}

IdealDecomposition factor_xp1(unsigned p) {
  if (!is_odd_prime(p) || p >= 64) throw InputError("x^p+1 factorization needs an odd prime p < 64");
  IdealDecomposition dec;
  dec.p = p;
  dec.s = ord2_mod_p(p);
  dec.t = (p - 1) / dec.s;

  // Idempotents of Q are exactly the residues whose coefficients are constant on the
  // cyclotomic cosets; refining {1} by every coset indicator yields the primitive ones.
  std::vector<QuotientPoly> atoms{QuotientPoly::one(p)};
  std::vector<bool> covered(p, false);
  for (unsigned k = 0; k < p; ++k) {
    if (covered[k]) continue;
    std::uint64_t indicator = 0;
    for (auto j : cyclotomic_coset(p, k)) {
      covered[j] = true;
      indicator |= std::uint64_t{1} << j;
    }
    const QuotientPoly m(p, indicator);
    std::vector<QuotientPoly> refined;
    for (const auto& e : atoms) {
      const QuotientPoly inside = e * m;
      const QuotientPoly outside = e * (QuotientPoly::one(p) + m);
      if (!inside.is_zero()) refined.push_back(inside);
      if (!outside.is_zero()) refined.push_back(outside);
    }
    atoms = std::move(refined);
  }

  const Poly2 modulus{(std::uint64_t{1} << p) | 1U};
  for (const auto& e : atoms) {
    const Poly2 complement{e.bits() ^ 1U};
    dec.factors.push_back(poly_gcd(modulus, complement));
  }
  std::sort(dec.factors.begin(), dec.factors.end(), [](Poly2 a, Poly2 b) {
    const bool a_linear = a.bits == 0b11;
    const bool b_linear = b.bits == 0b11;
    if (a_linear != b_linear) return a_linear;
    return coefficient_less(a, b);
  });
  if (dec.factors.size() != dec.t + 1 || dec.factors.front().bits != 0b11) {
    throw std::logic_error("factorization of x^p+1 produced an unexpected factor count");
  }
  for (const auto& q : dec.factors) dec.generators.push_back(QuotientPoly::from_poly(p, poly_div(modulus, q)));
  return dec;
}

std::vector<QuotientPoly> crt_idempotents(const IdealDecomposition& dec) {
  std::vector<QuotientPoly> idempotents;
  const Poly2 modulus{(std::uint64_t{1} << dec.p) | 1U};
  for (const auto& q : dec.factors) {
    const Poly2 cofactor = poly_div(modulus, q);
    // u * cofactor = 1 mod q, so u * cofactor is 1 mod q and 0 mod every other factor.
    const auto [g, u] = ext_gcd_left(cofactor, q);
    if (g.bits != 1) throw std::logic_error("factors of x^p+1 are not coprime");
    idempotents.push_back(QuotientPoly::from_poly(dec.p, poly_mul(poly_mod(u, q), cofactor)));
  }
  return idempotents;
}

IdealDecomposition ideal_decomposition(unsigned p) {
  IdealDecomposition dec = factor_xp1(p);
  dec.idempotents = crt_idempotents(dec);
  return dec;
}

IdealField::IdealField(const IdealDecomposition& dec, std::size_t j)
    : p_(dec.p), index_(j), degree_(dec.ideal_degree(j)) {
  if (j >= dec.ideal_count()) throw InputError("ideal index out of range");
  identity_ = dec.idempotents.empty() ? crt_idempotents(dec)[j] : dec.idempotents[j];
}

bool IdealField::contains(const QuotientPoly& a) const {
  return a.modulus_degree() == p_ && a * identity_ == a;
}

void IdealField::require_member(const QuotientPoly& a) const {
  if (!contains(a)) throw DomainError("residue " + a.to_string() + " is not in the ideal");
}

QuotientPoly IdealField::element(std::uint64_t m) const {
  QuotientPoly acc = QuotientPoly::zero(p_);
  for (unsigned k = 0; k < degree_; ++k) {
    if ((m >> k) & 1U) acc += identity_.shift(k);
  }
  return acc;
}

QuotientPoly IdealField::add(const QuotientPoly& a, const QuotientPoly& b) const {
  require_member(a);
  require_member(b);
  return a + b;
}

QuotientPoly IdealField::mul(const QuotientPoly& a, const QuotientPoly& b) const {
  require_member(a);
  require_member(b);
  return a * b;
}

QuotientPoly IdealField::pow(const QuotientPoly& a, std::uint64_t e) const {
  require_member(a);
  QuotientPoly result = identity_;
  QuotientPoly base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base.square();
    e >>= 1U;
  }
  return result;
}

QuotientPoly IdealField::inverse(const QuotientPoly& a) const {
  require_member(a);
  if (a.is_zero()) throw DomainError("inverse of zero");
  return pow(a, multiplicative_order() - 1);
}

std::uint64_t IdealField::element_order(const QuotientPoly& a) const {
  require_member(a);
  if (a.is_zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t order = multiplicative_order();
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && pow(a, order / r) == identity_) order /= r;
  }
  return order;
}

QuotientPoly IdealField::primitive_element() const {
  const std::uint64_t full = multiplicative_order();
  const auto factors = prime_factors(full);
  for (std::uint64_t m = 1; m <= full; ++m) {
    const QuotientPoly a = element(m);
    const bool primitive = std::none_of(factors.begin(), factors.end(),
                                        [&](std::uint64_t r) { return pow(a, full / r) == identity_; });
    if (primitive) return a;
  }
  throw std::logic_error("multiplicative group of a finite field is not cyclic");
}

FrobeniusHalf frobenius_half_map(unsigned p) {
  if (ord2_mod_p(p) != p - 1) {
    throw DomainError("half Frobenius needs s(p) = p-1; s(" + std::to_string(p) + ") = " +
                      std::to_string(ord2_mod_p(p)));
  }
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t k = 1; k <= (p - 1) / 2; ++k) cycles.push_back({k, p - k});
  return FrobeniusHalf{p, Permutation::from_cycles(p, cycles), std::uint64_t{1} << ((p - 1) / 2)};
}

QuotientPoly frobenius_half(const IdealField& field, const QuotientPoly& a) {
  const unsigned p = field.p();
  if (ord2_mod_p(p) != p - 1 || field.degree() != p - 1) {
    throw DomainError("half Frobenius needs the field ideal of degree p-1");
  }
  if (!field.contains(a)) throw DomainError("residue " + a.to_string() + " is not in the ideal");
  QuotientPoly r = a;
  for (unsigned k = 0; k < (p - 1) / 2; ++k) r = r.square();
  return r;
}

QuotientPoly trace_half(const IdealField& field, const QuotientPoly& a) {
  return a + frobenius_half(field, a);
}

}  // namespace autcode
