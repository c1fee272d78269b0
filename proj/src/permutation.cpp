#include "autcode/permutation.hpp"

#include <cctype>
#include <numeric>

#include "autcode/errors.hpp"

namespace autcode {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto j : image_) {
    if (j >= image_.size() || seen[j]) throw InputError("image list is not a permutation");
    seen[j] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> image(degree);
  std::iota(image.begin(), image.end(), std::size_t{0});
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto from = cycle[k];
      if (from >= degree) throw InputError("cycle entry " + std::to_string(from + 1) + " out of range");
      if (used[from]) throw InputError("cycle entry " + std::to_string(from + 1) + " repeated");
      used[from] = true;
      p.image_[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  auto skip_space = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_number = [&](std::size_t& i) -> std::size_t {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("permutation: expected a number at offset " + std::to_string(i));
    }
    std::size_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      if (value > degree + 1) value = degree + 1;  // clamp; reported below
      ++i;
    }
    if (value == 0 || value > degree) {
      throw ParseError("permutation: entry out of range 1.." + std::to_string(degree));
    }
    return value - 1;
  };

  std::size_t i = 0;
  skip_space(i);
  if (i == text.size()) return identity(degree);

  if (text[i] != '(') {
    std::vector<std::size_t> image;
    while (i < text.size()) {
      image.push_back(read_number(i));
      skip_space(i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space(i);
      }
    }
    if (image.size() != degree) {
      throw ParseError("permutation: image list has " + std::to_string(image.size()) +
                       " entries, expected " + std::to_string(degree));
    }
    std::vector<bool> seen(degree, false);
    for (auto j : image) {
      if (seen[j]) throw ParseError("permutation: repeated element " + std::to_string(j + 1));
      seen[j] = true;
    }
    return Permutation(std::move(image));
  }

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(degree, false);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("permutation: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<std::size_t> cycle;
    skip_space(i);
    while (i < text.size() && text[i] != ')') {
      const auto j = read_number(i);
      if (seen[j]) throw ParseError("permutation: repeated element " + std::to_string(j + 1));
      seen[j] = true;
      cycle.push_back(j);
      skip_space(i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space(i);
      }
    }
    if (i == text.size()) throw ParseError("permutation: unterminated cycle");
    ++i;  // ')'
    cycles.push_back(std::move(cycle));
    skip_space(i);
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv = identity(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv.image_[image_[i]] = i;
  return inv;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(image_.size());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& cycle : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = start; !seen[j]; j = image_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) count += image_[i] == i ? 1 : 0;
  return count;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cycle : cs) {
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) s += ',';
      s += std::to_string(cycle[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree()) throw InputError("composition of permutations of different degree");
  std::vector<std::size_t> image(first.degree());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = second(first(i));
  return Permutation(std::move(image));
}

Permutation conjugate(const Permutation& tau, const Permutation& sigma) {
  return compose(compose(sigma.inverse(), tau), sigma);
}

bool commute(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

std::string CycleType::to_string() const {
  if (!is_composite()) {
    return std::to_string(p) + "-(" + std::to_string(c) + "," + std::to_string(f) + ")";
  }
  return std::to_string(p * q) + "-(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ";" + std::to_string(f) + ")";
}

CycleType cycle_type(const Permutation& sigma, unsigned p) {
  if (!is_prime(p)) throw InputError("cycle type requested for non-prime " + std::to_string(p));
  std::size_t cycles = 0;
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() != p) {
      throw CycleTypeError("permutation has a cycle of length " + std::to_string(cycle.size()) +
                           ", expected order " + std::to_string(p));
    }
    ++cycles;
  }
  return CycleType::prime(p, cycles, sigma.fixed_points());
}

CycleType cycle_type(const Permutation& sigma, unsigned p, unsigned q) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw InputError("composite cycle type needs two distinct primes");
  }
  CycleType t = CycleType::composite(p, q, 0, 0, 0, sigma.fixed_points());
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() == p) {
      ++t.a;
    } else if (cycle.size() == q) {
      ++t.b;
    } else if (cycle.size() == static_cast<std::size_t>(p) * q) {
      ++t.c;
    } else {
      throw CycleTypeError("permutation has a cycle of length " + std::to_string(cycle.size()) +
                           ", not dividing " + std::to_string(p * q));
    }
  }
  return t;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace autcode
