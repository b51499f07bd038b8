#include "primroot/ff_arith.hpp"

#include <stdexcept>
#include <string>

namespace primroot {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
  if (n < 2) {
    throw std::invalid_argument("factorize: n must be >= 2, got " + std::to_string(n));
  }
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      factors.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto q : factorize(n)) {
    if (out.empty() || out.back() != q) out.push_back(q);
  }
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  __extension__ using wide = unsigned __int128;
  const auto mod = static_cast<std::uint64_t>(m);
  auto b = static_cast<std::uint64_t>(mod_floor(base, m));
  std::uint64_t result = 1;
  while (exp > 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>(wide{result} * b % mod);
    b = static_cast<std::uint64_t>(wide{b} * b % mod);
    exp >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  const auto r = mod_floor(a, m);
  if (r == 0) throw std::invalid_argument("inverse_mod: zero has no inverse");
  // m is prime throughout this library: Fermat's little theorem.
  return pow_mod(r, static_cast<std::uint64_t>(m - 2), m);
}

OddPrime::OddPrime(std::int64_t value) : value_(value) {
  if (value < 3 || !is_prime(static_cast<std::uint64_t>(value))) {
    throw std::invalid_argument(std::to_string(value) + " is not an odd prime");
  }
}

bool is_primitive_root(OddPrime p, std::int64_t g) {
  const auto n = p.group_order();
  if (mod_floor(g, p.value()) == 0) return false;
  for (auto q : distinct_prime_factors(static_cast<std::uint64_t>(n))) {
    if (pow_mod(g, static_cast<std::uint64_t>(n) / q, p.value()) == 1) return false;
  }
  return true;
}

PrimitiveRoot::PrimitiveRoot(OddPrime p, std::int64_t g) : p_(p), g_(g) {
  if (g < 2 || g > p.value() - 1 || !is_primitive_root(p, g)) {
    throw std::invalid_argument(std::to_string(g) + " is not a primitive root modulo " +
                                std::to_string(p.value()));
  }
}

PrimitiveRoot find_primitive_root(OddPrime p) {
  for (std::int64_t g = 2; g < p.value(); ++g) {
    if (is_primitive_root(p, g)) return PrimitiveRoot(p, g);
  }
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

std::vector<std::int64_t> all_primitive_roots(OddPrime p) {
  std::vector<std::int64_t> roots;
  for (std::int64_t g = 2; g < p.value(); ++g) {
    if (is_primitive_root(p, g)) roots.push_back(g);
  }
  return roots;
}

Residue canonical_rep(std::int64_t x, OddPrime p) {
  const auto r = mod_floor(x, p.value());
  if (r == 0) {
    throw std::invalid_argument("canonical_rep: " + std::to_string(x) + " is 0 mod " +
                                std::to_string(p.value()));
  }
  return Residue(p, r);
}

}  // namespace primroot
