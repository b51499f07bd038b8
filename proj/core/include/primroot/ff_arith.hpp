#pragma once

// Arithmetic in the prime field F_p: primality, factoring of small integers,
// modular exponentiation and primitive roots.

#include <cstdint>
#include <vector>

namespace primroot {

/// Deterministic primality test (trial division by 6k +- 1).
bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending. Throws std::invalid_argument for n < 2.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// base^exp mod m in {0, ..., m-1}. base may be negative. Throws for m < 2.
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// Inverse of a modulo a prime m. Throws if a = 0 mod m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Least non-negative residue of x mod m.
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

class OddPrime {
 public:
  /// Throws std::invalid_argument unless value is an odd prime.
  explicit OddPrime(std::int64_t value);

  std::int64_t value() const { return value_; }
  /// Order of the multiplicative group, p - 1.
  std::int64_t group_order() const { return value_ - 1; }

  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  std::int64_t value_;
};

/// A generator g of F_p^x, 2 <= g <= p-1.
class PrimitiveRoot {
 public:
  /// Throws std::invalid_argument if g is out of range or does not generate F_p^x.
  PrimitiveRoot(OddPrime p, std::int64_t g);

  OddPrime prime() const { return p_; }
  std::int64_t value() const { return g_; }

  friend bool operator==(const PrimitiveRoot&, const PrimitiveRoot&) = default;

 private:
  OddPrime p_;
  std::int64_t g_;
};

/// Generator test: g^((p-1)/q) != 1 for every prime q | p-1.
bool is_primitive_root(OddPrime p, std::int64_t g);

/// Smallest primitive root >= 2.
PrimitiveRoot find_primitive_root(OddPrime p);

/// All primitive roots in {2, ..., p-1}, ascending; phi(p-1) of them.
std::vector<std::int64_t> all_primitive_roots(OddPrime p);

/// Canonical representative in {1, ..., p-1} of a nonzero residue class.
class Residue {
 public:
  OddPrime prime() const { return p_; }
  std::int64_t rep() const { return rep_; }

  friend Residue canonical_rep(std::int64_t x, OddPrime p);
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(OddPrime p, std::int64_t rep) : p_(p), rep_(rep) {}
  OddPrime p_;
  std::int64_t rep_;
};

/// Throws std::invalid_argument when x = 0 mod p.
Residue canonical_rep(std::int64_t x, OddPrime p);

}  // namespace primroot
