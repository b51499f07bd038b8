#pragma once

// Multiplicative and additive characters of F_p and the character sums built
// from them: Gauss sums, Jacobi sums and the first moments
//   S(chi) = sum_{x in F_p^x} rep(x) chi(x).
// All sums are evaluated directly in double precision.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "primroot/ff_arith.hpp"

namespace primroot {

using Complex = std::complex<double>;

/// Discrete logarithms base g and the (p-1)-th roots of unity, built once per (p, g).
class CharacterTable {
 public:
  /// Builds the tables and checks that chi_{(p-1)/2} agrees with Euler's criterion.
  explicit CharacterTable(PrimitiveRoot g);

  OddPrime prime() const { return g_.prime(); }
  const PrimitiveRoot& root() const { return g_; }
  std::int64_t group_order() const { return g_.prime().group_order(); }

  /// j with g^j = x mod p, for x != 0 mod p.
  std::int64_t dlog(std::int64_t x) const;
  /// g^j mod p as a canonical representative.
  std::int64_t power(std::int64_t j) const;
  /// exp(2 pi i m / (p-1)).
  Complex unit_root(std::int64_t m) const;

 private:
  PrimitiveRoot g_;
  std::vector<std::int64_t> dlog_;    // indexed by residue, dlog_[0] unused
  std::vector<std::int64_t> powers_;  // powers_[j] = g^j
  std::vector<Complex> roots_;
};

/// The character chi_k(g^j) = exp(2 pi i k j / (p-1)), with chi_k(0) = 0.
class MultCharacter {
 public:
  /// Throws std::out_of_range unless 0 <= k <= p-2.
  MultCharacter(std::shared_ptr<const CharacterTable> table, std::int64_t k);

  Complex operator()(std::int64_t x) const;

  std::int64_t index() const { return k_; }
  OddPrime prime() const { return table_->prime(); }
  std::int64_t root() const { return table_->root().value(); }
  const std::shared_ptr<const CharacterTable>& table() const { return table_; }

  bool is_trivial() const { return k_ == 0; }
  /// chi(-1) = (-1)^k since -1 = g^((p-1)/2).
  bool is_even() const { return k_ % 2 == 0; }
  int value_at_minus_one() const { return is_even() ? 1 : -1; }

  /// chi * psi; throws std::invalid_argument if (p, g) differ.
  MultCharacter operator*(const MultCharacter& other) const;
  /// The conjugate character chi_{-k}.
  MultCharacter conjugate() const;

 private:
  std::shared_ptr<const CharacterTable> table_;
  std::int64_t k_;
};

/// Convenience: the whole family chi_0, ..., chi_{p-2} sharing one table.
class CharacterFamily {
 public:
  explicit CharacterFamily(PrimitiveRoot g);

  MultCharacter operator[](std::int64_t k) const { return MultCharacter(table_, k); }
  MultCharacter trivial() const { return (*this)[0]; }
  /// rho = chi_{(p-1)/2}.
  MultCharacter quadratic() const { return (*this)[table_->group_order() / 2]; }
  std::int64_t size() const { return table_->group_order(); }
  OddPrime prime() const { return table_->prime(); }
  const PrimitiveRoot& root() const { return table_->root(); }

 private:
  std::shared_ptr<const CharacterTable> table_;
};

/// e_p(t) = exp(2 pi i t / p), t reduced mod p first.
Complex additive_char(OddPrime p, std::int64_t t);

/// G(chi) = sum_{x in F_p} chi(x) e_p(x).
Complex gauss_sum(const MultCharacter& chi);

/// J(chi, psi) = sum_{x in F_p} chi(x) psi(1 - x).
Complex jacobi_sum(const MultCharacter& chi, const MultCharacter& psi);

/// S(chi) = sum_{x=1}^{p-1} x chi(x).
Complex first_moment(const MultCharacter& chi);

/// Natural zero threshold for first moments: 1e-9 p (p-1).
double zero_tolerance(OddPrime p);

/// Audit threshold: 1e-8 max(|lhs|, |rhs|, 1).
double audit_tolerance(Complex lhs, Complex rhs);

enum class Verdict { kMatch, kMismatch, kNotApplicable };

std::string_view to_string(Verdict v);

struct IdentityAuditReport {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> k2;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  Verdict verdict = Verdict::kNotApplicable;
};

/// (1 + chi(-1)) S(chi) against p chi(-1) sum_{x != 0} chi(x). Holds for every k.
IdentityAuditReport check_parity_identity(const MultCharacter& chi);

/// J(chi, psi) against G(chi) G(psi) / G(chi psi) when chi, psi and chi psi are all
/// nontrivial; NotApplicable otherwise.
IdentityAuditReport check_jacobi_gauss(const MultCharacter& chi, const MultCharacter& psi);

/// |G(chi)|^2 against p, relative tolerance 1e-6. NotApplicable for the trivial character.
IdentityAuditReport check_gauss_magnitude(const MultCharacter& chi);

/// S(chi) against -G(chi) G(chi rho) / G(rho) for odd chi. Both sides are reported as
/// computed; the verdict is never forced. NotApplicable for even chi.
IdentityAuditReport audit_lemma_formula(const MultCharacter& chi);

enum class MomentClass { kTrivialNonzero, kEvenZero, kOddNonzero };

std::string_view to_string(MomentClass c);

struct MomentEntry {
  std::int64_t k = 0;
  Complex value;
  MomentClass expected = MomentClass::kTrivialNonzero;
  /// False if |value| disagrees with the expected class under the zero tolerance.
  bool consistent = true;
};

struct MomentClassification {
  std::int64_t p = 0;
  std::int64_t g = 0;
  double zero_tolerance = 0.0;
  std::vector<MomentEntry> entries;
  /// Entries whose expected class is nonzero: (p+1)/2 by construction.
  std::int64_t nonzero_count = 0;
  /// Entries numerically above the zero tolerance.
  std::int64_t numeric_nonzero_count = 0;

  bool consistent() const;
};

/// S(chi_k) for k = 0..p-2, classified by parity and cross-checked numerically.
MomentClassification classify_first_moments(PrimitiveRoot g);

}  // namespace primroot
