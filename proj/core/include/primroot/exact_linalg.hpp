#pragma once

// Exact linear algebra over Z, Q and F_q on arbitrary-precision integer matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "primroot/ff_arith.hpp"

namespace primroot {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix diagonal(const std::vector<BigInt>& diag, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Text form: first line "rows cols", then one row per line, space separated.
void write_matrix(std::ostream& os, const IntegerMatrix& m);
/// Parses the text form; throws std::runtime_error on malformed input.
IntegerMatrix read_matrix(std::istream& is);

/// Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
std::size_t rank_rational(const IntegerMatrix& m);

/// Determinant of a square matrix (Bareiss). Throws std::invalid_argument if not square.
BigInt determinant(const IntegerMatrix& m);

/// Rank over F_p.
std::size_t rank_mod_p(const IntegerMatrix& m, OddPrime p);

/// Rank over F_q for any prime q, including q = 2. Throws if q is not prime.
std::size_t rank_mod_prime(const IntegerMatrix& m, std::uint64_t q);

/// Smith diagonal, non-negative, length min(rows, cols).
class InvariantFactors {
 public:
  InvariantFactors() = default;
  explicit InvariantFactors(std::vector<BigInt> diagonal) : diagonal_(std::move(diagonal)) {}

  const std::vector<BigInt>& diagonal() const { return diagonal_; }
  std::size_t size() const { return diagonal_.size(); }
  std::size_t nonzero_count() const;
  /// d[i] | d[i+1] for nonzero successors, zeros trailing, all entries >= 0.
  bool is_valid_chain() const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;

 private:
  std::vector<BigInt> diagonal_;
};

/// left * m * right = diag(factors), with left and right unimodular.
struct SmithDecomposition {
  InvariantFactors factors;
  IntegerMatrix left;
  IntegerMatrix right;
};

InvariantFactors smith_normal_form(const IntegerMatrix& m);
SmithDecomposition smith_decomposition(const IntegerMatrix& m);

}  // namespace primroot
