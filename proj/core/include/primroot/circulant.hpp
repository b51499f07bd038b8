#pragma once

// The circulant matrix T_p = circ(a_0, ..., a_{p-2}) with a_j = g^j mod p, and its
// spectrum through the discrete Fourier basis.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primroot/characters.hpp"
#include "primroot/exact_linalg.hpp"
#include "primroot/ff_arith.hpp"

namespace primroot {

/// Entry (i, j) is first_row[(j - i) mod (p-1)]: row i is the i-fold right shift of row 0.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(PrimitiveRoot g);

  OddPrime prime() const { return g_.prime(); }
  const PrimitiveRoot& root() const { return g_; }
  std::size_t order() const { return first_row_.size(); }
  std::span<const std::int64_t> first_row() const { return first_row_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const;

  /// The full (p-1) x (p-1) integer matrix.
  IntegerMatrix materialize() const;

 private:
  PrimitiveRoot g_;
  std::vector<std::int64_t> first_row_;
};

/// Rows of space-separated integers, one per line, newline-terminated.
std::string to_text(const CirculantMatrix& t);

CirculantMatrix build_tp(PrimitiveRoot g);
/// Throws std::invalid_argument if g does not generate F_p^x.
CirculantMatrix build_tp(OddPrime p, std::int64_t g);

struct ShiftedRow {
  std::vector<std::int64_t> entries;
  /// s in {1, ..., p-1} with entries = s * first_row (mod p); equals g^{-i}.
  std::int64_t scalar = 1;
};

/// Row i with its scalar relation to row 0 over F_p. Throws std::out_of_range for i >= p-1.
ShiftedRow row(const CirculantMatrix& t, std::size_t i);

struct Spectrum {
  /// lambda_k = sum_j first_row[j] exp(2 pi i j k / (p-1)), k = 0..p-2.
  std::vector<Complex> eigenvalues;
  std::int64_t nonzero_count = 0;
  double zero_tolerance = 0.0;
};

/// Direct O(n^2) DFT of the first row, default tolerance 1e-9 p (p-1).
Spectrum eigenvalues(const CirculantMatrix& t);
Spectrum eigenvalues(const CirculantMatrix& t, double zero_tolerance);

/// max_k |lambda_k - S(chi_k)|: the DFT against direct first-moment summation.
double crosscheck_spectrum(PrimitiveRoot g);

/// Outcome of comparing SNF(T_p) with (1, p x (p-1)/2, 0 x (p-3)/2).
struct SnfConjectureReport {
  std::int64_t p = 0;
  std::int64_t g = 0;
  bool holds = false;
  InvariantFactors diagonal;
  InvariantFactors expected;
};

/// Largest prime accepted by check_snf_conjecture.
inline constexpr std::int64_t kSnfMaxPrime = 200;

/// The conjectured Smith diagonal of T_p.
InvariantFactors conjectured_snf(OddPrime p);

/// Throws std::out_of_range for p > kSnfMaxPrime.
SnfConjectureReport check_snf_conjecture(PrimitiveRoot g);

}  // namespace primroot
