#include "primroot/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primroot {

CirculantMatrix::CirculantMatrix(PrimitiveRoot g) : g_(g) {
  const auto p = g.prime().value();
  first_row_.resize(static_cast<std::size_t>(g.prime().group_order()));
  std::int64_t x = 1;
  for (auto& a : first_row_) {
    a = x;
    x = x * g.value() % p;
  }
}

std::int64_t CirculantMatrix::operator()(std::size_t i, std::size_t j) const {
  const auto n = order();
  return first_row_[(j + n - i % n) % n];
}

IntegerMatrix CirculantMatrix::materialize() const {
  const auto n = order();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  }
  return m;
}

std::string to_text(const CirculantMatrix& t) {
  std::string out;
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(t(i, j));
    }
    out += '\n';
  }
  return out;
}

CirculantMatrix build_tp(PrimitiveRoot g) { return CirculantMatrix(g); }

CirculantMatrix build_tp(OddPrime p, std::int64_t g) { return CirculantMatrix(PrimitiveRoot(p, g)); }

ShiftedRow row(const CirculantMatrix& t, std::size_t i) {
  if (i >= t.order()) {
    throw std::out_of_range("row index " + std::to_string(i) + " outside [0, " +
                            std::to_string(t.order() - 1) + "]");
  }
  const auto p = t.prime().value();
  ShiftedRow out;
  out.entries.reserve(t.order());
  for (std::size_t j = 0; j < t.order(); ++j) out.entries.push_back(t(i, j));
  const auto base = t.first_row();
  out.scalar = out.entries[0] * inverse_mod(base[0], p) % p;
  for (std::size_t j = 0; j < t.order(); ++j) {
    if (out.scalar * base[j] % p != out.entries[j]) {
      throw std::logic_error("row " + std::to_string(i) + " is not a scalar multiple of row 0");
    }
  }
  return out;
}

Spectrum eigenvalues(const CirculantMatrix& t) { return eigenvalues(t, zero_tolerance(t.prime())); }

Spectrum eigenvalues(const CirculantMatrix& t, double tolerance) {
  const CharacterTable table(t.root());
  const auto n = static_cast<std::int64_t>(t.order());
  const auto row0 = t.first_row();
  Spectrum s;
  s.zero_tolerance = tolerance;
  s.eigenvalues.resize(t.order());
  for (std::int64_t k = 0; k < n; ++k) {
    Complex lambda{};
    for (std::int64_t j = 0; j < n; ++j) {
      lambda += static_cast<double>(row0[static_cast<std::size_t>(j)]) * table.unit_root(j * k % n);
    }
    s.eigenvalues[static_cast<std::size_t>(k)] = lambda;
    if (std::abs(lambda) > tolerance) ++s.nonzero_count;
  }
  return s;
}

double crosscheck_spectrum(PrimitiveRoot g) {
  const auto spectrum = eigenvalues(build_tp(g));
  const CharacterFamily family(g);
  double worst = 0.0;
  for (std::int64_t k = 0; k < family.size(); ++k) {
    worst = std::max(worst, std::abs(spectrum.eigenvalues[static_cast<std::size_t>(k)] -
                                     first_moment(family[k])));
  }
  return worst;
}

InvariantFactors conjectured_snf(OddPrime p) {
  const auto n = static_cast<std::size_t>(p.group_order());
  std::vector<BigInt> diag(n, BigInt(0));
  diag[0] = 1;
  for (std::size_t i = 1; i <= n / 2; ++i) diag[i] = static_cast<long>(p.value());
  return InvariantFactors(std::move(diag));
}

SnfConjectureReport check_snf_conjecture(PrimitiveRoot g) {
  const auto p = g.prime();
  if (p.value() > kSnfMaxPrime) {
    throw std::out_of_range("Smith normal form supported for p <= " +
                            std::to_string(kSnfMaxPrime) + ", got " + std::to_string(p.value()));
  }
  SnfConjectureReport r;
  r.p = p.value();
  r.g = g.value();
  r.diagonal = smith_normal_form(build_tp(g).materialize());
  r.expected = conjectured_snf(p);
  r.holds = r.diagonal == r.expected;
  return r;
}

}  // namespace primroot
