#include "primroot/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace primroot {

CharacterTable::CharacterTable(PrimitiveRoot g) : g_(g) {
  const auto p = g.prime().value();
  const auto n = g.prime().group_order();
  dlog_.assign(static_cast<std::size_t>(p), -1);
  powers_.resize(static_cast<std::size_t>(n));
  std::int64_t x = 1;
  for (std::int64_t j = 0; j < n; ++j) {
    powers_[static_cast<std::size_t>(j)] = x;
    dlog_[static_cast<std::size_t>(x)] = j;
    x = x * g.value() % p;
  }
  roots_.resize(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    roots_[static_cast<std::size_t>(m)] = std::polar(1.0, angle);
  }
  // rho = chi_{(p-1)/2} must be the Legendre symbol: x is a square iff dlog(x) is even.
  for (std::int64_t r = 1; r < p; ++r) {
    const bool square = pow_mod(r, static_cast<std::uint64_t>(n / 2), p) == 1;
    if (square != (dlog_[static_cast<std::size_t>(r)] % 2 == 0)) {
      throw std::logic_error("quadratic character disagrees with Euler's criterion at " +
                             std::to_string(r));
    }
  }
}

std::int64_t CharacterTable::dlog(std::int64_t x) const {
  return dlog_[static_cast<std::size_t>(canonical_rep(x, prime()).rep())];
}

std::int64_t CharacterTable::power(std::int64_t j) const {
  return powers_[static_cast<std::size_t>(mod_floor(j, group_order()))];
}

Complex CharacterTable::unit_root(std::int64_t m) const {
  return roots_[static_cast<std::size_t>(mod_floor(m, group_order()))];
}

MultCharacter::MultCharacter(std::shared_ptr<const CharacterTable> table, std::int64_t k)
    : table_(std::move(table)), k_(k) {
  if (!table_) throw std::invalid_argument("MultCharacter: null table");
  if (k < 0 || k >= table_->group_order()) {
    throw std::out_of_range("character index " + std::to_string(k) + " outside [0, " +
                            std::to_string(table_->group_order() - 1) + "]");
  }
}

Complex MultCharacter::operator()(std::int64_t x) const {
  if (mod_floor(x, prime().value()) == 0) return {0.0, 0.0};
  // k * dlog < p^2, no overflow at supported sizes.
  return table_->unit_root(k_ * table_->dlog(x));
}

namespace {

void require_same_family(const MultCharacter& a, const MultCharacter& b) {
  if (a.prime() != b.prime() || a.root() != b.root()) {
    throw std::invalid_argument("characters belong to different (p, g)");
  }
}

}  // namespace

MultCharacter MultCharacter::operator*(const MultCharacter& other) const {
  require_same_family(*this, other);
  return MultCharacter(table_, (k_ + other.k_) % table_->group_order());
}

MultCharacter MultCharacter::conjugate() const {
  return MultCharacter(table_, mod_floor(-k_, table_->group_order()));
}

CharacterFamily::CharacterFamily(PrimitiveRoot g)
    : table_(std::make_shared<const CharacterTable>(g)) {}

Complex additive_char(OddPrime p, std::int64_t t) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(t, p.value())) /
                       static_cast<double>(p.value());
  return std::polar(1.0, angle);
}

Complex gauss_sum(const MultCharacter& chi) {
  const auto p = chi.prime();
  Complex sum{};
  for (std::int64_t x = 1; x < p.value(); ++x) sum += chi(x) * additive_char(p, x);
  return sum;
}

Complex jacobi_sum(const MultCharacter& chi, const MultCharacter& psi) {
  require_same_family(chi, psi);
  const auto p = chi.prime().value();
  Complex sum{};
  // x = 0 and x = 1 vanish through chi(0) = psi(0) = 0.
  for (std::int64_t x = 2; x < p; ++x) sum += chi(x) * psi(1 - x);
  return sum;
}

Complex first_moment(const MultCharacter& chi) {
  const auto p = chi.prime();
  Complex sum{};
  for (std::int64_t x = 1; x < p.value(); ++x) {
    sum += static_cast<double>(canonical_rep(x, p).rep()) * chi(x);
  }
  return sum;
}

double zero_tolerance(OddPrime p) {
  return 1e-9 * static_cast<double>(p.value()) * static_cast<double>(p.group_order());
}

double audit_tolerance(Complex lhs, Complex rhs) {
  return 1e-8 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kMismatch: return "MISMATCH";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

IdentityAuditReport make_report(const MultCharacter& chi, Complex lhs, Complex rhs) {
  IdentityAuditReport r;
  r.p = chi.prime().value();
  r.g = chi.root();
  r.k = chi.index();
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.verdict = r.abs_residual <= audit_tolerance(lhs, rhs) ? Verdict::kMatch : Verdict::kMismatch;
  return r;
}

IdentityAuditReport not_applicable(const MultCharacter& chi) {
  IdentityAuditReport r;
  r.p = chi.prime().value();
  r.g = chi.root();
  r.k = chi.index();
  r.verdict = Verdict::kNotApplicable;
  return r;
}

}  // namespace

IdentityAuditReport check_parity_identity(const MultCharacter& chi) {
  const double sign = chi.value_at_minus_one();
  const auto p = chi.prime().value();
  Complex char_total{};
  for (std::int64_t x = 1; x < p; ++x) char_total += chi(x);
  const Complex lhs = (1.0 + sign) * first_moment(chi);
  const Complex rhs = static_cast<double>(p) * sign * char_total;
  return make_report(chi, lhs, rhs);
}

IdentityAuditReport check_jacobi_gauss(const MultCharacter& chi, const MultCharacter& psi) {
  require_same_family(chi, psi);
  const auto product = chi * psi;
  if (chi.is_trivial() || psi.is_trivial() || product.is_trivial()) {
    auto r = not_applicable(chi);
    r.k2 = psi.index();
    return r;
  }
  auto r = make_report(chi, jacobi_sum(chi, psi),
                       gauss_sum(chi) * gauss_sum(psi) / gauss_sum(product));
  r.k2 = psi.index();
  return r;
}

IdentityAuditReport check_gauss_magnitude(const MultCharacter& chi) {
  if (chi.is_trivial()) return not_applicable(chi);
  const double p = static_cast<double>(chi.prime().value());
  auto r = not_applicable(chi);
  r.lhs = std::norm(gauss_sum(chi));
  r.rhs = p;
  r.abs_residual = std::abs(r.lhs - r.rhs);
  r.verdict = r.abs_residual <= 1e-6 * p ? Verdict::kMatch : Verdict::kMismatch;
  return r;
}

IdentityAuditReport audit_lemma_formula(const MultCharacter& chi) {
  if (chi.is_even()) return not_applicable(chi);
  const MultCharacter rho(chi.table(), chi.table()->group_order() / 2);
  const Complex rhs = -gauss_sum(chi) * gauss_sum(chi * rho) / gauss_sum(rho);
  return make_report(chi, first_moment(chi), rhs);
}

std::string_view to_string(MomentClass c) {
  switch (c) {
    case MomentClass::kTrivialNonzero: return "TRIVIAL_NONZERO";
    case MomentClass::kEvenZero: return "EVEN_ZERO";
    case MomentClass::kOddNonzero: return "ODD_NONZERO";
  }
  return "?";
}

bool MomentClassification::consistent() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const MomentEntry& e) { return e.consistent; }) &&
         nonzero_count == numeric_nonzero_count && 2 * nonzero_count == p + 1;
}

MomentClassification classify_first_moments(PrimitiveRoot g) {
  const CharacterFamily family(g);
  MomentClassification out;
  out.p = g.prime().value();
  out.g = g.value();
  out.zero_tolerance = zero_tolerance(g.prime());
  for (std::int64_t k = 0; k < family.size(); ++k) {
    MomentEntry e;
    e.k = k;
    e.value = first_moment(family[k]);
    e.expected = k == 0       ? MomentClass::kTrivialNonzero
                 : k % 2 == 0 ? MomentClass::kEvenZero
                              : MomentClass::kOddNonzero;
    const bool numerically_zero = std::abs(e.value) <= out.zero_tolerance;
    e.consistent = numerically_zero == (e.expected == MomentClass::kEvenZero);
    if (e.expected != MomentClass::kEvenZero) ++out.nonzero_count;
    if (!numerically_zero) ++out.numeric_nonzero_count;
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace primroot
