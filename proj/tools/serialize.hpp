#pragma once

// JSON and text renderings of the core result types.

#include <json.hpp>

#include <string>

#include "primroot/applications.hpp"
#include "primroot/characters.hpp"
#include "primroot/circulant.hpp"
#include "primroot/exact_linalg.hpp"

namespace primroot::io {

using json = nlohmann::ordered_json;

json complex_to_json(Complex z);
/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json bigint_to_json(const BigInt& v);
json factors_to_json(const InvariantFactors& f);

/// {"p", "g", "k", "k2"?, "lhs": [re, im], "rhs": [re, im], "residual", "verdict"}
json audit_to_json(const IdentityAuditReport& r);
/// {"p", "g", "first_row": [...], "order"}
json matrix_to_json(const CirculantMatrix& t);
/// {"eigenvalues": [[re, im], ...], "nonzero_count", "zero_tolerance"}
json spectrum_to_json(const Spectrum& s);
json code_to_json(const LinearCode& c, std::size_t min_distance);
json graph_summary_to_json(const GraphSpectrumSummary& s);

/// Rows of comma-separated integers.
std::string to_csv(const CirculantMatrix& t);

/// %.12g, the fixed float format for reports.
std::string format_double(double v);
std::string format_complex(Complex z);

}  // namespace primroot::io
