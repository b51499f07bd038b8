#include "serialize.hpp"

#include <cstdio>

namespace primroot::io {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json factors_to_json(const InvariantFactors& f) {
  json out = json::array();
  for (const auto& d : f.diagonal()) out.push_back(bigint_to_json(d));
  return out;
}

json audit_to_json(const IdentityAuditReport& r) {
  json j{{"p", r.p}, {"g", r.g}, {"k", r.k}};
  if (r.k2) j["k2"] = *r.k2;
  j["lhs"] = complex_to_json(r.lhs);
  j["rhs"] = complex_to_json(r.rhs);
  j["residual"] = r.abs_residual;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

json matrix_to_json(const CirculantMatrix& t) {
  const auto row = t.first_row();
  return json{{"p", t.prime().value()},
              {"g", t.root().value()},
              {"first_row", std::vector<std::int64_t>(row.begin(), row.end())},
              {"order", t.order()}};
}

json spectrum_to_json(const Spectrum& s) {
  json eig = json::array();
  for (const auto& z : s.eigenvalues) eig.push_back(complex_to_json(z));
  return json{{"eigenvalues", std::move(eig)},
              {"nonzero_count", s.nonzero_count},
              {"zero_tolerance", s.zero_tolerance}};
}

json code_to_json(const LinearCode& c, std::size_t min_distance) {
  return json{{"p", c.prime().value()},
              {"length", c.length()},
              {"dimension", c.dimension()},
              {"min_distance", min_distance},
              {"generator", c.generator()}};
}

json graph_summary_to_json(const GraphSpectrumSummary& s) {
  json spectrum = json::array();
  for (const auto& z : s.spectrum) spectrum.push_back(complex_to_json(z));
  return json{{"p", s.p},
              {"g", s.g},
              {"num_vertices", s.num_vertices},
              {"nonzero_eigenvalues", s.nonzero_eigenvalues},
              {"zero_multiplicity", s.zero_multiplicity},
              {"spectrum", std::move(spectrum)}};
}

std::string to_csv(const CirculantMatrix& t) {
  std::string out;
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) {
      if (j) out += ',';
      out += std::to_string(t(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += format_double(std::abs(z.imag()));
  out += "i";
  return out;
}

}  // namespace primroot::io
