#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "primroot/applications.hpp"
#include "primroot/characters.hpp"
#include "primroot/circulant.hpp"
#include "primroot/exact_linalg.hpp"
#include "primroot/ff_arith.hpp"
#include "scan.hpp"
#include "serialize.hpp"

namespace primroot::cli {
namespace {

using io::json;

struct Options {
  std::int64_t p = 0;
  std::optional<std::int64_t> g;
  std::string format;
  std::string out;
};

struct Result {
  int code = kConsistent;
  std::string body;
};

PrimitiveRoot resolve_root(const Options& o) {
  const OddPrime p(o.p);
  return o.g ? PrimitiveRoot(p, *o.g) : find_primitive_root(p);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Result cmd_build(const Options& o) {
  const auto t = build_tp(resolve_root(o));
  if (o.format == "json") return {kConsistent, dump(io::matrix_to_json(t))};
  if (o.format == "csv") return {kConsistent, io::to_csv(t)};
  return {kConsistent, to_text(t)};
}

Result cmd_rank(const Options& o) {
  const auto root = resolve_root(o);
  const auto m = build_tp(root).materialize();
  const auto p = root.prime().value();
  const auto rank_real = rank_rational(m);
  const auto rank_p = rank_mod_p(m, root.prime());
  const auto expected = static_cast<std::size_t>((p + 1) / 2);
  const int code = rank_real == expected && rank_p == 1 ? kConsistent : kInvariantFailed;
  if (o.format == "text") {
    std::ostringstream os;
    os << "p=" << p << " g=" << root.value() << " rank_real=" << rank_real
       << " rank_mod_p=" << rank_p << " expected_rank_real=" << expected << '\n';
    return {code, os.str()};
  }
  return {code, dump(json{{"p", p},
                          {"g", root.value()},
                          {"rank_real", rank_real},
                          {"rank_mod_p", rank_p},
                          {"expected_rank_real", expected}})};
}

Result cmd_spectrum(const Options& o) {
  const auto root = resolve_root(o);
  const auto p = root.prime().value();
  const auto spectrum = eigenvalues(build_tp(root));
  const auto moments = classify_first_moments(root);
  double deviation = 0.0;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    deviation = std::max(deviation, std::abs(spectrum.eigenvalues[k] - moments.entries[k].value));
  }
  const bool ok = moments.consistent() && 2 * spectrum.nonzero_count == p + 1 &&
                  deviation <= 1e-9 * static_cast<double>(p * p);
  const int code = ok ? kConsistent : kInvariantFailed;

  if (o.format == "text") {
    std::ostringstream os;
    os << "p=" << p << " g=" << root.value() << " nonzero=" << spectrum.nonzero_count << "/"
       << spectrum.eigenvalues.size() << " crosscheck_deviation=" << io::format_double(deviation)
       << '\n';
    for (const auto& e : moments.entries) {
      os << "k=" << e.k << "  lambda=" << io::format_complex(spectrum.eigenvalues[static_cast<std::size_t>(e.k)])
         << "  " << to_string(e.expected) << (e.consistent ? "" : "  INCONSISTENT") << '\n';
    }
    return {code, os.str()};
  }
  json j = io::spectrum_to_json(spectrum);
  j["p"] = p;
  j["g"] = root.value();
  json classes = json::array();
  for (const auto& e : moments.entries) {
    classes.push_back(json{{"k", e.k},
                           {"first_moment", io::complex_to_json(e.value)},
                           {"class", std::string(to_string(e.expected))},
                           {"consistent", e.consistent}});
  }
  j["classification"] = std::move(classes);
  j["expected_nonzero_count"] = (p + 1) / 2;
  j["crosscheck_deviation"] = deviation;
  j["consistent"] = ok;
  return {code, dump(j)};
}

Result cmd_snf(const Options& o, bool multipliers) {
  const auto root = resolve_root(o);
  const auto report = check_snf_conjecture(root);
  const auto p = report.p;
  bool ok = report.diagonal.is_valid_chain() &&
            static_cast<std::int64_t>(report.diagonal.nonzero_count()) * 2 == p + 1;
  std::optional<bool> verified;
  if (multipliers) {
    const auto m = build_tp(root).materialize();
    const auto d = smith_decomposition(m);
    const auto diag = IntegerMatrix::diagonal(d.factors.diagonal(), m.rows(), m.cols());
    verified = d.left * m * d.right == diag && abs(determinant(d.left)) == 1 &&
               abs(determinant(d.right)) == 1 && d.factors == report.diagonal;
    ok = ok && *verified;
  }
  const int code = ok ? kConsistent : kInvariantFailed;
  if (o.format == "text") {
    std::ostringstream os;
    os << "p=" << p << " g=" << report.g << " diagonal=(";
    for (std::size_t i = 0; i < report.diagonal.size(); ++i) {
      os << (i ? "," : "") << report.diagonal.diagonal()[i];
    }
    os << ") conjecture=" << (report.holds ? "holds" : "fails");
    if (verified) os << " multipliers=" << (*verified ? "verified" : "FAILED");
    os << '\n';
    return {code, os.str()};
  }
  json j{{"p", p},
         {"g", report.g},
         {"diagonal", io::factors_to_json(report.diagonal)},
         {"expected", io::factors_to_json(report.expected)},
         {"conjecture_holds", report.holds},
         {"nonzero_count", report.diagonal.nonzero_count()}};
  if (verified) j["multipliers_verified"] = *verified;
  return {code, dump(j)};
}

constexpr std::string_view kDiscrepancyBanner =
    "PAPER-DISCREPANCY: the printed odd-character formula S(chi) = -G(chi)G(chi rho)/G(rho) "
    "disagrees with direct summation; reported, not fatal.";

Result cmd_verify(const Options& o, const std::vector<std::string>& which) {
  const auto root = resolve_root(o);
  const CharacterFamily family(root);
  const auto n = family.size();

  struct Entry {
    std::string identity;
    IdentityAuditReport report;
  };
  std::vector<Entry> entries;
  auto wants = [&](std::string_view name) {
    return std::find(which.begin(), which.end(), name) != which.end();
  };
  if (wants("parity")) {
    for (std::int64_t k = 0; k < n; ++k) entries.push_back({"parity", check_parity_identity(family[k])});
  }
  if (wants("gauss-magnitude")) {
    for (std::int64_t k = 1; k < n; ++k) {
      entries.push_back({"gauss-magnitude", check_gauss_magnitude(family[k])});
    }
  }
  if (wants("jacobi-gauss")) {
    for (std::int64_t k1 = 0; k1 < n; ++k1) {
      for (std::int64_t k2 = 0; k2 < n; ++k2) {
        entries.push_back({"jacobi-gauss", check_jacobi_gauss(family[k1], family[k2])});
      }
    }
  }
  if (wants("lemma-formula")) {
    for (std::int64_t k = 0; k < n; ++k) {
      entries.push_back({"lemma-formula", audit_lemma_formula(family[k])});
    }
  }

  int code = kConsistent;
  bool discrepancy = false;
  for (const auto& e : entries) {
    if (e.report.verdict != Verdict::kMismatch) continue;
    if (e.identity == "lemma-formula") {
      discrepancy = true;
    } else {
      code = kInvariantFailed;
    }
  }

  if (o.format == "json") {
    json audits = json::array();
    for (const auto& e : entries) {
      json a = io::audit_to_json(e.report);
      a["identity"] = e.identity;
      audits.push_back(std::move(a));
    }
    json j{{"p", root.prime().value()}, {"g", root.value()}, {"audits", std::move(audits)}};
    if (discrepancy) j["banner"] = std::string(kDiscrepancyBanner);
    return {code, dump(j)};
  }
  std::ostringstream os;
  os << std::left << std::setw(16) << "identity" << std::setw(5) << "k" << std::setw(5) << "k2"
     << std::setw(39) << "lhs" << std::setw(39) << "rhs" << std::setw(20) << "residual"
     << "verdict\n";
  for (const auto& e : entries) {
    const auto& r = e.report;
    os << std::setw(16) << e.identity << std::setw(5) << r.k << std::setw(5)
       << (r.k2 ? std::to_string(*r.k2) : "-") << std::setw(38) << io::format_complex(r.lhs)
       << ' ' << std::setw(38) << io::format_complex(r.rhs) << ' ' << std::setw(19)
       << io::format_double(r.abs_residual) << ' ' << to_string(r.verdict) << '\n';
  }
  if (discrepancy) os << kDiscrepancyBanner << '\n';
  return {code, os.str()};
}

Result cmd_scan(const Options& o, std::int64_t max_p, const std::string& checks_list,
                unsigned threads, std::ostream& err) {
  const auto checks = scan::parse_checks(checks_list);
  const auto rows = scan::run(max_p, checks, threads);
  const auto summary = scan::summarize(rows);
  err << "scan: " << rows.size() << " primes, OK=" << summary.ok
      << ", DEVIATION=" << summary.deviation;
  if (checks.snf) err << ", snf conjecture failures=" << summary.snf_conjecture_failures;
  err << '\n';
  const int code = summary.deviation == 0 ? kConsistent : kInvariantFailed;
  if (o.format == "json") return {code, dump(scan::to_json(rows))};
  std::ostringstream os;
  scan::write_csv(os, rows);
  return {code, os.str()};
}

Result cmd_code(const Options& o, std::size_t blocks) {
  const auto code = block_diagonal_code(resolve_root(o), blocks);
  const auto d = min_distance(code);
  if (o.format == "json") {
    json j = io::code_to_json(code, d);
    j["g"] = resolve_root(o).value();
    j["blocks"] = blocks;
    return {kConsistent, dump(j)};
  }
  std::ostringstream os;
  os << '[' << code.length() << ", " << code.dimension() << ", " << d << "]\n";
  return {kConsistent, os.str()};
}

Result cmd_graph(const Options& o, bool summary) {
  const auto root = resolve_root(o);
  if (summary) {
    const auto s = graph_spectrum_summary(root);
    const int code = 2 * s.nonzero_eigenvalues == s.p + 1 ? kConsistent : kInvariantFailed;
    return {code, dump(io::graph_summary_to_json(s))};
  }
  return {kConsistent, export_graph(root, parse_graph_format(o.format))};
}

int emit(const Result& r, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << r.body;
    out.flush();
    return r.code;
  }
  std::filesystem::path path(out_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path.string() << "' for writing\n";
    return kIoFailure;
  }
  file << r.body;
  file.close();
  if (!file) {
    err << "error: failed writing '" << path.string() << "'\n";
    return kIoFailure;
  }
  return r.code;
}

void add_common(CLI::App* sub, Options& o, bool needs_p = true) {
  if (needs_p) {
    sub->add_option("--p", o.p, "odd prime p")->required();
    sub->add_option("--g", o.g, "primitive root (default: smallest)");
  }
  sub->add_option("--out", o.out, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circulant matrices from primitive roots: construction and verification"};
  app.name("primroot");
  app.require_subcommand(1);

  Options o;
  auto* build = app.add_subcommand("build", "print the circulant matrix T_p");
  add_common(build, o);
  build->add_option("--format", o.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");

  auto* rank = app.add_subcommand("rank", "exact rank over Q and over F_p");
  add_common(rank, o);
  rank->add_option("--format", o.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and first-moment classification");
  add_common(spectrum, o);
  spectrum->add_option("--format", o.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  bool multipliers = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form and the conjectured pattern");
  add_common(snf, o);
  snf->add_option("--format", o.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");
  snf->add_flag("--multipliers", multipliers, "also verify U*M*V = D with unimodular U, V");

  std::vector<std::string> which;
  auto* verify = app.add_subcommand("verify", "audit the character-sum identities");
  add_common(verify, o);
  verify->add_option("--format", o.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  verify->add_option("--which", which, "parity,jacobi-gauss,gauss-magnitude,lemma-formula")
      ->delimiter(',')
      ->check(CLI::IsMember({"parity", "jacobi-gauss", "gauss-magnitude", "lemma-formula"}))
      ->default_val(std::vector<std::string>{"parity", "jacobi-gauss", "gauss-magnitude",
                                             "lemma-formula"});

  std::int64_t max_p = 0;
  std::string checks = "rank";
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "batch checks over all odd primes <= max-p");
  add_common(scan_cmd, o, false);
  scan_cmd->add_option("--max-p", max_p, "largest prime to scan")->required();
  scan_cmd->add_option("--checks", checks, "comma list of rank,snf,lemma")->default_val("rank");
  scan_cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  scan_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::size_t blocks = 1;
  auto* code = app.add_subcommand("code", "linear code over F_p: [length, dimension, distance]");
  add_common(code, o);
  code->add_option("--blocks", blocks, "number of diagonal blocks")->default_val(1);
  code->add_option("--format", o.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");

  bool summary = false;
  auto* graph = app.add_subcommand("graph", "T_p as a weighted directed graph");
  add_common(graph, o);
  graph->add_option("--format", o.format, "edge_list|adjacency")->default_val("edge_list");
  graph->add_flag("--summary", summary, "print the spectrum summary as JSON instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kConsistent : kInvalidInput;
  }

  try {
    Result r;
    if (*build) {
      r = cmd_build(o);
    } else if (*rank) {
      r = cmd_rank(o);
    } else if (*spectrum) {
      r = cmd_spectrum(o);
    } else if (*snf) {
      r = cmd_snf(o, multipliers);
    } else if (*verify) {
      r = cmd_verify(o, which);
    } else if (*scan_cmd) {
      if (max_p < 3) throw std::invalid_argument("scan: max-p must be >= 3");
      r = cmd_scan(o, max_p, checks, threads, err);
    } else if (*code) {
      r = cmd_code(o, blocks);
    } else {
      r = cmd_graph(o, summary);
    }
    return emit(r, o.out, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantFailed;
  }
}

}  // namespace primroot::cli
