#include "scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "primroot/circulant.hpp"
#include "serialize.hpp"

namespace primroot::scan {

Checks parse_checks(std::string_view list) {
  Checks c;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    const auto item = list.substr(start, end - start);
    if (item == "rank") {
      c.rank = true;
    } else if (item == "snf") {
      c.snf = true;
    } else if (item == "lemma") {
      c.lemma = true;
    } else {
      throw std::invalid_argument("unknown scan check '" + std::string(item) +
                                  "' (expected rank, snf, lemma)");
    }
    start = end + 1;
  }
  return c;
}

std::string_view to_string(Status s) { return s == Status::kOk ? "OK" : "DEVIATION"; }

Row scan_prime(OddPrime p, const Checks& checks, std::optional<std::int64_t> g) {
  const PrimitiveRoot root = g ? PrimitiveRoot(p, *g) : find_primitive_root(p);
  Row row;
  row.p = p.value();
  row.g = root.value();
  row.rank_real_expected = (p.value() + 1) / 2;
  auto deviate = [&row](std::string what) {
    row.status = Status::kDeviation;
    row.deviations.push_back(std::move(what));
  };

  const auto t = build_tp(root);
  if (checks.rank || checks.snf) {
    const auto m = t.materialize();
    if (checks.rank) {
      row.rank_real = rank_rational(m);
      row.rank_mod_p = rank_mod_p(m, p);
      if (static_cast<std::int64_t>(*row.rank_real) != row.rank_real_expected) {
        deviate("rank_real " + std::to_string(*row.rank_real));
      }
      if (*row.rank_mod_p != 1) deviate("rank_mod_p " + std::to_string(*row.rank_mod_p));
    }
    if (checks.snf) {
      const auto report = check_snf_conjecture(root);
      row.snf_diagonal = report.diagonal;
      row.snf_conjecture_holds = report.holds;
      if (!report.diagonal.is_valid_chain()) deviate("snf divisibility chain");
      if (static_cast<std::int64_t>(report.diagonal.nonzero_count()) != row.rank_real_expected) {
        deviate("snf nonzero count " + std::to_string(report.diagonal.nonzero_count()));
      }
    }
  }
  if (checks.lemma) {
    const CharacterFamily family(root);
    std::vector<std::pair<std::int64_t, Verdict>> verdicts;
    for (std::int64_t k = 1; k < family.size(); k += 2) {
      verdicts.emplace_back(k, audit_lemma_formula(family[k]).verdict);
    }
    row.lemma_audit_verdicts = std::move(verdicts);
  }
  return row;
}

std::vector<Row> run(std::int64_t max_p, const Checks& checks, unsigned threads) {
  if (max_p > kMaxRankPrime) {
    throw std::invalid_argument("scan: max-p must be <= " + std::to_string(kMaxRankPrime));
  }
  if (checks.snf && max_p > kSnfMaxPrime) {
    throw std::invalid_argument("scan: max-p must be <= " + std::to_string(kSnfMaxPrime) +
                                " when snf is checked");
  }
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 3; n <= max_p; n += 2) {
    if (is_prime(static_cast<std::uint64_t>(n))) primes.push_back(n);
  }
  std::vector<Row> rows(primes.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1)));

  // Largest primes first: they dominate the runtime.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
            const auto idx = primes.size() - 1 - i;
            rows[idx] = scan_prime(OddPrime(primes[idx]), checks);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

namespace {

std::string join_diagonal(const InvariantFactors& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ';';
    out += f.diagonal()[i].get_str();
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "p,g,rank_real,rank_real_expected,rank_mod_p,snf_diagonal,snf_conjecture_holds,status\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.g << ',';
    if (r.rank_real) os << *r.rank_real;
    os << ',' << r.rank_real_expected << ',';
    if (r.rank_mod_p) os << *r.rank_mod_p;
    os << ',';
    if (r.snf_diagonal) os << join_diagonal(*r.snf_diagonal);
    os << ',';
    if (r.snf_conjecture_holds) os << (*r.snf_conjecture_holds ? "true" : "false");
    os << ',' << to_string(r.status) << '\n';
  }
}

nlohmann::ordered_json to_json(const std::vector<Row>& rows) {
  using json = nlohmann::ordered_json;
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"p", r.p}, {"g", r.g}, {"rank_real_expected", r.rank_real_expected}};
    j["rank_real"] = r.rank_real ? json(*r.rank_real) : json(nullptr);
    j["rank_mod_p"] = r.rank_mod_p ? json(*r.rank_mod_p) : json(nullptr);
    if (r.snf_diagonal) j["snf_diagonal"] = io::factors_to_json(*r.snf_diagonal);
    if (r.snf_conjecture_holds) j["snf_conjecture_holds"] = *r.snf_conjecture_holds;
    if (r.lemma_audit_verdicts) {
      json v = json::array();
      for (const auto& [k, verdict] : *r.lemma_audit_verdicts) {
        v.push_back(json{{"k", k}, {"verdict", std::string(to_string(verdict))}});
      }
      j["lemma_audit_verdicts"] = std::move(v);
    }
    j["status"] = std::string(to_string(r.status));
    if (!r.deviations.empty()) j["deviations"] = r.deviations;
    out.push_back(std::move(j));
  }
  return out;
}

Summary summarize(const std::vector<Row>& rows) {
  Summary s;
  for (const auto& r : rows) {
    (r.status == Status::kOk ? s.ok : s.deviation) += 1;
    if (r.snf_conjecture_holds && !*r.snf_conjecture_holds) ++s.snf_conjecture_failures;
  }
  return s;
}

}  // namespace primroot::scan
