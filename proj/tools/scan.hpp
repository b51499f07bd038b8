#pragma once

// Batch verification over every odd prime up to a bound.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primroot/characters.hpp"
#include "primroot/exact_linalg.hpp"
#include "primroot/ff_arith.hpp"

namespace primroot::scan {

inline constexpr std::int64_t kMaxRankPrime = 10'000;

struct Checks {
  bool rank = false;
  bool snf = false;
  bool lemma = false;
};

/// Comma-separated subset of {rank, snf, lemma}. Throws std::invalid_argument.
Checks parse_checks(std::string_view list);

enum class Status { kOk, kDeviation };

std::string_view to_string(Status s);

struct Row {
  std::int64_t p = 0;
  std::int64_t g = 0;
  std::int64_t rank_real_expected = 0;
  std::optional<std::size_t> rank_real;
  std::optional<std::size_t> rank_mod_p;
  std::optional<InvariantFactors> snf_diagonal;
  std::optional<bool> snf_conjecture_holds;
  /// (k, verdict) for each odd k; reported, never part of the status.
  std::optional<std::vector<std::pair<std::int64_t, Verdict>>> lemma_audit_verdicts;
  Status status = Status::kOk;
  std::vector<std::string> deviations;
};

/// Runs the selected checks on T_p for the smallest primitive root (or `g` if given).
Row scan_prime(OddPrime p, const Checks& checks, std::optional<std::int64_t> g = std::nullopt);

/// One row per odd prime <= max_p, ascending, evaluated on up to `threads` workers.
/// Throws std::invalid_argument when max_p exceeds the supported range for `checks`.
std::vector<Row> run(std::int64_t max_p, const Checks& checks, unsigned threads = 0);

/// Header "p,g,rank_real,rank_real_expected,rank_mod_p,snf_diagonal,snf_conjecture_holds,status".
void write_csv(std::ostream& os, const std::vector<Row>& rows);
nlohmann::ordered_json to_json(const std::vector<Row>& rows);

struct Summary {
  std::size_t ok = 0;
  std::size_t deviation = 0;
  std::size_t snf_conjecture_failures = 0;
};

Summary summarize(const std::vector<Row>& rows);

}  // namespace primroot::scan
