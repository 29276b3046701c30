#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chromlie/error.hpp"
#include "chromlie/graph.hpp"

namespace chromlie {

enum class Suite {
  mainthm,
  stanley,
  chmply,
  discriminant,
  gsym_dual,
  denominator,
  oracles,
  tfunction,
  bijection,
  join,
  all,
};

Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct VerifyOptions {
  /// Replaces the suite's default small-graph corpus when set.
  std::optional<std::vector<Graph>> graphs;
  /// Truncation height for the denominator suite (default 8).
  std::optional<long> height;
  /// Per-case step budget; a case over budget is skipped, not failed.
  Budget budget;
};

struct CaseFailure {
  std::string graph;
  std::string weights;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::string corpus;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool pass() const { return failures.empty(); }
  /// "pass", "fail", or "indeterminate" when every case was skipped.
  std::string status() const;
  /// 0 pass, 2 failures, 3 skips without failures.
  int exit_code() const;
  /// Deterministic unless `with_timing`.
  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

VerificationReport run_verify(Suite suite, const VerifyOptions& options = {});

}  // namespace chromlie
