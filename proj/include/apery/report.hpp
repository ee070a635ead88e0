#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apery/catalog.hpp"

namespace apery {

struct RunConfig {
  std::string suite_id = "all";
  std::string primes_spec;  // as given on the command line
  int parallelism = 1;
  std::string output_format = "table";  // "json-lines" | "table"
  std::string output_path;              // empty = stdout
  std::string cache_path;
  bool include_negative_controls = false;
};

struct CheckSummary {
  std::string id;
  std::size_t pass = 0, fail = 0, skip = 0, expected_fail = 0;
  std::optional<long> min_achieved;  // over evaluated rows with finite valuation
  bool any_infinite = false;         // some evaluated row had an exactly-zero difference
};

struct Report {
  RunConfig config;
  std::vector<CheckSummary> summaries;  // ordered by id
  std::vector<CheckResult> failures;    // non-informational failing rows, in full
  double total_elapsed_ms = 0.0;
  std::size_t total_results = 0;
  bool all_pass = true;
};

// One self-contained JSON object per result:
// {"id","p","params"?,"required_k","achieved_valuation","status","elapsed_ms"?}
// required_k / achieved_valuation use "inf" for the exact-equality cases and
// null when the row was skipped.
std::string to_json_line(const CheckResult& r, bool include_timing = true);
std::string to_table_row(const CheckResult& r);
std::string table_header();

void write_results(std::ostream& out, const std::vector<CheckResult>& results,
                   const std::string& format, bool include_timing);

// Timing-free json-lines content, sorted; equal across parallelism levels.
std::string canonical_lines(std::vector<CheckResult> results);

Report summarize(const RunConfig& cfg, const std::vector<CheckResult>& results);
void write_report(std::ostream& out, const Report& report);

// Inverse of to_json_line, for round-trip tooling.
std::vector<CheckResult> parse_json_lines(std::istream& in);

}  // namespace apery
