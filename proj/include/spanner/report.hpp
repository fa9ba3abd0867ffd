#pragma once

#include <string>

#include <json.hpp>

#include "spanner/oracle.hpp"
#include "spanner/reduction4.hpp"
#include "spanner/spanner5.hpp"

namespace spanner {

// JSON report schema "spanner-report/1". Wall times are deliberately
// omitted so identical runs serialize byte-identically.
nlohmann::json to_json(const ResolvedThresholds& th);
nlohmann::json to_json(const SpannerResult& result);
nlohmann::json to_json(const FourSpannerResult& result);
nlohmann::json to_json(const StretchReport& report);
nlohmann::json to_json(const EdgeBudgetReport& report);

// Pretty-printed with a trailing newline; the byte format of reports.
std::string dump_report(const nlohmann::json& j);

// Bench CSV: one fixed column set, documented in the README.
std::string bench_csv_header();
struct BenchRow {
  std::size_t n = 0;
  std::uint64_t m = 0;
  int mode = 4;
  std::uint64_t seed = 0;
  std::uint64_t h_edges = 0;
  double ratio_to_bound = 0;
  std::uint64_t s1_size = 0;
  std::uint64_t s2_size = 0;
  std::uint64_t elimination_rounds = 0;
  double total_millis = 0;
  std::array<double, 8> step_millis{};  // shortcut check + steps 1..7
  double double_millis = 0;             // 0 in mode 5
  double project_millis = 0;            // 0 in mode 5
};
std::string bench_csv_row(const BenchRow& row);

}  // namespace spanner
