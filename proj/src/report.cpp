#include "spanner/report.hpp"

#include <sstream>

namespace spanner {

using nlohmann::json;

json to_json(const ResolvedThresholds& th) {
  return json{{"elim_threshold", th.elim_threshold},
              {"heavy_threshold", th.heavy_threshold},
              {"f_threshold", th.f_threshold},
              {"subtree_factor", th.subtree_factor},
              {"shortpath_factor", th.shortpath_factor},
              {"dense_shortcut", th.dense_shortcut}};
}

namespace {

json edge_list_json(const EdgeSet& edges) {
  json list = json::array();
  for (const auto& [u, v] : edges.edges()) list.push_back({u, v});
  return list;
}

}  // namespace

json to_json(const SpannerResult& result) {
  return json{{"edges", result.spanner_edges.size()},
              {"edge_list", edge_list_json(result.spanner_edges)},
              {"shortcut_fired", result.shortcut_fired},
              {"elimination_rounds", result.elimination_rounds},
              {"s1_size", result.s1_size},
              {"s2_size", result.s2_size},
              {"residual_edge_count", result.residual_edge_count},
              {"per_step_edge_counts", result.per_step_edge_counts},
              {"thresholds", to_json(result.thresholds_used)},
              {"input", {{"n", result.input_vertex_count},
                         {"m", result.input_edge_count}}}};
}

json to_json(const FourSpannerResult& result) {
  return json{{"input", {{"n", result.input_vertex_count},
                         {"m", result.input_edge_count}}},
              {"projected_edges", result.spanner_edges.size()},
              {"edge_list", edge_list_json(result.spanner_edges)},
              {"doubled", to_json(result.doubled)}};
}

json to_json(const StretchReport& report) {
  json histogram = json::object();
  for (const auto& [excess, count] : report.histogram) {
    histogram[std::to_string(excess)] = count;
  }
  json j{{"k", report.k},
         {"pass", report.pass},
         {"max_excess", report.max_excess},
         {"pairs_checked", report.pairs_checked},
         {"infinite_pairs", report.infinite_pairs},
         {"histogram", histogram}};
  if (report.worst_pair.first != kNoVertex) {
    j["worst_pair"] = {report.worst_pair.first, report.worst_pair.second};
  }
  if (report.infinite_pairs > 0) {
    j["first_infinite_pair"] = {report.first_infinite_pair.first,
                                report.first_infinite_pair.second};
  }
  return j;
}

json to_json(const EdgeBudgetReport& report) {
  return json{{"n", report.n},
              {"m", report.m},
              {"h_edges", report.h_edges},
              {"bound", report.bound},
              {"ratio_to_bound", report.ratio_to_bound},
              {"ratio_to_m", report.ratio_to_m},
              {"per_step_edge_counts", report.per_step},
              {"shortcut_fired", report.shortcut_fired}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

std::string bench_csv_header() {
  return "n,m,mode,seed,h_edges,ratio_to_bound,s1_size,s2_size,"
         "elimination_rounds,total_ms,shortcut_ms,step1_ms,step2_ms,step3_ms,"
         "step4_ms,step5_ms,step6_ms,step7_ms,double_ms,project_ms\n";
}

std::string bench_csv_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.m << ',' << row.mode << ',' << row.seed << ','
      << row.h_edges << ',' << row.ratio_to_bound << ',' << row.s1_size << ','
      << row.s2_size << ',' << row.elimination_rounds << ','
      << row.total_millis;
  for (double ms : row.step_millis) out << ',' << ms;
  out << ',' << row.double_millis << ',' << row.project_millis << '\n';
  return out.str();
}

}  // namespace spanner
