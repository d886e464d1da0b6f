#pragma once

// Terms and wall time each identity needs to reach a target tolerance.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zetakit/catalog.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/summation.hpp"
#include "zetakit/verifier.hpp"

namespace zetakit {

struct ConvergenceProfile {
  CatalogKey key;
  std::string paper_eq;
  double tolerance = 0.0;
  std::int64_t terms_needed = 0;  ///< number of summands, start_index..last_index
  std::int64_t last_index = 0;
  double achieved_error = 0.0;
  std::chrono::nanoseconds wall_time{0};
};

namespace detail {

// Least N whose assembled partial sum is within tolerance of the closed form.
// The running sum performs the same additions as partial_sum, so the result
// is bit-identical to a fresh evaluation at N.
inline auto scan_minimal(const CatalogKey& key, double tolerance, std::int64_t cap) -> ConvergenceProfile {
  const auto& d = resolve(key);
  const int p = param_of(key);
  const double target = d.closed_form(p);
  CompensatedSum<double> sum;
  for (std::int64_t n = d.start_index; n - d.start_index < cap; ++n) {
    sum += d.term(p, n);
    const double err = std::abs(d.offset_at(p) + d.scale_at(p) * sum.value() - target);
    if (err <= tolerance) {
      ConvergenceProfile prof;
      prof.key = key;
      prof.paper_eq = d.paper_eq;
      prof.tolerance = tolerance;
      prof.last_index = n;
      prof.terms_needed = n - d.start_index + 1;
      prof.achieved_error = err;
      return prof;
    }
  }
  throw inconclusive_error(key.to_string() + ": tolerance not reached within " + std::to_string(cap) + " terms");
}

inline auto time_evaluation(ConvergenceProfile& prof) -> void {
  const auto evaluate = [&] { return assemble(prof.key, partial_sum(prof.key, prof.last_index).value); };
  volatile double sink = evaluate();  // warm caches first
  const auto start = std::chrono::steady_clock::now();
  sink = evaluate();
  prof.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  (void)sink;
}

}  // namespace detail

/// Minimal term count reaching `tolerance`, plus the time of a warm
/// evaluation at that count. Throws inconclusive_error past the term cap.
inline auto profile(const CatalogKey& key, double tolerance) -> ConvergenceProfile {
  detail::check_tolerance(tolerance);
  auto prof = detail::scan_minimal(key, tolerance, max_terms());
  detail::time_evaluation(prof);
  return prof;
}

inline auto is_compare_target(std::string_view target) -> bool {
  return target == "zeta3" || target == "catalan-relations" || target == "all";
}

/// Keys profiled for a target. "all" covers every entry, families at their
/// smallest parameter.
inline auto compare_keys(std::string_view target) -> std::vector<CatalogKey> {
  if (!is_compare_target(target)) throw key_error("unknown target: " + std::string(target));
  std::vector<CatalogKey> keys;
  for (const auto& d : registry()) {
    if (target == "zeta3" && d.target != "zeta3") continue;
    if (target == "catalan-relations" && d.target != "catalan") continue;
    if (d.is_family()) keys.push_back({d.id, param_domain_min(d.domain)});
    else keys.push_back({d.id, std::nullopt});
  }
  return keys;
}

/// Profiles every key of `target`, sorted by terms_needed, then wall time,
/// then id. Scans run concurrently; timings run one at a time.
inline auto compare(std::string_view target, double tolerance) -> std::vector<ConvergenceProfile> {
  detail::check_tolerance(tolerance);
  const auto keys = compare_keys(target);
  const auto cap = max_terms();
  std::vector<ConvergenceProfile> table(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) { table[i] = detail::scan_minimal(keys[i], tolerance, cap); });
  for (auto& prof : table) detail::time_evaluation(prof);
  std::stable_sort(table.begin(), table.end(), [](const ConvergenceProfile& a, const ConvergenceProfile& b) {
    if (a.terms_needed != b.terms_needed) return a.terms_needed < b.terms_needed;
    if (a.wall_time != b.wall_time) return a.wall_time < b.wall_time;
    return a.key.to_string() < b.key.to_string();
  });
  return table;
}

enum class TableFormat { csv, json, markdown };

inline auto format_g17(double x) -> std::string {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline auto csv_field(const std::string& s) -> std::string {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline auto export_table(const std::vector<ConvergenceProfile>& table, TableFormat format) -> std::string {
  std::string out;
  switch (format) {
    case TableFormat::csv:
      out = "id,paper_eq,tolerance,terms_needed,achieved_error,wall_time_ns\n";
      for (const auto& p : table)
        out += csv_field(p.key.to_string()) + "," + csv_field(p.paper_eq) + "," + format_g17(p.tolerance) + "," +
               std::to_string(p.terms_needed) + "," + format_g17(p.achieved_error) + "," +
               std::to_string(p.wall_time.count()) + "\n";
      return out;
    case TableFormat::json: {
      auto rows = nlohmann::ordered_json::array();
      for (const auto& p : table) {
        nlohmann::ordered_json row;
        row["id"] = p.key.to_string();
        row["paper_eq"] = p.paper_eq;
        row["tolerance"] = p.tolerance;
        row["terms_needed"] = p.terms_needed;
        row["achieved_error"] = p.achieved_error;
        row["wall_time_ns"] = p.wall_time.count();
        rows.push_back(std::move(row));
      }
      return rows.dump(2) + "\n";
    }
    case TableFormat::markdown:
      out = "| id | paper_eq | tolerance | terms_needed | achieved_error | wall_time_ns |\n";
      out += "|---|---|---:|---:|---:|---:|\n";
      for (const auto& p : table)
        out += "| " + p.key.to_string() + " | " + p.paper_eq + " | " + format_g17(p.tolerance) + " | " +
               std::to_string(p.terms_needed) + " | " + format_g17(p.achieved_error) + " | " +
               std::to_string(p.wall_time.count()) + " |\n";
      return out;
  }
  return out;
}

}  // namespace zetakit
