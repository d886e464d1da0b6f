#pragma once

// Text, CSV, Markdown and JSON renderings of reports and the registry.

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetakit/catalog.hpp"
#include "zetakit/convergence.hpp"
#include "zetakit/verifier.hpp"

namespace zetakit {

enum class OutputFormat { text, csv, json, markdown };

inline auto format_g16(double x) -> std::string {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", x);
  return buf;
}

inline auto report_status(const VerificationReport& r) -> std::string {
  if (r.inconclusive) return "INCONCLUSIVE";
  if (r.pass) return "pass";
  return r.expected_discrepancy ? "FAIL (expected-discrepancy)" : "FAIL";
}

inline auto to_json(const VerificationReport& r) -> nlohmann::ordered_json {
  nlohmann::ordered_json j;
  j["key"] = r.key.id;
  j["param"] = r.key.param ? nlohmann::ordered_json(*r.key.param) : nlohmann::ordered_json(nullptr);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["n_terms"] = r.n_terms;
  j["tolerance"] = r.tolerance;
  j["variant"] = std::string(variant_name(r.variant));
  j["pass"] = r.pass;
  j["tail_bound"] = r.tail_bound;
  j["expected_discrepancy"] = r.expected_discrepancy;
  j["inconclusive"] = r.inconclusive;
  if (r.theta) j["theta"] = *r.theta;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline auto render_reports(const std::vector<VerificationReport>& reports, OutputFormat format) -> std::string {
  std::string out;
  auto key_label = [](const VerificationReport& r) {
    std::string s = r.key.to_string();
    if (r.theta) s += " @ theta=" + format_g16(*r.theta);
    return s;
  };
  switch (format) {
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv:
      out = "key,param,theta,variant,lhs,rhs,abs_err,rel_err,n_terms,tolerance,tail_bound,pass,expected_discrepancy,"
            "inconclusive\n";
      for (const auto& r : reports)
        out += csv_field(r.key.id) + "," + (r.key.param ? std::to_string(*r.key.param) : "") + "," +
               (r.theta ? format_g17(*r.theta) : "") + "," + std::string(variant_name(r.variant)) + "," +
               format_g17(r.lhs) + "," + format_g17(r.rhs) + "," + format_g17(r.abs_err) + "," +
               format_g17(r.rel_err) + "," + std::to_string(r.n_terms) + "," + format_g17(r.tolerance) + "," +
               format_g17(r.tail_bound) + "," + (r.pass ? "true" : "false") + "," +
               (r.expected_discrepancy ? "true" : "false") + "," + (r.inconclusive ? "true" : "false") + "\n";
      return out;
    case OutputFormat::markdown:
      out = "| key | variant | lhs | rhs | abs_err | n_terms | status |\n|---|---|---:|---:|---:|---:|---|\n";
      for (const auto& r : reports)
        out += "| " + key_label(r) + " | " + std::string(variant_name(r.variant)) + " | " + format_g17(r.lhs) +
               " | " + format_g17(r.rhs) + " | " + format_g17(r.abs_err) + " | " + std::to_string(r.n_terms) +
               " | " + report_status(r) + " |\n";
      return out;
    case OutputFormat::text:
      for (const auto& r : reports) {
        char line[512];
        if (r.inconclusive) {
          std::snprintf(line, sizeof line, "%-34s %-9s INCONCLUSIVE  %s\n", key_label(r).c_str(),
                        variant_name(r.variant).data(), r.note.c_str());
        } else {
          std::snprintf(line, sizeof line, "%-34s %-9s lhs=%-23s rhs=%-23s abs_err=%.3e n=%-6lld %s\n",
                        key_label(r).c_str(), variant_name(r.variant).data(), format_g16(r.lhs).c_str(),
                        format_g16(r.rhs).c_str(), r.abs_err, static_cast<long long>(r.n_terms),
                        report_status(r).c_str());
        }
        out += line;
      }
      return out;
  }
  return out;
}

inline auto to_json(const IdentitySummary& s) -> nlohmann::ordered_json {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["paper_eq"] = s.paper_eq;
  j["status"] = std::string(status_name(s.status));
  j["domain"] = std::string(param_domain_name(s.domain));
  j["start_index"] = s.start_index;
  j["description"] = s.description;
  return j;
}

inline auto render_registry(const std::vector<IdentitySummary>& entries, OutputFormat format) -> std::string {
  std::string out;
  switch (format) {
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& e : entries) arr.push_back(to_json(e));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv:
      out = "id,paper_eq,status,domain,start_index,description\n";
      for (const auto& e : entries)
        out += csv_field(e.id) + "," + csv_field(e.paper_eq) + "," + std::string(status_name(e.status)) + "," +
               csv_field(std::string(param_domain_name(e.domain))) + "," + std::to_string(e.start_index) + "," +
               csv_field(e.description) + "\n";
      return out;
    case OutputFormat::markdown:
      out = "| id | paper_eq | status | domain | start | description |\n|---|---|---|---|---:|---|\n";
      for (const auto& e : entries) {
        std::string desc = e.description;
        for (std::size_t pos = 0; (pos = desc.find('|', pos)) != std::string::npos; pos += 2) desc.replace(pos, 1, "\\|");
        out += "| " + e.id + " | " + e.paper_eq + " | " + std::string(status_name(e.status)) + " | " +
               std::string(param_domain_name(e.domain)) + " | " + std::to_string(e.start_index) + " | " + desc +
               " |\n";
      }
      return out;
    case OutputFormat::text:
      for (const auto& e : entries) {
        char line[512];
        std::snprintf(line, sizeof line, "%-16s %-16s %-14s %-5s n>=%d  %s\n", e.id.c_str(), e.paper_eq.c_str(),
                      status_name(e.status).data(), param_domain_name(e.domain).data(), e.start_index,
                      e.description.c_str());
        out += line;
      }
      return out;
  }
  return out;
}

}  // namespace zetakit
