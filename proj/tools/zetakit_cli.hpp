#pragma once

// Command-line front end: compute | verify | converge | list.
// run_cli is kept separate from main so tests can drive it in-process.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetakit/catalog.hpp"
#include "zetakit/convergence.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/serialize.hpp"
#include "zetakit/specfun.hpp"
#include "zetakit/verifier.hpp"

namespace zetakit::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, inconclusive = 3 };

struct CliConfig {
  double tolerance = kDefaultTolerance;
  int param_limit = kDefaultParamLimit;
  std::string format = "text";
  std::optional<std::string> out;
};

/// zeta3 --method aliases; catalog ids are accepted as well.
inline auto zeta3_methods() -> const std::map<std::string, std::string>& {
  static const std::map<std::string, std::string> m{
      {"sga", "ZETA3_13"},  {"apery", "ZETA3_APERY_14"}, {"ck", "ZETA3_CK_15"},  {"ewell", "ZETA3_EWELL_16"},
      {"clausen", "ZETA3_12"}, {"peeled", "ZETA3_20"},
  };
  return m;
}

namespace detail {

inline auto parse_format(const std::string& name) -> OutputFormat {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown") return OutputFormat::markdown;
  return OutputFormat::text;
}

inline auto emit(const CliConfig& cfg, const std::string& payload, std::ostream& out) -> void {
  if (!cfg.out) {
    out << payload;
    return;
  }
  std::ofstream file(*cfg.out, std::ios::binary);
  if (!file) throw error("cannot open output file: " + *cfg.out);
  file << payload;
}

inline auto print_result(const std::string& label, const EvalResult& r, const CliConfig& cfg, std::ostream& out)
    -> void {
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["quantity"] = label;
    j["value"] = r.value;
    j["terms_used"] = r.terms_used;
    j["error_bound"] = r.error_bound;
    payload = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    payload = "quantity,value,terms_used,error_bound\n" + csv_field(label) + "," + format_g17(r.value) + "," +
              std::to_string(r.terms_used) + "," + format_g17(r.error_bound) + "\n";
  } else if (cfg.format == "markdown") {
    payload = "| quantity | value | terms_used | error_bound |\n|---|---:|---:|---:|\n| " + label + " | " +
              format_g17(r.value) + " | " + std::to_string(r.terms_used) + " | " + format_g17(r.error_bound) + " |\n";
  } else {
    payload = label + "\n  value       " + format_g16(r.value) + "\n  terms_used  " + std::to_string(r.terms_used) +
              "\n  error_bound " + format_g16(r.error_bound) + "\n";
  }
  emit(cfg, payload, out);
}

// Series value of a catalog identity with N chosen from its tail bound.
// The series are geometric, so summing on to double resolution costs a few
// terms; the reported bound still honours `tolerance`.
inline auto evaluate_identity(const CatalogKey& key, double tolerance) -> EvalResult {
  const std::int64_t big_n = terms_for_bound(key, std::min(tolerance / 2.0, 1e-16), max_terms());
  const EvalResult s = partial_sum(key, big_n);
  return {assemble(key, s.value), s.terms_used, assembled_tail_bound(key, big_n)};
}

inline auto parse_number(const std::string& text, const char* what) -> double {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw CLI::ValidationError(what, "expected a number, got '" + text + "'");
  return v;
}

struct ComputeArgs {
  std::string constant;
  std::string argument;
  std::optional<double> theta;
  std::string method;
};

inline auto run_compute(const ComputeArgs& a, const CliConfig& cfg, std::ostream& out) -> int {
  auto need_arg = [&](const char* what) {
    if (a.argument.empty()) throw CLI::ValidationError(a.constant, std::string("requires ") + what);
    return parse_number(a.argument, what);
  };
  auto no_method = [&] {
    if (!a.method.empty()) throw CLI::ValidationError("--method", "not applicable to " + a.constant);
  };
  if (a.constant == "zeta") {
    no_method();
    const double s = need_arg("<s>");
    print_result("zeta(" + format_g16(s) + ")", riemann_zeta(s), cfg, out);
  } else if (a.constant == "zeta3") {
    const std::string m = a.method.empty() ? "direct" : a.method;
    if (m == "direct") {
      print_result("zeta(3) [direct]", riemann_zeta(3.0), cfg, out);
      return ok;
    }
    std::string id = m;
    if (auto it = zeta3_methods().find(m); it != zeta3_methods().end()) id = it->second;
    const IdentityDescriptor* d = nullptr;
    try {
      d = &find_identity(id);
    } catch (const key_error&) {
    }
    if (d == nullptr || d->target != "zeta3") throw CLI::ValidationError("--method", "unknown zeta3 method '" + m + "'");
    print_result("zeta(3) [" + id + "]", evaluate_identity({id, std::nullopt}, cfg.tolerance), cfg, out);
  } else if (a.constant == "catalan") {
    no_method();
    print_result("catalan G", catalan(), cfg, out);
  } else if (a.constant == "gamma") {
    no_method();
    print_result("euler gamma", euler_gamma(), cfg, out);
  } else if (a.constant == "beta") {
    no_method();
    const double s = need_arg("<s>");
    print_result("beta(" + format_g16(s) + ")", dirichlet_beta(s), cfg, out);
  } else if (a.constant == "cl2") {
    if (a.theta && !a.argument.empty()) throw CLI::ValidationError("cl2", "give theta once");
    const double theta = a.theta ? *a.theta : need_arg("<theta>");
    auto method = Cl2Method::automatic;
    if (!a.method.empty()) {
      auto parsed = parse_cl2_method(a.method);
      if (!parsed) throw CLI::ValidationError("--method", "unknown cl2 method '" + a.method + "'");
      method = *parsed;
    }
    print_result("Cl2(" + format_g16(theta) + ") [" + std::string(cl2_method_name(method)) + "]",
                 clausen_cl2(theta, method), cfg, out);
  } else if (a.constant == "zetaE") {
    no_method();
    const double k = need_arg("<k>");
    if (k < 1 || k != std::floor(k) || k > 1000) throw CLI::ValidationError("zetaE", "k must be an integer >= 1");
    const auto exact = zeta_E_exact(static_cast<unsigned>(k));
    print_result("zetaE(" + std::to_string(2 * static_cast<int>(k)) + ") = " + exact.to_string(),
                 {exact.numeric(), 0, 0.0}, cfg, out);
  } else {
    throw CLI::ValidationError("constant", "unknown constant '" + a.constant + "'");
  }
  return ok;
}

struct VerifyArgs {
  bool all = false;
  std::string id;
  std::optional<int> m;
  std::optional<int> k;
  bool integrals = false;
  bool clausen = false;
};

inline auto verify_exit_code(const std::vector<VerificationReport>& reports) -> int {
  bool any_inconclusive = false, any_failure = false;
  for (const auto& r : reports) {
    if (r.inconclusive) any_inconclusive = true;
    else if (!r.pass && !r.expected_discrepancy) any_failure = true;
  }
  if (any_inconclusive) return inconclusive;
  return any_failure ? failure : ok;
}

// One line per identity whose printed variant failed, in report order.
inline auto discrepancy_summary(const std::vector<VerificationReport>& reports) -> std::string {
  std::vector<std::string> ids;
  std::map<std::string, std::pair<int, int>> counts;  // failing, total
  for (const auto& r : reports) {
    if (!r.expected_discrepancy) continue;
    auto& c = counts[r.key.id];
    if (c.second == 0) ids.push_back(r.key.id);
    ++c.second;
    if (!r.pass) ++c.first;
  }
  std::string out;
  for (const auto& id : ids) {
    const auto [fail, total] = counts[id];
    if (fail == 0) continue;
    out += "expected-discrepancy: " + id + " (printed variant fails in " + std::to_string(fail) + " of " +
           std::to_string(total) + " checks)\n";
  }
  return out;
}

inline auto run_verify(const VerifyArgs& a, const CliConfig& cfg, std::ostream& out) -> int {
  const int modes = (a.all ? 1 : 0) + (!a.id.empty() ? 1 : 0) + (a.integrals ? 1 : 0) + (a.clausen ? 1 : 0);
  if (modes != 1) throw CLI::ValidationError("verify", "choose exactly one of --all, --id, --integrals, --clausen");
  if ((a.m || a.k) && a.id.empty()) throw CLI::ValidationError("verify", "--m/--k require --id");

  std::vector<VerificationReport> reports;
  if (a.all) {
    reports = verify_all(cfg.tolerance, cfg.param_limit);
  } else if (a.integrals) {
    reports = verify_integrals(std::max(cfg.tolerance, 1e-13));
  } else if (a.clausen) {
    reports.push_back(cross_check_clausen(kClausenGridPoints, cfg.tolerance));
  } else {
    const IdentityDescriptor* d = nullptr;
    try {
      d = &find_identity(a.id);
    } catch (const key_error&) {
    }
    if (d == nullptr) {
      // integral identities are addressable by id too
      try {
        reports = verify_integral_identity(a.id, cfg.tolerance);
      } catch (const key_error&) {
        throw CLI::ValidationError("--id", "unknown identity '" + a.id + "'");
      }
    } else {
      if (a.m && a.k) throw CLI::ValidationError("verify", "give only one of --m, --k");
      std::optional<int> param = a.m ? a.m : a.k;
      if (param && d->is_family()) {
        const char want = param_letter(d->domain);
        if ((a.m && want != 'm') || (a.k && want != 'k'))
          throw CLI::ValidationError("verify", a.id + " is parameterised by " + std::string(1, want));
      }
      CatalogKey key{a.id, param};
      try {
        resolve(key);
      } catch (const key_error& e) {
        throw CLI::ValidationError("--id", e.what());
      }
      try {
        reports = verify(key, cfg.tolerance);
      } catch (const inconclusive_error& e) {
        VerificationReport r;
        r.key = key;
        r.tolerance = cfg.tolerance;
        r.inconclusive = true;
        r.note = e.what();
        reports.push_back(std::move(r));
      }
    }
  }

  const auto format = parse_format(cfg.format);
  std::string payload = render_reports(reports, format);
  if (format == OutputFormat::text) {
    payload += discrepancy_summary(reports);
    int pass = 0, printed_fail = 0, unexpected = 0, inc = 0;
    for (const auto& r : reports) {
      if (r.inconclusive) ++inc;
      else if (r.pass) ++pass;
      else if (r.expected_discrepancy) ++printed_fail;
      else ++unexpected;
    }
    payload += "summary: " + std::to_string(reports.size()) + " checks, " + std::to_string(pass) + " pass, " +
               std::to_string(printed_fail) + " printed-variant failures, " + std::to_string(unexpected) +
               " unexpected failures, " + std::to_string(inc) + " inconclusive\n";
  }
  emit(cfg, payload, out);
  return verify_exit_code(reports);
}

inline auto run_converge(const std::string& target, const CliConfig& cfg, std::ostream& out) -> int {
  if (!is_compare_target(target)) throw CLI::ValidationError("--target", "unknown target '" + target + "'");
  const auto table = compare(target, cfg.tolerance);
  std::string payload;
  if (cfg.format == "csv") payload = export_table(table, TableFormat::csv);
  else if (cfg.format == "json") payload = export_table(table, TableFormat::json);
  else payload = export_table(table, TableFormat::markdown);
  emit(cfg, payload, out);
  return ok;
}

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name. Returns the
/// process exit code.
inline auto run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"zetakit: rational zeta series, Clausen function and identity verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CliConfig cfg;
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tolerance, "Tolerance")->check(CLI::Range(kMinTolerance, 1e-2))->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(choices))->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write output to this path"); };

  detail::ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Evaluate a constant or special function");
  compute->add_option("constant", compute_args.constant, "zeta <s> | zeta3 | catalan | gamma | beta <s> | cl2 <theta> | zetaE <k>")
      ->required();
  compute->add_option("argument", compute_args.argument, "Argument for zeta, beta, cl2, zetaE");
  compute->add_option("--theta", compute_args.theta, "Angle for cl2, radians");
  compute->add_option("--method", compute_args.method, "zeta3: direct|apery|sga|ck|ewell|clausen|peeled|<id>; cl2: auto|accel|peeled|wzl|direct");
  add_tol(compute);
  add_format(compute, {"text", "json", "csv", "markdown"});
  add_out(compute);

  detail::VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities");
  verify_cmd->add_flag("--all", verify_args.all, "Every catalog identity");
  verify_cmd->add_option("--id", verify_args.id, "Single identity id");
  verify_cmd->add_option("--m", verify_args.m, "Family parameter m");
  verify_cmd->add_option("--k", verify_args.k, "Family parameter k");
  verify_cmd->add_flag("--integrals", verify_args.integrals, "Integral identities by quadrature");
  verify_cmd->add_flag("--clausen", verify_args.clausen, "Clausen method cross-check");
  add_tol(verify_cmd);
  verify_cmd->add_option("--param-limit", cfg.param_limit, "Largest family parameter")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_format(verify_cmd, {"text", "json", "csv", "markdown"});
  add_out(verify_cmd);

  std::string target = "zeta3";
  auto* converge = app.add_subcommand("converge", "Rank identities by terms needed");
  converge->add_option("--target", target, "zeta3 | catalan-relations | all")->capture_default_str();
  add_tol(converge);
  add_format(converge, {"text", "json", "csv", "markdown"});
  add_out(converge);

  auto* list = app.add_subcommand("list", "Dump the identity registry");
  add_format(list, {"text", "json", "csv", "markdown"});
  add_out(list);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (compute->parsed()) return detail::run_compute(compute_args, cfg, out);
    if (verify_cmd->parsed()) return detail::run_verify(verify_args, cfg, out);
    if (converge->parsed()) return detail::run_converge(target, cfg, out);
    detail::emit(cfg, render_registry(list_identities(), detail::parse_format(cfg.format)), out);
    return ok;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const inconclusive_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const key_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace zetakit::cli
