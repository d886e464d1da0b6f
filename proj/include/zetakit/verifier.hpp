#pragma once

// Tolerance-driven verification of catalog identities, exact checks of the
// combinatorial lemmas, and quadrature checks of the log-trig integrals.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "zetakit/catalog.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/exact.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/specfun.hpp"

namespace zetakit {

inline constexpr double kMinTolerance = 1e-13;
inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultParamLimit = 12;
inline constexpr std::int64_t kDefaultMaxTerms = 1'000'000;
inline constexpr int kClausenGridPoints = 64;
inline constexpr double kClausenGridMargin = 0.05;
/// Truncated Fourier series only reaches ~1/N^2; checked at this looser level.
inline constexpr double kDirectClausenTolerance = 1e-6;

/// Angles used for the theta-parameterised integral identities.
inline auto integral_theta_grid() -> const std::vector<double>& {
  constexpr double pi = std::numbers::pi;
  static const std::vector<double> grid{pi / 6.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0};
  return grid;
}

/// Term cap for automatic N selection; ZETAKIT_MAX_TERMS overrides.
inline auto max_terms() -> std::int64_t {
  const char* env = std::getenv("ZETAKIT_MAX_TERMS");
  if (env == nullptr || *env == '\0') return kDefaultMaxTerms;
  std::int64_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw domain_error("ZETAKIT_MAX_TERMS must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

/// Which right-hand side a report checks. Every canonical check is
/// `corrected`; `printed` appears only for entries whose print was wrong.
enum class Variant { printed, corrected };

inline auto variant_name(Variant v) -> std::string_view { return v == Variant::printed ? "printed" : "corrected"; }

struct VerificationReport {
  CatalogKey key;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::int64_t n_terms = 0;
  double tolerance = 0.0;
  Variant variant = Variant::corrected;
  bool pass = false;
  double tail_bound = 0.0;
  bool expected_discrepancy = false;  ///< printed variant known to be wrong
  bool inconclusive = false;
  std::optional<double> theta;
  std::string note;
};

namespace detail {

inline auto check_tolerance(double tolerance) -> void {
  if (!(tolerance >= kMinTolerance) || !std::isfinite(tolerance))
    throw domain_error("tolerance must be a finite value >= 1e-13");
}

inline auto fill_errors(VerificationReport& r) -> void {
  r.abs_err = std::abs(r.lhs - r.rhs);
  r.rel_err = r.rhs != 0.0 ? r.abs_err / std::abs(r.rhs) : r.abs_err;
  r.pass = r.abs_err <= r.tolerance + r.tail_bound;
}

}  // namespace detail

/// Checks one catalog identity. N is the least index whose assembled tail
/// bound is at most tolerance/2. Corrected entries yield two reports, the
/// corrected one first. Throws inconclusive_error when N exceeds the cap.
inline auto verify(const CatalogKey& key, double tolerance) -> std::vector<VerificationReport> {
  detail::check_tolerance(tolerance);
  const auto& d = resolve(key);
  const std::int64_t big_n = terms_for_bound(key, tolerance / 2.0, max_terms());
  const EvalResult series = partial_sum(key, big_n);

  VerificationReport base;
  base.key = key;
  base.lhs = assemble(key, series.value);
  base.n_terms = static_cast<std::int64_t>(series.terms_used);
  base.tolerance = tolerance;
  base.tail_bound = assembled_tail_bound(key, big_n);

  std::vector<VerificationReport> out;
  VerificationReport corrected = base;
  corrected.rhs = closed_form(key);
  detail::fill_errors(corrected);
  out.push_back(corrected);

  if (d.status == IdentityStatus::corrected) {
    VerificationReport printed = base;
    printed.variant = Variant::printed;
    printed.rhs = printed_form(key);
    printed.expected_discrepancy = true;
    printed.note = "right-hand side as printed";
    detail::fill_errors(printed);
    out.push_back(printed);
  }
  return out;
}

/// Keys checked by verify_all: every non-representation entry, families for
/// parameters up to param_limit. Registry order.
inline auto verification_keys(int param_limit) -> std::vector<CatalogKey> {
  if (param_limit < 1) throw domain_error("param_limit must be >= 1");
  std::vector<CatalogKey> keys;
  for (const auto& d : registry()) {
    if (d.status == IdentityStatus::representation) continue;
    for (auto& k : family_keys(d, param_limit)) keys.push_back(std::move(k));
  }
  return keys;
}

/// Runs `task(i)` for i in [0, count) on a small worker pool.
template <typename Task>
auto parallel_for(std::size_t count, Task&& task) -> void {
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < std::min(workers, count); ++w) pool.emplace_back(run);
  run();
}

/// verify over every key; inconclusive entries become reports, never throws
/// for them. Output order is registry order regardless of scheduling.
inline auto verify_all(double tolerance, int param_limit) -> std::vector<VerificationReport> {
  detail::check_tolerance(tolerance);
  const auto keys = verification_keys(param_limit);
  std::vector<std::vector<VerificationReport>> slots(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) {
    try {
      slots[i] = verify(keys[i], tolerance);
    } catch (const inconclusive_error& e) {
      VerificationReport r;
      r.key = keys[i];
      r.tolerance = tolerance;
      r.inconclusive = true;
      r.note = e.what();
      slots[i].push_back(std::move(r));
    }
  });
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

/// C(2n,2j) - C(2n+1,2j+1)/(2n+1) = (2j/(2j+1)) C(2n,2j), exactly, for
/// 1 <= n <= n_max and 1 <= j <= j_max.
inline auto check_binomial_identity(int n_max, int j_max) -> bool {
  if (n_max < 1 || j_max < 1) throw domain_error("check_binomial_identity: bounds must be >= 1");
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= j_max; ++j) {
      const auto un = static_cast<std::uint64_t>(n), uj = static_cast<std::uint64_t>(j);
      const Rational c = Rational(binomial(2 * un, 2 * uj));
      const Rational lhs = c - Rational(binomial(2 * un + 1, 2 * uj + 1), BigInt(2 * n + 1));
      const Rational rhs = Rational(BigInt(2 * j), BigInt(2 * j + 1)) * c;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/// 1/(2k-1) - 1/(2k) = 1/(2k(2k-1)) exactly for 1 <= k <= k_max.
inline auto check_harmonic_identity(int k_max) -> bool {
  if (k_max < 1) throw domain_error("check_harmonic_identity: k_max must be >= 1");
  for (int k = 1; k <= k_max; ++k) {
    const Rational lhs = Rational(BigInt(1), BigInt(2 * k - 1)) - Rational(BigInt(1), BigInt(2 * k));
    const BigInt den = BigInt(2 * k) * (2 * k - 1);
    if (lhs != Rational(BigInt(1), den)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Integrands

struct Integrand {
  std::string id;
  std::string description;
  std::function<double(double)> f;
  // Interior singular points inside (lo, hi).
  std::function<std::vector<double>(double, double)> singular_points;
};

namespace detail {

// Points x0 + k * period strictly inside (lo, hi).
inline auto lattice_points(double x0, double period, double lo, double hi) -> std::vector<double> {
  std::vector<double> pts;
  for (double k = std::ceil((lo - x0) / period); x0 + k * period < hi; k += 1.0) {
    const double x = x0 + k * period;
    if (x > lo) pts.push_back(x);
  }
  return pts;
}

inline auto build_integrands() -> std::vector<Integrand> {
  constexpr double pi = std::numbers::pi;
  const double ln2 = std::log(2.0);
  auto lattice = [](double x0, double period) {
    return [=](double lo, double hi) { return lattice_points(x0, period, lo, hi); };
  };
  std::vector<Integrand> v;
  v.push_back({"log_sin", "log|sin x|", [](double x) { return std::log(std::abs(std::sin(x))); }, lattice(0.0, pi)});
  v.push_back({"log_cos", "log|cos x|", [](double x) { return std::log(std::abs(std::cos(x))); },
               lattice(pi / 2.0, pi)});
  // 1 + sin x = 2 cos^2(pi/4 - x/2) and 1 + cos x = 2 cos^2(x/2) avoid cancellation at the zeros.
  v.push_back({"log_one_plus_sin", "log(1 + sin x)",
               [=](double x) { return ln2 + 2.0 * std::log(std::abs(std::cos(pi / 4.0 - x / 2.0))); },
               lattice(1.5 * pi, 2.0 * pi)});
  v.push_back({"log_one_plus_cos", "log(1 + cos x)",
               [=](double x) { return ln2 + 2.0 * std::log(std::abs(std::cos(x / 2.0))); }, lattice(pi, 2.0 * pi)});
  v.push_back({"log_two_sin_half", "log|2 sin(x/2)|",
               [](double x) { return std::log(std::abs(2.0 * std::sin(x / 2.0))); }, lattice(0.0, 2.0 * pi)});
  v.push_back({"x_log_sin", "x log|sin x|", [](double x) { return x * std::log(std::abs(std::sin(x))); },
               lattice(0.0, pi)});
  v.push_back({"x2_log_two_sin_half", "x^2 log|2 sin(x/2)|",
               [](double x) { return x * x * std::log(std::abs(2.0 * std::sin(x / 2.0))); },
               lattice(0.0, 2.0 * pi)});
  return v;
}

}  // namespace detail

inline auto integrands() -> const std::vector<Integrand>& {
  static const std::vector<Integrand> v = detail::build_integrands();
  return v;
}

inline auto find_integrand(std::string_view id) -> const Integrand& {
  for (const auto& i : integrands())
    if (i.id == id) return i;
  throw key_error("unknown integrand: " + std::string(id));
}

/// Tanh-sinh quadrature of a registered integrand, split at its interior
/// singular points so every log singularity sits on a panel endpoint.
inline auto quadrature(std::string_view integrand_id, double lower, double upper,
                       const TanhSinhOptions& options = {}) -> QuadratureResult {
  const auto& integrand = find_integrand(integrand_id);
  if (!(lower < upper)) throw domain_error("quadrature: requires lower < upper");
  std::vector<double> cuts{lower};
  for (double x : integrand.singular_points(lower, upper)) cuts.push_back(x);
  cuts.push_back(upper);
  QuadratureResult total;
  CompensatedSum<double> sum;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto piece = tanh_sinh(integrand.f, cuts[i], cuts[i + 1], options);
    sum += piece.value;
    total.error_estimate += piece.error_estimate;
    total.evaluations += piece.evaluations;
  }
  total.value = sum.value();
  return total;
}

// ---------------------------------------------------------------------------
// Integral identities

struct IntegralIdentity {
  std::string id;
  std::string description;
  std::string integrand;
  bool parameterized = false;  ///< integrates over [0, theta] on the theta grid
  double upper = 0.0;          ///< fixed upper limit otherwise
  std::function<double(double)> rhs;
  std::function<double(double)> printed_rhs;  ///< set when the print is wrong
};

namespace detail {

inline auto build_integral_identities() -> std::vector<IntegralIdentity> {
  constexpr double pi = std::numbers::pi;
  const double ln2 = std::log(2.0);
  auto cl2 = [](double t) { return clausen_cl2(t).value; };
  std::vector<IntegralIdentity> v;
  v.push_back({"LOG_SIN_HALF_PI", "int_0^{pi/2} log sin x dx = -(pi/2) log 2", "log_sin", false, pi / 2.0,
               [=](double) { return -pi / 2.0 * ln2; }, {}});
  v.push_back({"LOG_TWO_SIN_HALF_PI", "int_0^pi log(2 sin(x/2)) dx = 0", "log_two_sin_half", false, pi,
               [](double) { return 0.0; }, {}});
  v.push_back({"U_LOG_SIN_QUARTER_PI", "int_0^{pi/4} u log sin u du = 35/128 zeta(3) - pi G/8 - pi^2/32 log 2",
               "x_log_sin", false, pi / 4.0,
               [=](double) {
                 return 35.0 / 128.0 * riemann_zeta(3.0).value - pi * catalan().value / 8.0 - pi * pi / 32.0 * ln2;
               },
               {}});
  v.push_back({"X2_LOG_TWO_SIN_HALF",
               "int_0^{pi/2} x^2 log(2 sin(x/2)) dx = (72 pi zeta(3) - 192 pi^2 G + psi3(1/4) - psi3(3/4))/768",
               "x2_log_two_sin_half", false, pi / 2.0,
               [=](double) {
                 const double psi = polygamma(3, 0.25).value - polygamma(3, 0.75).value;
                 return (72.0 * pi * riemann_zeta(3.0).value - 192.0 * pi * pi * catalan().value + psi) / 768.0;
               },
               {}});
  v.push_back({"LOG_SIN_THETA", "int_0^t log|sin x| dx = -Cl2(2t)/2 - t log 2", "log_sin", true, 0.0,
               [=](double t) { return -0.5 * cl2(2.0 * t) - t * ln2; }, {}});
  v.push_back({"LOG_COS_THETA", "int_0^t log|cos x| dx = Cl2(pi - 2t)/2 - t log 2; printed with -Cl2(pi - 2t)/2",
               "log_cos", true, 0.0, [=](double t) { return 0.5 * cl2(pi - 2.0 * t) - t * ln2; },
               [=](double t) { return -0.5 * cl2(pi - 2.0 * t) - t * ln2; }});
  v.push_back({"LOG_ONE_PLUS_COS_THETA", "int_0^t log(1 + cos x) dx = 2 Cl2(pi - t) - t log 2", "log_one_plus_cos",
               true, 0.0, [=](double t) { return 2.0 * cl2(pi - t) - t * ln2; }, {}});
  v.push_back({"LOG_ONE_PLUS_SIN_THETA", "int_0^t log(1 + sin x) dx = 2G - 2 Cl2(pi/2 + t) - t log 2",
               "log_one_plus_sin", true, 0.0,
               [=](double t) { return 2.0 * catalan().value - 2.0 * cl2(pi / 2.0 + t) - t * ln2; }, {}});
  v.push_back({"CL2_DEFINITION", "-int_0^t log(2 sin(x/2)) dx = Cl2(t) (accelerated series)", "log_two_sin_half",
               true, 0.0, [](double t) { return -clausen_cl2(t, Cl2Method::accel).value; }, {}});
  return v;
}

}  // namespace detail

inline auto integral_identities() -> const std::vector<IntegralIdentity>& {
  static const std::vector<IntegralIdentity> v = detail::build_integral_identities();
  return v;
}

inline auto find_integral_identity(std::string_view id) -> const IntegralIdentity& {
  for (const auto& i : integral_identities())
    if (i.id == id) return i;
  throw key_error("unknown integral identity: " + std::string(id));
}

/// Angles checked for a parameterised identity. The Clausen definition adds
/// t = 1 to the common grid.
inline auto integral_thetas(const IntegralIdentity& ident) -> std::vector<double> {
  if (!ident.parameterized) return {ident.upper};
  auto grid = integral_theta_grid();
  if (ident.id == "CL2_DEFINITION") grid.push_back(1.0);
  return grid;
}

/// Quadrature left side against the closed form, one report per angle (and
/// per variant where the print was wrong). n_terms counts evaluations.
inline auto verify_integral_identity(std::string_view id, double tolerance) -> std::vector<VerificationReport> {
  detail::check_tolerance(tolerance);
  const auto& ident = find_integral_identity(id);
  TanhSinhOptions options;
  options.tolerance = std::min(options.tolerance, tolerance / 100.0);
  std::vector<VerificationReport> out;
  for (double t : integral_thetas(ident)) {
    const auto q = quadrature(ident.integrand, 0.0, t, options);
    VerificationReport r;
    r.key = {ident.id, std::nullopt};
    r.lhs = q.value;
    r.n_terms = static_cast<std::int64_t>(q.evaluations);
    r.tolerance = tolerance;
    if (ident.parameterized) r.theta = t;
    r.rhs = ident.rhs(t);
    detail::fill_errors(r);
    out.push_back(r);
    if (ident.printed_rhs) {
      r.variant = Variant::printed;
      r.expected_discrepancy = true;
      r.note = "right-hand side as printed";
      r.rhs = ident.printed_rhs(t);
      detail::fill_errors(r);
      out.push_back(r);
    }
  }
  return out;
}

inline auto verify_integrals(double tolerance) -> std::vector<VerificationReport> {
  std::vector<VerificationReport> out;
  for (const auto& ident : integral_identities())
    for (auto& r : verify_integral_identity(ident.id, tolerance)) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Clausen cross-check

struct ClausenDiscrepancy {
  double max_series = 0.0;    ///< largest pairwise gap among accel/peeled/wzl
  double max_direct = 0.0;    ///< largest gap between direct and accel
  double max_symmetry = 0.0;  ///< largest |Cl2(t) + Cl2(-t)| and |Cl2(t) + Cl2(2pi - t)|
  double worst_theta = 0.0;   ///< where max_series occurs
  int points = 0;
};

/// Interior grid of `grid_points` angles in (0.05, 2pi - 0.05).
inline auto clausen_grid(int grid_points) -> std::vector<double> {
  const double lo = kClausenGridMargin, hi = kTwoPi - kClausenGridMargin;
  std::vector<double> grid;
  for (int i = 1; i <= grid_points; ++i) grid.push_back(lo + (hi - lo) * i / (grid_points + 1));
  return grid;
}

inline auto clausen_discrepancies(int grid_points) -> ClausenDiscrepancy {
  if (grid_points < 8) throw domain_error("cross_check_clausen: grid_points must be >= 8");
  const auto grid = clausen_grid(grid_points);
  struct Row {
    double series = 0, direct = 0, symmetry = 0;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const double t = grid[i];
    const double a = clausen_cl2(t, Cl2Method::accel).value;
    const double p = clausen_cl2(t, Cl2Method::peeled).value;
    const double w = clausen_cl2(t, Cl2Method::wzl).value;
    const double dir = clausen_cl2(t, Cl2Method::direct).value;
    rows[i].series = std::max({std::abs(a - p), std::abs(a - w), std::abs(p - w)});
    rows[i].direct = std::abs(dir - a);
    rows[i].symmetry = std::max(std::abs(a + clausen_cl2(-t, Cl2Method::accel).value),
                                std::abs(a + clausen_cl2(kTwoPi - t, Cl2Method::accel).value));
  });
  ClausenDiscrepancy d;
  d.points = grid_points;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].series > d.max_series) {
      d.max_series = rows[i].series;
      d.worst_theta = grid[i];
    }
    d.max_direct = std::max(d.max_direct, rows[i].direct);
    d.max_symmetry = std::max(d.max_symmetry, rows[i].symmetry);
  }
  return d;
}

/// Pairwise agreement of the Clausen evaluators over the grid. lhs holds the
/// largest series gap, abs_err the largest normalised gap; the direct sum is
/// held to the looser of `tolerance` and 1e-6.
inline auto cross_check_clausen(int grid_points, double tolerance) -> VerificationReport {
  const auto d = clausen_discrepancies(grid_points);
  const double direct_tol = std::max(tolerance, kDirectClausenTolerance);
  VerificationReport r;
  r.key = {"CL2_CROSS_CHECK", std::nullopt};
  r.lhs = d.max_series;
  r.rhs = 0.0;
  r.n_terms = d.points;
  r.tolerance = tolerance;
  r.theta = d.worst_theta;
  r.abs_err = std::max({d.max_series, d.max_symmetry, d.max_direct * tolerance / direct_tol});
  r.rel_err = r.abs_err;
  r.pass = r.abs_err <= tolerance;
  char buf[160];
  std::snprintf(buf, sizeof buf, "series %.3e, direct %.3e (tol %.1e), symmetry %.3e", d.max_series, d.max_direct,
                direct_tol, d.max_symmetry);
  r.note = buf;
  return r;
}

}  // namespace zetakit
