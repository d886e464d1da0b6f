#pragma once

// Double-precision special functions: Riemann and Hurwitz zeta, Dirichlet
// beta, Catalan's and Euler's constants, polygamma, the Euler-number zeta
// analogue and the Clausen function Cl2.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numbers>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/exact.hpp"
#include "zetakit/summation.hpp"

namespace zetakit {

/// A floating value, the number of series terms spent on it and a bound on
/// the truncation error (rounding is not included).
struct EvalResult {
  double value = 0.0;
  std::uint64_t terms_used = 0;
  double error_bound = 0.0;
};

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace detail {

// Euler-Maclaurin: direct head of kEmHead terms, kEmDepth Bernoulli corrections.
inline constexpr int kEmHead = 20;
inline constexpr int kEmDepth = 10;

// B_{2j}/(2j)! for j = 0..kEmDepth+1, from the exact table.
inline auto em_coefficients() -> const std::array<double, kEmDepth + 2>& {
  static const auto table = [] {
    std::array<double, kEmDepth + 2> t{};
    for (std::size_t j = 0; j < t.size(); ++j)
      t[j] = to_double(bernoulli(2 * j) / Rational(factorial(2 * j)));
    return t;
  }();
  return table;
}

inline auto require_finite(double x, const char* what) -> void {
  if (!std::isfinite(x)) throw domain_error(std::string(what) + ": argument must be finite");
}

}  // namespace detail

/// zeta(s, a) = sum_{n>=0} (n + a)^-s for s > 1, a > 0.
inline auto hurwitz_zeta(double s, double a) -> EvalResult {
  detail::require_finite(s, "hurwitz_zeta");
  detail::require_finite(a, "hurwitz_zeta");
  if (!(s > 1.0)) throw domain_error("hurwitz_zeta: requires s > 1");
  if (!(a > 0.0)) throw domain_error("hurwitz_zeta: requires a > 0");

  const auto& coeff = detail::em_coefficients();
  CompensatedSum<double> sum;
  for (int k = 0; k < detail::kEmHead; ++k) sum += std::pow(k + a, -s);

  const double x = detail::kEmHead + a;
  const double x_pow = std::pow(x, -s);
  sum += x * x_pow / (s - 1.0);
  sum += 0.5 * x_pow;

  // T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
  double rising = s;
  double x_term = x_pow / x;
  double omitted = 0.0;
  for (int j = 1; j <= detail::kEmDepth + 1; ++j) {
    const double t = coeff[j] * rising * x_term;
    if (j <= detail::kEmDepth) sum += t;
    else omitted = std::abs(t);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    x_term /= x * x;
  }
  return {sum.value(), static_cast<std::uint64_t>(detail::kEmHead + detail::kEmDepth), omitted};
}

/// Riemann zeta for s > 0, s != 1, plus the single continuation point s = 0.
inline auto riemann_zeta(double s) -> EvalResult {
  detail::require_finite(s, "riemann_zeta");
  if (s == 0.0) return {-0.5, 0, 0.0};
  if (s == 1.0) throw domain_error("riemann_zeta: pole at s = 1");
  if (s < 0.0) throw domain_error("riemann_zeta: s < 0 is not supported");
  if (s > 1.0) return hurwitz_zeta(s, 1.0);

  // 0 < s < 1: alternating series zeta(s) = eta(s)/(1 - 2^(1-s)), accelerated
  // with the Borwein weights d_k.
  constexpr int n = 30;
  std::array<double, n + 1> d{};
  double term = 1.0 / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    acc += term;
    d[i] = n * acc;
    term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
  }
  CompensatedSum<double> eta;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    eta += sign * (d[k] - d[n]) * std::pow(k + 1.0, -s);
  }
  const double scale = 1.0 - std::pow(2.0, 1.0 - s);
  const double eta_value = -eta.value() / d[n];
  // |eta error| <= 3 / ((3 + sqrt 8)^n |Gamma(s)|) and 1/|Gamma(s)| <= 1.13 on (0, 1).
  const double eta_bound = 3.0 * 1.13 / std::pow(3.0 + std::sqrt(8.0), n);
  return {eta_value / scale, static_cast<std::uint64_t>(n), eta_bound / std::abs(scale)};
}

/// Dirichlet beta for s >= 1.
inline auto dirichlet_beta(double s) -> EvalResult {
  detail::require_finite(s, "dirichlet_beta");
  if (s < 1.0) throw domain_error("dirichlet_beta: requires s >= 1");
  if (s == 1.0) return {std::numbers::pi / 4.0, 0, 0.0};
  if (s >= 30.0) {
    // Direct alternating sum; bounded by the first omitted term.
    CompensatedSum<double> sum;
    std::uint64_t n = 0;
    double t = 1.0;
    while (t > 1e-20) {
      sum += (n % 2 == 0 ? t : -t);
      ++n;
      t = std::pow(2.0 * n + 1.0, -s);
    }
    return {sum.value(), n, t};
  }
  const EvalResult lo = hurwitz_zeta(s, 0.25);
  const EvalResult hi = hurwitz_zeta(s, 0.75);
  const double scale = std::pow(4.0, -s);
  return {scale * (lo.value - hi.value), lo.terms_used + hi.terms_used,
          scale * (lo.error_bound + hi.error_bound)};
}

/// Catalan's constant G = beta(2).
inline auto catalan() -> EvalResult { return dirichlet_beta(2.0); }

/// Euler-Mascheroni constant from H_N - ln N with Euler-Maclaurin corrections.
inline auto euler_gamma() -> EvalResult {
  // long double throughout: log(N) in double alone costs an ulp of the result
  constexpr int n = detail::kEmHead;
  CompensatedSum<long double> sum;
  for (int k = 1; k <= n; ++k) sum += 1.0L / k;
  sum += -std::log(static_cast<long double>(n));
  sum += -0.5L / n;
  // + sum_k B_2k / (2k N^2k)
  double omitted = 0.0;
  long double n_pow = 1.0L;
  for (int k = 1; k <= detail::kEmDepth + 1; ++k) {
    n_pow *= static_cast<long double>(n) * n;
    const long double b2k = to_long_double(bernoulli(2 * static_cast<std::size_t>(k)));
    const long double t = b2k / (2.0L * k * n_pow);
    if (k <= detail::kEmDepth) sum += t;
    else omitted = static_cast<double>(std::abs(t));
  }
  return {static_cast<double>(sum.value()), static_cast<std::uint64_t>(n + detail::kEmDepth), omitted};
}

/// psi_order(z) = (-1)^(order+1) order! zeta(order+1, z).
inline auto polygamma(int order, double z) -> EvalResult {
  if (order < 1) throw domain_error("polygamma: order must be >= 1");
  detail::require_finite(z, "polygamma");
  if (!(z > 0.0)) throw domain_error("polygamma: requires z > 0");
  const EvalResult h = hurwitz_zeta(order + 1.0, z);
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  const double sign = (order % 2 == 1) ? 1.0 : -1.0;
  return {sign * fact * h.value, h.terms_used, fact * h.error_bound};
}

/// zeta_E(2k) (1 - 4^-k) exactly; k = 0 is the removable point pi/4.
inline auto zeta_E_weighted_exact(unsigned k) -> PiPower {
  if (k == 0) return {Rational(1, 4), 1};
  PiPower base = zeta_E_exact(k);
  base.coeff *= 1 - pow2(-2 * static_cast<std::int64_t>(k));
  return base;
}

inline auto zeta_E_weighted(unsigned k) -> EvalResult { return {zeta_E_weighted_exact(k).numeric(), 0, 0.0}; }

namespace detail {

// Float cache of zeta(2n) and zeta(2n) - 1, grown on demand.
class ZetaEvenCache {
 public:
  static constexpr unsigned kExactLimit = 128;

  auto value(unsigned n) -> double { return lookup(n).first; }
  auto minus_one(unsigned n) -> double { return lookup(n).second; }

 private:
  auto lookup(unsigned n) -> std::pair<double, double> {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.emplace_back(-0.5, -1.5);
    while (table_.size() <= n) {
      const auto m = static_cast<unsigned>(table_.size());
      const double minus_one = hurwitz_zeta(2.0 * m, 2.0).value;
      const double value = (m <= kExactLimit) ? zeta_even_exact(m).numeric() : 1.0 + minus_one;
      table_.emplace_back(value, minus_one);
    }
    return table_[n];
  }

  std::shared_mutex mutex_;
  std::vector<std::pair<double, double>> table_;
};

inline auto zeta_even_cache() -> ZetaEvenCache& {
  static ZetaEvenCache cache;
  return cache;
}

}  // namespace detail

/// zeta(2n) as a double (n = 0 gives -1/2). Cached.
inline auto zeta_even(unsigned n) -> double { return detail::zeta_even_cache().value(n); }

/// zeta(2n) - 1 without cancellation. Cached.
inline auto zeta_even_minus_one(unsigned n) -> double { return detail::zeta_even_cache().minus_one(n); }

/// zeta(s) - 1 = zeta(s, 2) for s > 1.
inline auto zeta_minus_one(double s) -> double { return hurwitz_zeta(s, 2.0).value; }

// ---------------------------------------------------------------------------
// Clausen function
// ---------------------------------------------------------------------------

enum class Cl2Method { direct, accel, peeled, wzl, automatic };

inline auto cl2_method_name(Cl2Method m) -> std::string_view {
  switch (m) {
    case Cl2Method::direct: return "direct";
    case Cl2Method::accel: return "accel";
    case Cl2Method::peeled: return "peeled";
    case Cl2Method::wzl: return "wzl";
    case Cl2Method::automatic: return "auto";
  }
  return "?";
}

inline auto parse_cl2_method(std::string_view name) -> std::optional<Cl2Method> {
  for (auto m : {Cl2Method::direct, Cl2Method::accel, Cl2Method::peeled, Cl2Method::wzl, Cl2Method::automatic})
    if (cl2_method_name(m) == name) return m;
  return std::nullopt;
}

inline constexpr std::uint64_t kCl2DirectTerms = 1'000'000;

namespace detail {

inline constexpr double kCl2SeriesTarget = 1e-18;
inline constexpr unsigned kCl2SeriesCap = 400;

// Sums c(n) * rho^n for n >= 1, stopping once the geometric majorant
// bound(n) of the remaining tail drops below kCl2SeriesTarget.
template <typename Coefficient, typename TailBound>
auto cl2_power_series(double rho, Coefficient coefficient, TailBound bound) -> EvalResult {
  CompensatedSum<double> sum;
  double rho_n = 1.0;
  unsigned n = 0;
  double tail = bound(0u);
  while (tail > kCl2SeriesTarget && n < kCl2SeriesCap) {
    ++n;
    rho_n *= rho;
    sum += coefficient(n) * rho_n;
    tail = bound(n);
  }
  return {sum.value(), n, tail};
}

// Each evaluator expects theta in (0, pi].

// theta (1 - log theta) + theta sum zeta(2n)/(n(2n+1)) (theta/2pi)^2n
inline auto cl2_accel(double theta) -> EvalResult {
  const double rho = (theta / kTwoPi) * (theta / kTwoPi);
  const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
  auto series = cl2_power_series(
      rho, [](unsigned n) { return zeta_even(n) / (n * (2.0 * n + 1.0)); },
      [&](unsigned n) {
        return theta * z2 * std::pow(rho, n + 1.0) / ((n + 1.0) * (2.0 * n + 3.0) * (1.0 - rho));
      });
  return {theta * (1.0 - std::log(theta)) + theta * series.value, series.terms_used, series.error_bound};
}

// Peeled form: the zeta(2n) - 1 series converges with ratio rho/4.
inline auto cl2_peeled(double theta) -> EvalResult {
  const double rho = (theta / kTwoPi) * (theta / kTwoPi);
  const double z2m1 = std::numbers::pi * std::numbers::pi / 6.0 - 1.0;
  auto series = cl2_power_series(
      rho, [](unsigned n) { return zeta_even_minus_one(n) / (n * (2.0 * n + 1.0)); },
      [&](unsigned n) {
        const double r = rho / 4.0;
        return theta * 4.0 * z2m1 * std::pow(r, n + 1.0) / ((n + 1.0) * (2.0 * n + 3.0) * (1.0 - r));
      });
  // (2pi/theta) log((2pi+theta)/(2pi-theta)) written with log1p for small theta.
  const double log_ratio = std::log1p(2.0 * theta / (kTwoPi - theta));
  const double head = 3.0 - std::log(theta * (1.0 - rho)) - (kTwoPi / theta) * log_ratio;
  return {theta * head + theta * series.value, series.terms_used, series.error_bound};
}

// theta - theta log(2 sin(theta/2)) - 2 theta sum zeta(2n)/(2n+1) (theta/2pi)^2n
inline auto cl2_wzl(double theta) -> EvalResult {
  const double rho = (theta / kTwoPi) * (theta / kTwoPi);
  const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
  auto series = cl2_power_series(
      rho, [](unsigned n) { return zeta_even(n) / (2.0 * n + 1.0); },
      [&](unsigned n) { return 2.0 * theta * z2 * std::pow(rho, n + 1.0) / ((2.0 * n + 3.0) * (1.0 - rho)); });
  const double head = theta - theta * std::log(2.0 * std::sin(theta / 2.0));
  return {head - 2.0 * theta * series.value, series.terms_used, series.error_bound};
}

// Defining sum, truncated after `terms`; the tail is below sum_{k>N} 1/k^2 < 1/N.
inline auto cl2_direct(double theta, std::uint64_t terms) -> EvalResult {
  CompensatedSum<double> sum;
  for (std::uint64_t k = 1; k <= terms; ++k) {
    const double kd = static_cast<double>(k);
    sum += std::sin(kd * theta) / (kd * kd);
  }
  return {sum.value(), terms, 1.0 / static_cast<double>(terms)};
}

}  // namespace detail

/// Cl2(theta) = sum sin(k theta)/k^2. theta is first reduced by 2pi-periodicity
/// and oddness to [0, pi]; `automatic` uses accel up to pi/2 and wzl above.
inline auto clausen_cl2(double theta, Cl2Method method = Cl2Method::automatic,
                        std::uint64_t direct_terms = kCl2DirectTerms) -> EvalResult {
  detail::require_finite(theta, "clausen_cl2");
  const double reduced = std::remainder(theta, kTwoPi);
  const double sign = reduced < 0.0 ? -1.0 : 1.0;
  const double t = std::abs(reduced);
  if (t == 0.0) return {0.0, 0, 0.0};

  if (method == Cl2Method::automatic) method = (t <= kPi / 2.0) ? Cl2Method::accel : Cl2Method::wzl;
  EvalResult r;
  switch (method) {
    case Cl2Method::direct: r = detail::cl2_direct(t, direct_terms); break;
    case Cl2Method::accel: r = detail::cl2_accel(t); break;
    case Cl2Method::peeled: r = detail::cl2_peeled(t); break;
    case Cl2Method::wzl: r = detail::cl2_wzl(t); break;
    case Cl2Method::automatic: break;
  }
  r.value *= sign;
  return r;
}

}  // namespace zetakit
