#pragma once

// Registry of rational zeta-series identities: summands, closed forms and
// rigorous tail majorants, keyed by string id.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetakit/errors.hpp"
#include "zetakit/exact.hpp"
#include "zetakit/specfun.hpp"
#include "zetakit/summation.hpp"

namespace zetakit {

enum class IdentityStatus { as_printed, corrected, representation };

inline auto status_name(IdentityStatus s) -> std::string_view {
  switch (s) {
    case IdentityStatus::as_printed: return "as-printed";
    case IdentityStatus::corrected: return "corrected";
    case IdentityStatus::representation: return "representation";
  }
  return "?";
}

/// Parameter domain of a catalog entry.
enum class ParamDomain { none, m_from_1, k_from_0, k_from_1 };

inline auto param_domain_name(ParamDomain d) -> std::string_view {
  switch (d) {
    case ParamDomain::none: return "none";
    case ParamDomain::m_from_1: return "m>=1";
    case ParamDomain::k_from_0: return "k>=0";
    case ParamDomain::k_from_1: return "k>=1";
  }
  return "?";
}

inline auto param_domain_min(ParamDomain d) -> int { return d == ParamDomain::k_from_0 ? 0 : 1; }

inline auto param_letter(ParamDomain d) -> char { return d == ParamDomain::m_from_1 ? 'm' : 'k'; }

struct CatalogKey {
  std::string id;
  std::optional<int> param;

  [[nodiscard]] auto to_string() const -> std::string;
  friend auto operator==(const CatalogKey&, const CatalogKey&) -> bool = default;
};

/// One registry entry. The series is sum_{n >= start_index} term(p, n); its
/// assembled value offset(p) + scale(p) * series equals closed_form(p).
/// For plain identities offset = 0 and scale = 1.
struct IdentityDescriptor {
  using ParamFn = std::function<double(int)>;
  using IndexFn = std::function<double(int, std::int64_t)>;

  std::string id;
  std::string paper_eq;
  std::string description;
  IdentityStatus status = IdentityStatus::as_printed;
  ParamDomain domain = ParamDomain::none;
  int start_index = 1;
  /// Constant the closed form is built on ("zeta3", "catalan") or empty.
  std::string target;

  IndexFn term;
  IndexFn tail_bound;  ///< bound on |sum_{n > N} term(p, n)|
  ParamFn closed_form;
  ParamFn printed_form;  ///< set only when status == corrected
  ParamFn offset;        ///< empty means 0
  ParamFn scale;         ///< empty means 1

  [[nodiscard]] auto is_family() const -> bool { return domain != ParamDomain::none; }
  [[nodiscard]] auto offset_at(int p) const -> double { return offset ? offset(p) : 0.0; }
  [[nodiscard]] auto scale_at(int p) const -> double { return scale ? scale(p) : 1.0; }
};

inline auto CatalogKey::to_string() const -> std::string {
  if (!param) return id;
  return id + "[" + std::to_string(*param) + "]";
}

namespace detail {

// a n + b
struct Linear {
  double a = 1.0;
  double b = 0.0;
  [[nodiscard]] auto at(double n) const -> double { return a * n + b; }
};

// C(top.at(n), lower)
struct BinomialFactor {
  Linear top;
  int lower = 0;
};

inline auto binomial_real(double top, int lower) -> double {
  if (lower < 0 || top < lower) return 0.0;
  double c = 1.0;
  for (int i = 0; i < lower; ++i) c = c * (top - i) / (i + 1);
  return c;
}

enum class ZetaPart { even, even_minus_one };

// Shape of sum_n zeta_part(n) * prod(num)/prod(den) * C(...) * ratio^n [* (1 - 4^-n)].
struct ZetaSeries {
  ZetaPart zeta = ZetaPart::even;
  double ratio = 1.0;
  std::vector<Linear> num;
  std::vector<Linear> den;
  std::function<std::optional<BinomialFactor>(int)> binomial;
  bool damped = false;

  [[nodiscard]] auto binom_at(int p) const -> std::optional<BinomialFactor> {
    return binomial ? binomial(p) : std::nullopt;
  }

  [[nodiscard]] auto weight(int p, double n) const -> double {
    double w = 1.0;
    for (const auto& f : num) w *= f.at(n);
    for (const auto& f : den) w /= f.at(n);
    if (auto b = binom_at(p)) w *= binomial_real(b->top.at(n), b->lower);
    return w;
  }

  [[nodiscard]] auto term(int p, std::int64_t n) const -> double {
    const auto un = static_cast<unsigned>(n);
    const double z = zeta == ZetaPart::even ? zeta_even(un) : zeta_even_minus_one(un);
    double t = z * weight(p, static_cast<double>(n)) * std::pow(ratio, static_cast<double>(n));
    if (damped) t *= 1.0 - std::ldexp(1.0, -2 * static_cast<int>(n));
    return t;
  }

  // First n >= 1 from which every factor is positive and the binomial is nonzero.
  [[nodiscard]] auto first_positive(int p) const -> std::int64_t {
    std::int64_t n = 1;
    auto ok = [&](std::int64_t m) {
      const double x = static_cast<double>(m);
      for (const auto& f : num)
        if (!(f.at(x) > 0.0)) return false;
      for (const auto& f : den)
        if (!(f.at(x) > 0.0)) return false;
      if (auto b = binom_at(p))
        if (b->top.at(x) < b->lower || b->top.at(x) - b->lower + 1 <= 0.0) return false;
      return true;
    };
    while (!ok(n)) ++n;
    return n;
  }

  // Majorant zeta(2n) <= zeta(2) (or zeta(2n) - 1 <= 4 (zeta(2) - 1) 4^-n),
  // (1 - 4^-n) <= 1, then a geometric bound M(n1) / (1 - q) where q bounds
  // every later ratio M(n+1)/M(n). Numerator and binomial ratios decrease in
  // n and denominator ratios stay below 1, so q is their value at n1.
  [[nodiscard]] auto tail(int p, std::int64_t big_n) const -> double {
    const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
    const double coef = zeta == ZetaPart::even ? z2 : 4.0 * (z2 - 1.0);
    const double r = zeta == ZetaPart::even ? ratio : ratio / 4.0;
    const std::int64_t n1 = std::max(big_n + 1, first_positive(p));
    const double x = static_cast<double>(n1);
    double growth = 1.0;
    for (const auto& f : num) growth *= f.at(x + 1.0) / f.at(x);
    if (auto b = binom_at(p)) growth *= binomial_real(b->top.at(x + 1.0), b->lower) / binomial_real(b->top.at(x), b->lower);
    const double q = r * growth;
    if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
    const double lead = coef * std::abs(weight(p, x)) * std::pow(r, x);
    return lead / (1.0 - q);
  }
};

// sum of coeff * pi^power over the terms, accumulated in long double and
// rounded once, so equal exact forms give bit-identical doubles.
inline auto pi_polynomial(std::initializer_list<PiPower> terms) -> double {
  const long double pi = std::numbers::pi_v<long double>;
  long double total = 0.0L;
  for (const auto& t : terms) {
    long double p = 1.0L;
    for (unsigned i = 0; i < t.power; ++i) p *= pi;
    total += to_long_double(t.coeff) * p;
  }
  return static_cast<double>(total);
}

inline auto q(long long num, long long den = 1) -> Rational { return Rational(BigInt(num), BigInt(den)); }

inline auto constant_G() -> double { return catalan().value; }
inline auto constant_zeta3() -> double { return riemann_zeta(3.0).value; }
inline auto constant_beta4() -> double { return dirichlet_beta(4.0).value; }

struct Builder {
  std::vector<IdentityDescriptor> entries;

  auto add(IdentityDescriptor d) -> IdentityDescriptor& {
    entries.push_back(std::move(d));
    return entries.back();
  }

  auto series(std::string id, std::string eq, std::string text, ZetaSeries shape) -> IdentityDescriptor& {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.paper_eq = std::move(eq);
    d.description = std::move(text);
    d.term = [shape](int p, std::int64_t n) { return shape.term(p, n); };
    d.tail_bound = [shape](int p, std::int64_t big_n) { return shape.tail(p, big_n); };
    return add(std::move(d));
  }
};

inline auto den(std::initializer_list<Linear> f) -> std::vector<Linear> { return f; }

inline auto shape_of(ZetaPart zeta, double ratio, std::vector<Linear> num = {}, std::vector<Linear> den = {})
    -> ZetaSeries {
  ZetaSeries s;
  s.zeta = zeta;
  s.ratio = ratio;
  s.num = std::move(num);
  s.den = std::move(den);
  return s;
}

inline auto build_registry() -> std::vector<IdentityDescriptor> {
  using std::log;
  constexpr double pi = std::numbers::pi;
  constexpr double pi2 = pi * pi;
  const Linear n{1, 0}, n1{1, 1}, two_n_m1{2, -1}, two_n_m2{2, -2}, two_n_p1{2, 1}, two_n_p2{2, 2},
      two_n_p3{2, 3}, two_n_p5{2, 5};
  constexpr double quarter = 0.25, sixteenth = 1.0 / 16.0;
  const double half_pi = pi / 2.0;

  Builder b;

  // Clausen representations, anchored at theta = pi/2 where Cl2 = G.
  {
    auto& d = b.series("CL2_ACCEL_8", "Eq. (8)",
                       "Cl2(t)/t = 1 - log|t| + sum zeta(2n)/(n(2n+1)) (t/2pi)^2n; anchored at t = pi/2",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n, two_n_p1})));
    d.status = IdentityStatus::representation;
    d.target = "catalan";
    d.offset = [=](int) { return half_pi * (1.0 - log(half_pi)); };
    d.scale = [=](int) { return half_pi; };
    d.closed_form = [](int) { return constant_G(); };
  }
  {
    auto& d = b.series("SUM_9", "Eq. (9)", "sum zeta(2n)/(n(2n+1)16^n) = 2G/pi - 1 + log(pi/2)",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n, two_n_p1})));
    d.target = "catalan";
    d.closed_form = [=](int) { return 2.0 * constant_G() / pi - 1.0 + log(pi / 2.0); };
  }
  {
    auto& d = b.series("CL2_PEELED_10", "Eq. (10)",
                       "peeled Clausen form with (zeta(2n)-1)/(n(2n+1)) (t/2pi)^2n; anchored at t = pi/2",
                       shape_of(ZetaPart::even_minus_one, sixteenth, {}, den({n, two_n_p1})));
    d.status = IdentityStatus::representation;
    d.target = "catalan";
    d.offset = [=](int) {
      return half_pi * (3.0 - log(half_pi * (1.0 - sixteenth)) - 4.0 * log(5.0 / 3.0));
    };
    d.scale = [=](int) { return half_pi; };
    d.closed_form = [](int) { return constant_G(); };
  }
  {
    auto& d = b.series("CL2_WZL_11", "Eq. (11)",
                       "Cl2(t) = t - t log(2 sin(t/2)) - sum 2 zeta(2n) t^(2n+1)/((2n+1)(2pi)^2n); anchored at t = pi/2",
                       shape_of(ZetaPart::even, sixteenth, {}, den({two_n_p1})));
    d.status = IdentityStatus::representation;
    d.target = "catalan";
    d.offset = [=](int) { return half_pi * (1.0 - log(2.0 * std::sin(pi / 4.0))); };
    d.scale = [=](int) { return -pi; };
    d.closed_form = [](int) { return constant_G(); };
  }

  // Apery's constant.
  auto zeta3_entry = [&](IdentityDescriptor& d) {
    d.target = "zeta3";
    d.closed_form = [](int) { return constant_zeta3(); };
  };
  {
    auto& d = b.series("ZETA3_12", "Eq. (12)",
                       "zeta(3) = 4pi^2/35 (1/2 + 2G/pi - sum zeta(2n)/((n+1)(2n+1)16^n))",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n1, two_n_p1})));
    zeta3_entry(d);
    d.offset = [=](int) { return 4.0 * pi2 / 35.0 * (0.5 + 2.0 * constant_G() / pi); };
    d.scale = [=](int) { return -4.0 * pi2 / 35.0; };
  }
  {
    auto& d = b.series("ZETA3_13", "Eq. (13)", "zeta(3) = 2pi^2/9 (log 2 + 2 sum_{n>=0} zeta(2n)/((2n+3)4^n))",
                       shape_of(ZetaPart::even, quarter, {}, den({two_n_p3})));
    zeta3_entry(d);
    d.start_index = 0;
    d.offset = [=](int) { return 2.0 * pi2 / 9.0 * log(2.0); };
    d.scale = [=](int) { return 4.0 * pi2 / 9.0; };
  }
  {
    IdentityDescriptor d;
    d.id = "ZETA3_APERY_14";
    d.paper_eq = "Eq. (14)";
    d.description = "zeta(3) = 5/2 sum (-1)^(n-1) / (n^3 C(2n,n))";
    // 1 / (n^3 C(2n,n)), with C(2n,n) built by its ratio recurrence.
    auto magnitude = [](std::int64_t m) {
      double c = 1.0;
      for (std::int64_t i = 1; i <= m; ++i) c *= (2.0 * i) * (2.0 * i - 1.0) / (static_cast<double>(i) * i);
      const double md = static_cast<double>(m);
      return 1.0 / (md * md * md * c);
    };
    d.term = [=](int, std::int64_t m) { return (m % 2 == 1 ? 1.0 : -1.0) * magnitude(m); };
    // Alternating with decreasing magnitude: the tail is below its first term.
    d.tail_bound = [=](int, std::int64_t big_n) { return magnitude(big_n + 1); };
    d.scale = [](int) { return 2.5; };
    zeta3_entry(d);
    b.add(std::move(d));
  }
  {
    auto& d = b.series("ZETA3_CK_15", "Eq. (15)",
                       "zeta(3) = -pi^2/3 sum_{n>=0} (2n+5) zeta(2n)/((2n+1)(2n+2)(2n+3) 2^2n)",
                       shape_of(ZetaPart::even, quarter, {two_n_p5}, den({two_n_p1, two_n_p2, two_n_p3})));
    zeta3_entry(d);
    d.start_index = 0;
    d.scale = [=](int) { return -pi2 / 3.0; };
  }
  {
    auto& d = b.series("ZETA3_EWELL_16", "Eq. (16)",
                       "zeta(3) = -4pi^2/7 sum_{n>=0} zeta(2n)/((2n+1)(2n+2) 2^2n)",
                       shape_of(ZetaPart::even, quarter, {}, den({two_n_p1, two_n_p2})));
    zeta3_entry(d);
    d.start_index = 0;
    d.scale = [=](int) { return -4.0 * pi2 / 7.0; };
  }
  {
    auto& d = b.series("ZETA3_17", "Eq. (17)",
                       "zeta(3) = 4pi^2/35 (3/2 - log(pi/2) + sum zeta(2n)/(n(n+1)(2n+1)16^n))",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n, n1, two_n_p1})));
    zeta3_entry(d);
    d.offset = [=](int) { return 4.0 * pi2 / 35.0 * (1.5 - log(pi / 2.0)); };
    d.scale = [=](int) { return 4.0 * pi2 / 35.0; };
  }
  {
    auto& d = b.series("ZETA3_18", "Eq. (18)",
                       "zeta(3) = -64/(3pi) beta(4) + 8pi^2/9 (4/3 - log(pi/2) + 3 sum zeta(2n)/(n(2n+1)(2n+3)16^n))",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n, two_n_p1, two_n_p3})));
    zeta3_entry(d);
    d.offset = [=](int) {
      return -64.0 / (3.0 * pi) * constant_beta4() + 8.0 * pi2 / 9.0 * (4.0 / 3.0 - log(pi / 2.0));
    };
    d.scale = [=](int) { return 8.0 * pi2 / 9.0 * 3.0; };
  }
  {
    auto& d = b.series("ZETA3_19", "Eq. (19)",
                       "zeta(3) = -64/(3pi) beta(4) + 16pi^2/27 (1/2 + 3G/pi - 3 sum zeta(2n)/((2n+1)(2n+3)16^n))",
                       shape_of(ZetaPart::even, sixteenth, {}, den({two_n_p1, two_n_p3})));
    zeta3_entry(d);
    d.offset = [=](int) {
      return -64.0 / (3.0 * pi) * constant_beta4() + 16.0 * pi2 / 27.0 * (0.5 + 3.0 * constant_G() / pi);
    };
    d.scale = [=](int) { return -16.0 * pi2 / 27.0 * 3.0; };
  }
  {
    auto& d = b.series(
        "ZETA3_20", "Eq. (20)",
        "zeta(3) = 2pi^2/35 (9 + 138 log 2 - 18 log 3 - 50 log 5 - 2 log pi + 2 sum (zeta(2n)-1)/(n(2n+1)(n+1)16^n))",
        shape_of(ZetaPart::even_minus_one, sixteenth, {}, den({n, two_n_p1, n1})));
    zeta3_entry(d);
    d.offset = [=](int) {
      return 2.0 * pi2 / 35.0 *
             (9.0 + 138.0 * log(2.0) - 18.0 * log(3.0) - 50.0 * log(5.0) - 2.0 * log(pi));
    };
    d.scale = [=](int) { return 4.0 * pi2 / 35.0; };
  }

  // Rational zeta series with m = 2.
  {
    IdentityDescriptor d;
    d.id = "RZS_ONE";
    d.paper_eq = "Sec. 2.2 (m=2)";
    d.description = "sum_{n>=2} (zeta(n) - 1) = 1";
    d.start_index = 2;
    d.term = [](int, std::int64_t m) { return zeta_minus_one(static_cast<double>(m)); };
    // zeta(n) - 1 <= 2^(1-n) for n >= 3.
    d.tail_bound = [](int, std::int64_t big_n) { return std::ldexp(1.0, 1 - static_cast<int>(big_n)); };
    d.closed_form = [](int) { return 1.0; };
    b.add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "RZS_GAMMA";
    d.paper_eq = "Sec. 2.2 (m=2)";
    d.description = "sum_{n>=2} (zeta(n) - 1)/n = 1 - gamma";
    d.start_index = 2;
    d.term = [](int, std::int64_t m) { return zeta_minus_one(static_cast<double>(m)) / static_cast<double>(m); };
    d.tail_bound = [](int, std::int64_t big_n) {
      return std::ldexp(1.0, 1 - static_cast<int>(big_n)) / static_cast<double>(big_n + 1);
    };
    d.closed_form = [](int) { return 1.0 - euler_gamma().value; };
    b.add(std::move(d));
  }
  {
    auto& d = b.series("RZS_LOG2", "Sec. 2.2 (m=2)", "sum_{n>=1} (zeta(2n) - 1)/n = log 2",
                       shape_of(ZetaPart::even_minus_one, 1.0, {}, den({n})));
    d.closed_form = [](int) { return std::log(2.0); };
  }

  // Binomial families with ratio 1/4 and their specialisations.
  {
    ZetaSeries shape = shape_of(ZetaPart::even, quarter, {}, den({n}));
    shape.binomial = [](int m) { return BinomialFactor{{2, 0}, m}; };
    auto& d = b.series("THM_21", "Eq. (21)",
                       "sum zeta(2n)/(n 4^n) C(2n,m) = 1/m (m odd), (2 zeta(m)(1 - 2^-m) - 1)/m (m even)", shape);
    d.domain = ParamDomain::m_from_1;
    d.closed_form = [](int m) {
      if (m % 2 == 1) return 1.0 / m;
      const Rational c = zeta_even_exact(static_cast<unsigned>(m / 2)).coeff * 2 * (1 - pow2(-m)) / m;
      return pi_polynomial({{c, static_cast<unsigned>(m)}, {q(-1, m), 0}});
    };
  }
  {
    auto& d = b.series("SUM_22", "Eq. (22)", "sum zeta(2n)/(n(2n+1)4^n) = log pi - 1",
                       shape_of(ZetaPart::even, quarter, {}, den({n, two_n_p1})));
    d.closed_form = [=](int) { return log(pi) - 1.0; };
  }
  {
    auto& d = b.series("SUM_23", "Eq. (23)", "sum zeta(2n)/4^n = 1/2", shape_of(ZetaPart::even, quarter));
    d.closed_form = [](int) { return pi_polynomial({{q(1, 2), 0}}); };
  }
  {
    auto& d = b.series("SUM_24", "Eq. (24)", "sum zeta(2n)(2n-1)(2n-2)/4^n = 1",
                       shape_of(ZetaPart::even, quarter, {two_n_m1, two_n_m2}));
    d.closed_form = [](int) { return 1.0; };
  }
  {
    auto& d = b.series("SUM_25", "Eq. (25)", "sum zeta(2n)(2n-1)/4^n = pi^2/8 - 1/2",
                       shape_of(ZetaPart::even, quarter, {two_n_m1}));
    d.closed_form = [](int) { return pi_polynomial({{q(1, 8), 2}, {q(-1, 2), 0}}); };
  }
  {
    auto& d = b.series("SUM_26", "Eq. (26)", "sum zeta(2n) n/4^n = pi^2/16", shape_of(ZetaPart::even, quarter, {n}));
    d.closed_form = [](int) { return pi_polynomial({{q(1, 16), 2}}); };
  }
  {
    auto& d = b.series("SUM_27", "Eq. (27)", "sum zeta(2n) n^2/4^n = 3pi^2/32", shape_of(ZetaPart::even, quarter, {n, n}));
    d.closed_form = [](int) { return pi_polynomial({{q(3, 32), 2}}); };
  }
  {
    ZetaSeries shape = shape_of(ZetaPart::even, quarter, {}, den({n}));
    shape.binomial = [](int k) { return BinomialFactor{{2, 1}, 2 * k}; };
    auto& d = b.series("SUM_28", "Eq. (28)",
                       "sum zeta(2n)/(n 4^n) C(2n+1,2k) = zeta(2k)/k (1 - 4^-k) + 1/(2k(2k-1)); printed with -1/(2k(2k-1))",
                       shape);
    d.domain = ParamDomain::k_from_1;
    d.status = IdentityStatus::corrected;
    auto form = [](int k, int sign) {
      const Rational c = zeta_even_exact(static_cast<unsigned>(k)).coeff * (1 - pow2(-2 * k)) / k;
      return pi_polynomial({{c, static_cast<unsigned>(2 * k)}, {q(sign, 2LL * k * (2 * k - 1)), 0}});
    };
    d.closed_form = [=](int k) { return form(k, +1); };
    d.printed_form = [=](int k) { return form(k, -1); };
  }

  // Binomial families with ratio 1/16.
  {
    ZetaSeries shape = shape_of(ZetaPart::even, sixteenth, {}, den({n}));
    shape.binomial = [](int m) { return BinomialFactor{{2, 0}, m}; };
    auto& d = b.series(
        "THM_29", "Eq. (29)",
        "sum zeta(2n)/(n 16^n) C(2n,m) = (1 - zetaE(m-1)(1 - 2^(1-m)))/m (m odd), (zeta(m)(1 - 2^-m) - 1)/m (m even)",
        shape);
    d.domain = ParamDomain::m_from_1;
    d.closed_form = [](int m) {
      if (m % 2 == 1) {
        const PiPower w = zeta_E_weighted_exact(static_cast<unsigned>((m - 1) / 2));
        return pi_polynomial({{-w.coeff / m, w.power}, {q(1, m), 0}});
      }
      const Rational c = zeta_even_exact(static_cast<unsigned>(m / 2)).coeff * (1 - pow2(-m)) / m;
      return pi_polynomial({{c, static_cast<unsigned>(m)}, {q(-1, m), 0}});
    };
  }
  {
    auto& d = b.series("SUM_30", "Eq. (30)", "sum zeta(2n)/(n 16^n) = log(pi/(2 sqrt 2))",
                       shape_of(ZetaPart::even, sixteenth, {}, den({n})));
    d.closed_form = [=](int) { return log(pi / (2.0 * std::sqrt(2.0))); };
  }
  {
    auto& d = b.series("SUM_31", "Eq. (31)", "sum zeta(2n)/16^n = (4 - pi)/8", shape_of(ZetaPart::even, sixteenth));
    d.closed_form = [](int) { return pi_polynomial({{q(-1, 8), 1}, {q(1, 2), 0}}); };
  }
  {
    auto& d = b.series("SUM_32", "Eq. (32)", "sum zeta(2n)/(n 4^n) = log(pi/2)", shape_of(ZetaPart::even, quarter, {}, den({n})));
    d.closed_form = [=](int) { return log(pi / 2.0); };
  }
  {
    auto& d = b.series("SUM_33", "Eq. (33)", "sum zeta(2n)(2n-1)/16^n = pi^2/16 - 1/2",
                       shape_of(ZetaPart::even, sixteenth, {two_n_m1}));
    d.closed_form = [](int) { return pi_polynomial({{q(1, 16), 2}, {q(-1, 2), 0}}); };
  }
  {
    auto& d = b.series("SUM_34", "Eq. (34)", "sum zeta(2n)(2n-1)(2n-2)/16^n = 1 - pi^3/32; printed as 1 - pi^3/96",
                       shape_of(ZetaPart::even, sixteenth, {two_n_m1, two_n_m2}));
    d.status = IdentityStatus::corrected;
    d.closed_form = [](int) { return pi_polynomial({{q(-1, 32), 3}, {q(1), 0}}); };
    d.printed_form = [](int) { return pi_polynomial({{q(-1, 96), 3}, {q(1), 0}}); };
  }
  {
    auto& d = b.series("SUM_35", "Eq. (35)", "sum zeta(2n) n/16^n = pi/16 (pi/2 - 1)", shape_of(ZetaPart::even, sixteenth, {n}));
    d.closed_form = [](int) { return pi_polynomial({{q(1, 32), 2}, {q(-1, 16), 1}}); };
  }
  {
    auto& d = b.series("SUM_36", "Eq. (36)", "sum zeta(2n) n^2/16^n = pi/32 (3pi/2 - pi^2/4 - 1)",
                       shape_of(ZetaPart::even, sixteenth, {n, n}));
    d.closed_form = [](int) { return pi_polynomial({{q(-1, 128), 3}, {q(3, 64), 2}, {q(-1, 32), 1}}); };
  }
  {
    ZetaSeries shape = shape_of(ZetaPart::even, quarter, {}, den({n}));
    shape.binomial = [](int k) { return BinomialFactor{{2, 0}, 2 * k}; };
    shape.damped = true;
    auto& d = b.series("SUM_37", "Eq. (37)", "sum zeta(2n)/(n 4^n) (1 - 4^-n) C(2n,2k) = zeta(2k)/(2k) (1 - 4^-k)", shape);
    d.domain = ParamDomain::k_from_1;
    d.closed_form = [](int k) {
      const Rational c = zeta_even_exact(static_cast<unsigned>(k)).coeff * (1 - pow2(-2 * k)) / (2 * k);
      return pi_polynomial({{c, static_cast<unsigned>(2 * k)}});
    };
  }
  {
    ZetaSeries shape = shape_of(ZetaPart::even, quarter, {}, den({n}));
    shape.binomial = [](int k) { return BinomialFactor{{2, 0}, 2 * k + 1}; };
    shape.damped = true;
    auto& d = b.series("SUM_38", "Eq. (38)",
                       "sum zeta(2n)/(n 4^n) (1 - 4^-n) C(2n,2k+1) = zetaE(2k)/(2k+1) (1 - 4^-k)", shape);
    d.domain = ParamDomain::k_from_0;
    d.closed_form = [](int k) {
      const PiPower w = zeta_E_weighted_exact(static_cast<unsigned>(k));
      return pi_polynomial({{w.coeff / (2 * k + 1), w.power}});
    };
  }
  return std::move(b.entries);
}

}  // namespace detail

/// All registry entries in citation order. Built once; immutable afterwards.
inline auto registry() -> const std::vector<IdentityDescriptor>& {
  static const std::vector<IdentityDescriptor> entries = detail::build_registry();
  return entries;
}

inline auto find_identity(std::string_view id) -> const IdentityDescriptor& {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw key_error("unknown identity id: " + std::string(id));
}

/// Looks up the descriptor for `key` and validates its parameter.
inline auto resolve(const CatalogKey& key) -> const IdentityDescriptor& {
  const auto& d = find_identity(key.id);
  if (!d.is_family()) {
    if (key.param) throw key_error(key.id + " takes no parameter");
    return d;
  }
  if (!key.param) throw key_error(key.id + " requires a parameter (" + std::string(param_domain_name(d.domain)) + ")");
  if (*key.param < param_domain_min(d.domain))
    throw key_error(key.to_string() + ": parameter outside " + std::string(param_domain_name(d.domain)));
  return d;
}

inline auto param_of(const CatalogKey& key) -> int { return key.param.value_or(0); }

struct IdentitySummary {
  std::string id;
  std::string paper_eq;
  IdentityStatus status;
  ParamDomain domain;
  int start_index;
  std::string description;
};

inline auto list_identities() -> std::vector<IdentitySummary> {
  std::vector<IdentitySummary> out;
  for (const auto& d : registry())
    out.push_back({d.id, d.paper_eq, d.status, d.domain, d.start_index, d.description});
  return out;
}

/// Parameters 1..limit (0..limit for k >= 0 families); a single empty key for scalars.
inline auto family_keys(const IdentityDescriptor& d, int limit) -> std::vector<CatalogKey> {
  if (!d.is_family()) return {CatalogKey{d.id, std::nullopt}};
  std::vector<CatalogKey> keys;
  for (int p = param_domain_min(d.domain); p <= limit; ++p) keys.push_back({d.id, p});
  return keys;
}

inline auto check_index(const IdentityDescriptor& d, std::int64_t n, const char* what) -> void {
  if (n < d.start_index)
    throw key_error(std::string(what) + ": index " + std::to_string(n) + " below start index " +
                    std::to_string(d.start_index) + " of " + d.id);
}

inline auto term(const CatalogKey& key, std::int64_t n) -> double {
  const auto& d = resolve(key);
  check_index(d, n, "term");
  return d.term(param_of(key), n);
}

inline auto closed_form(const CatalogKey& key) -> double {
  const auto& d = resolve(key);
  return d.closed_form(param_of(key));
}

/// The right-hand side as printed, for entries whose print was corrected.
inline auto printed_form(const CatalogKey& key) -> double {
  const auto& d = resolve(key);
  if (!d.printed_form) throw key_error(key.id + " has no separate printed variant");
  return d.printed_form(param_of(key));
}

inline auto tail_bound(const CatalogKey& key, std::int64_t big_n) -> double {
  const auto& d = resolve(key);
  check_index(d, big_n, "tail_bound");
  return d.tail_bound(param_of(key), big_n);
}

/// Compensated sum of terms start_index..N, with error_bound = tail_bound(N).
inline auto partial_sum(const CatalogKey& key, std::int64_t big_n) -> EvalResult {
  const auto& d = resolve(key);
  check_index(d, big_n, "partial_sum");
  const int p = param_of(key);
  CompensatedSum<double> sum;
  for (std::int64_t n = d.start_index; n <= big_n; ++n) sum += d.term(p, n);
  return {sum.value(), static_cast<std::uint64_t>(big_n - d.start_index + 1), d.tail_bound(p, big_n)};
}

/// offset + scale * series for a given series value.
inline auto assemble(const CatalogKey& key, double series_value) -> double {
  const auto& d = resolve(key);
  const int p = param_of(key);
  return d.offset_at(p) + d.scale_at(p) * series_value;
}

/// Tail bound carried through the assembly, |scale| * tail_bound(N).
inline auto assembled_tail_bound(const CatalogKey& key, std::int64_t big_n) -> double {
  const auto& d = resolve(key);
  const int p = param_of(key);
  return std::abs(d.scale_at(p)) * tail_bound(key, big_n);
}

/// Least N >= start_index with assembled_tail_bound(N) <= target; throws
/// inconclusive_error if that needs more than `cap` terms.
inline auto terms_for_bound(const CatalogKey& key, double target, std::int64_t cap) -> std::int64_t {
  const auto& d = resolve(key);
  const std::int64_t lo_start = d.start_index;
  auto ok = [&](std::int64_t big_n) { return assembled_tail_bound(key, big_n) <= target; };
  if (ok(lo_start)) return lo_start;
  std::int64_t lo = lo_start;  // fails
  std::int64_t hi = lo_start + 1;
  while (!ok(hi)) {
    lo = hi;
    if (hi - lo_start + 1 > cap)
      throw inconclusive_error(key.to_string() + ": tail bound not met within " + std::to_string(cap) + " terms");
    hi = lo_start + 2 * (hi - lo_start);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  if (hi - lo_start + 1 > cap)
    throw inconclusive_error(key.to_string() + ": tail bound not met within " + std::to_string(cap) + " terms");
  return hi;
}

}  // namespace zetakit
