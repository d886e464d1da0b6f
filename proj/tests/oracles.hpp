#pragma once

// Independent reference computations. Nothing here calls into the library's
// numeric code; only the integer/rational types are shared.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "zetakit/exact.hpp"

namespace oracle {

using zetakit::BigInt;
using zetakit::Rational;

/// Akiyama-Tanigawa triangle. Produces B_1 = +1/2; callers flip it.
inline auto bernoulli_akiyama_tanigawa(std::size_t n_max) -> std::vector<Rational> {
  std::vector<Rational> out;
  std::vector<Rational> a(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    a[m] = Rational(BigInt(1), BigInt(m + 1));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(BigInt(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  out[1] = -out[1];
  return out;
}

/// Seidel boustrophedon for the zigzag numbers; E_2n = (-1)^n A_2n.
inline auto euler_seidel(std::size_t n_max) -> std::vector<BigInt> {
  std::vector<BigInt> zigzag{1};
  std::vector<BigInt> row{1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next(n + 1);
    next[0] = 0;
    for (std::size_t k = 0; k < n; ++k) next[k + 1] = next[k] + row[n - 1 - k];
    zigzag.push_back(next[n]);
    row = std::move(next);
  }
  std::vector<BigInt> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n % 2 == 1) out.emplace_back(0);
    else out.push_back((n / 2) % 2 == 0 ? zigzag[n] : BigInt(-zigzag[n]));
  }
  return out;
}

/// sum_{m <= n} m^-s plus the integral tail and two endpoint corrections, in
/// long double. Remainder is O(n^(-s-3)).
inline auto zeta_direct(long double s, std::int64_t n = 20000) -> long double {
  long double sum = 0.0L;
  for (std::int64_t m = n; m >= 1; --m) sum += std::pow(static_cast<long double>(m), -s);
  const long double nn = static_cast<long double>(n);
  return sum + std::pow(nn, 1.0L - s) / (s - 1.0L) - 0.5L * std::pow(nn, -s) + s / 12.0L * std::pow(nn, -s - 1.0L);
}

/// zeta(s) - 1 summed from m = 2, so small values keep full relative precision.
inline auto zeta_minus_one_direct(long double s, std::int64_t n = 2000) -> long double {
  long double sum = 0.0L;
  for (std::int64_t m = n; m >= 2; --m) sum += std::pow(static_cast<long double>(m), -s);
  const long double nn = static_cast<long double>(n);
  return sum + std::pow(nn, 1.0L - s) / (s - 1.0L) - 0.5L * std::pow(nn, -s) + s / 12.0L * std::pow(nn, -s - 1.0L);
}

/// Catalan's constant from pi/8 log(2 + sqrt 3) + 3/8 sum 1/((2n+1)^2 C(2n,n)).
inline auto catalan_ramanujan() -> long double {
  long double sum = 0.0L, central = 1.0L;
  for (int n = 0; n < 60; ++n) {
    if (n > 0) central *= static_cast<long double>(2 * n) * (2 * n - 1) / (static_cast<long double>(n) * n);
    sum += 1.0L / ((2.0L * n + 1.0L) * (2.0L * n + 1.0L) * central);
  }
  return std::numbers::pi_v<long double> / 8.0L * std::log(2.0L + std::sqrt(3.0L)) + 3.0L / 8.0L * sum;
}

/// sum_{k <= n} sin(k t)/k^2, the defining Fourier series.
inline auto clausen_fourier(double theta, std::int64_t n) -> double {
  long double sum = 0.0L;
  for (std::int64_t k = n; k >= 1; --k) {
    const long double kd = static_cast<long double>(k);
    sum += std::sin(kd * theta) / (kd * kd);
  }
  return static_cast<double>(sum);
}

// Published digits (mpmath, 30 significant digits).
inline constexpr double kZeta3 = 1.2020569031595942853997381;
inline constexpr double kCatalan = 0.9159655941772190150546035;
inline constexpr double kBeta4 = 0.9889445517411053361084226;
inline constexpr double kEulerGamma = std::numbers::egamma;

struct ClausenPoint {
  double theta;
  double value;
};

/// Cl2 reference values (mpmath clsin).
inline const std::vector<ClausenPoint> kClausenTable{
    {0.05, 0.19978834981051266481}, {0.3, 0.66156701022020101655},  {1.0, 1.0139591323607685043},
    {2.0, 0.72714605086327924743},  {2.5, 0.43359820323553277936},  {3.0, 0.098026209391301421161},
    {4.0, -0.5681439444298697808},  {5.5, -0.98127747477447367875}, {6.2, -0.29004891983264809042},
};

}  // namespace oracle
