#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "zetakit/errors.hpp"
#include "zetakit/summation.hpp"

namespace zetakit {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

struct TanhSinhOptions {
  double tolerance = 1e-13;  ///< relative level-to-level target
  int max_level = 10;
  double t_max = 4.0;  ///< abscissa cutoff; weights there are ~1e-36
};

/// Double-exponential (tanh-sinh) quadrature on [lower, upper].
///
/// Nodes cluster doubly-exponentially at both ends, so integrable endpoint
/// singularities (logarithmic here) need no special handling. Nodes are
/// placed as distances from the nearer endpoint, and a node that rounds onto
/// an endpoint is dropped. Each level halves the step and reuses all previous
/// nodes; the error estimate is the change between the last two levels.
template <typename F>
auto tanh_sinh(F&& f, double lower, double upper, const TanhSinhOptions& options = {}) -> QuadratureResult {
  if (!(lower < upper)) throw domain_error("tanh_sinh: requires lower < upper");
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double width = upper - lower;
  const double half_width = width / 2.0;
  std::uint64_t evaluations = 0;

  // Contribution of the node pair at +t and -t (or the centre when t == 0).
  auto pair_sum = [&](double t) {
    const double u = half_pi * std::sinh(t);
    const double cosh_u = std::cosh(u);
    const double weight = half_width * half_pi * std::cosh(t) / (cosh_u * cosh_u);
    if (t == 0.0) {
      ++evaluations;
      return weight * f(lower + half_width);
    }
    const double d = width / (1.0 + std::exp(2.0 * u));
    double s = 0.0;
    const double left = lower + d;
    const double right = upper - d;
    if (left > lower && left < upper) {
      ++evaluations;
      s += f(left);
    }
    if (right > lower && right < upper) {
      ++evaluations;
      s += f(right);
    }
    return weight * s;
  };

  double h = 1.0;
  CompensatedSum<double> raw;
  for (double t = 0.0; t <= options.t_max; t += h) raw += pair_sum(t);
  double estimate = h * raw.value();
  double change = std::abs(estimate);

  for (int level = 1; level <= options.max_level; ++level) {
    h /= 2.0;
    for (double t = h; t <= options.t_max; t += 2.0 * h) raw += pair_sum(t);
    const double next = h * raw.value();
    change = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && change <= options.tolerance * std::max(1.0, std::abs(estimate))) break;
  }
  if (!std::isfinite(estimate)) throw domain_error("tanh_sinh: integrand produced a non-finite value");
  return {estimate, change, evaluations};
}

}  // namespace zetakit
