#pragma once

// Exact integer and rational arithmetic: binomials, Bernoulli and Euler
// numbers, and closed forms of the shape (rational) * pi^k.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zetakit/errors.hpp"

namespace zetakit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline auto numerator_of(const Rational& r) -> BigInt { return boost::multiprecision::numerator(r); }
inline auto denominator_of(const Rational& r) -> BigInt { return boost::multiprecision::denominator(r); }

inline auto to_long_double(const Rational& r) -> long double { return r.convert_to<long double>(); }
inline auto to_double(const Rational& r) -> double { return r.convert_to<double>(); }

/// C(n, k); zero when k > n.
inline auto binomial(std::uint64_t n, std::uint64_t k) -> BigInt {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

inline auto factorial(std::uint64_t n) -> BigInt {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline auto pow2(std::int64_t e) -> Rational {
  if (e >= 0) return Rational(BigInt(1) << static_cast<unsigned>(e));
  return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(-e));
}

namespace detail {

// Bernoulli numbers from sum_{k=0}^{n} C(n+1,k) B_k = 0, with B_1 = -1/2 as
// fixed by the generating function z/(e^z - 1). Odd entries past B_1 vanish
// and are skipped. The sum is accumulated over the lcm of the denominators
// seen so far so each B_n costs a single normalisation.
class BernoulliTable {
 public:
  auto get(std::size_t n) -> Rational {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

 private:
  void extend(std::size_t n) {
    if (values_.empty()) {
      values_.emplace_back(1);
      values_.emplace_back(-1, 2);
      lcm_ = 2;
    }
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      if (m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      BigInt total = 0;
      BigInt c = 1;  // C(m+1, k)
      for (std::size_t k = 0; k < m; ++k) {
        if (k < 2 || k % 2 == 0) {
          const Rational& b = values_[k];
          total += c * numerator_of(b) * (lcm_ / denominator_of(b));
        }
        c = c * (m + 1 - k) / (k + 1);
      }
      Rational b_m(-total, lcm_ * (m + 1));
      lcm_ = boost::multiprecision::lcm(lcm_, denominator_of(b_m));
      values_.push_back(std::move(b_m));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
  BigInt lcm_ = 1;
};

// Euler numbers from sum_{k=0}^{n/2} C(n,2k) E_{2k} = 0 for even n >= 2.
class EulerTable {
 public:
  auto get(std::size_t n) -> BigInt {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      if (m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      BigInt total = 0;
      for (std::size_t k = 0; 2 * k < m; ++k) total += binomial(m, 2 * k) * values_[2 * k];
      values_.push_back(-total);
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<BigInt> values_;
};

inline auto bernoulli_table() -> BernoulliTable& {
  static BernoulliTable table;
  return table;
}

inline auto euler_table() -> EulerTable& {
  static EulerTable table;
  return table;
}

}  // namespace detail

/// Exact B_n (B_1 = -1/2). Memoized; safe for concurrent callers.
inline auto bernoulli(std::size_t n) -> Rational { return detail::bernoulli_table().get(n); }

/// Exact E_n, the coefficients of sech t = sum E_n t^n / n!. Memoized.
inline auto euler_number(std::size_t n) -> BigInt { return detail::euler_table().get(n); }

/// coeff * pi^power, held exactly.
struct PiPower {
  Rational coeff;
  unsigned power = 0;

  [[nodiscard]] auto numeric() const -> double {
    const long double pi = std::numbers::pi_v<long double>;
    long double p = 1.0L;
    for (unsigned i = 0; i < power; ++i) p *= pi;
    return static_cast<double>(to_long_double(coeff) * p);
  }

  [[nodiscard]] auto to_string() const -> std::string {
    std::ostringstream os;
    os << "(" << coeff << ")";
    if (power == 1) os << "*pi";
    else if (power > 1) os << "*pi^" << power;
    return os.str();
  }

  friend auto operator==(const PiPower&, const PiPower&) -> bool = default;
};

/// zeta(2n) = (-1)^{n+1} B_{2n} 2^{2n-1} pi^{2n} / (2n)!.
inline auto zeta_even_exact(unsigned n) -> PiPower {
  if (n == 0) throw domain_error("zeta_even_exact: n must be >= 1");
  Rational c = bernoulli(2 * n) * pow2(2 * static_cast<std::int64_t>(n) - 1) / Rational(factorial(2 * n));
  if (n % 2 == 0) c = -c;
  return {std::move(c), 2 * n};
}

/// beta(2n+1) = (-1)^n E_{2n} pi^{2n+1} / (4^{n+1} (2n)!).
inline auto beta_odd_exact(unsigned n) -> PiPower {
  const BigInt den = factorial(2 * n) * (BigInt(1) << (2 * (n + 1)));
  Rational c(euler_number(2 * n), den);
  if (n % 2 == 1) c = -c;
  return {std::move(c), 2 * n + 1};
}

/// zeta_E(2k) = (-1)^{k+1} E_{2k} pi^{2k+1} / (4 (1 - 4^k) (2k)!).
inline auto zeta_E_exact(unsigned k) -> PiPower {
  if (k == 0) throw domain_error("zeta_E_exact: k = 0 is singular (1 - 4^0 = 0)");
  const BigInt four_k = BigInt(1) << (2 * k);
  const BigInt den = 4 * (four_k - 1) * factorial(2 * k);  // sign of (1 - 4^k) folded below
  Rational c(euler_number(2 * k), den);
  if (k % 2 == 1) c = -c;
  return {std::move(c), 2 * k + 1};
}

enum class TrigFunction { tan, cot, sec, csc };

inline auto trig_function_name(TrigFunction f) -> std::string_view {
  switch (f) {
    case TrigFunction::tan: return "tan";
    case TrigFunction::cot: return "cot";
    case TrigFunction::sec: return "sec";
    case TrigFunction::csc: return "csc";
  }
  return "?";
}

/// Coefficient of x^exponent in a Laurent expansion around 0.
struct LaurentCoeff {
  Rational value;
  int exponent = 0;
};

/// Exact coefficient of x^k in the expansion of tan, cot, sec or csc.
/// cot and csc carry their x^-1 leading term explicitly.
inline auto taylor_coeff(TrigFunction f, int k) -> LaurentCoeff {
  if (k < -1) throw domain_error("taylor_coeff: exponent must be >= -1");
  const bool odd_k = (k % 2) != 0;
  switch (f) {
    case TrigFunction::tan: {
      if (k == -1) throw domain_error("taylor_coeff: tan has no x^-1 term");
      if (!odd_k) return {0, k};
      const unsigned n = static_cast<unsigned>(k + 1) / 2;
      const BigInt four_n = BigInt(1) << (2 * n);
      Rational c = Rational(four_n * (four_n - 1)) * bernoulli(2 * n) / Rational(factorial(2 * n));
      if (n % 2 == 0) c = -c;
      return {std::move(c), k};
    }
    case TrigFunction::cot: {
      if (!odd_k) return {0, k};
      const unsigned n = static_cast<unsigned>(k + 1) / 2;
      Rational c = Rational(BigInt(1) << (2 * n)) * bernoulli(2 * n) / Rational(factorial(2 * n));
      if (n % 2 == 1) c = -c;
      return {std::move(c), k};
    }
    case TrigFunction::sec: {
      if (k == -1) throw domain_error("taylor_coeff: sec has no x^-1 term");
      if (odd_k) return {0, k};
      const unsigned n = static_cast<unsigned>(k) / 2;
      Rational c(euler_number(2 * n), factorial(2 * n));
      if (n % 2 == 1) c = -c;
      return {std::move(c), k};
    }
    case TrigFunction::csc: {
      if (!odd_k) return {0, k};
      const unsigned n = static_cast<unsigned>(k + 1) / 2;
      Rational c = 2 * (pow2(2 * static_cast<std::int64_t>(n) - 1) - 1) * bernoulli(2 * n) /
                   Rational(factorial(2 * n));
      if (n % 2 == 0) c = -c;
      return {std::move(c), k};
    }
  }
  throw domain_error("taylor_coeff: unknown function");
}

}  // namespace zetakit
