#pragma once

#include <cmath>

namespace zetakit {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an addend is larger in magnitude than the running sum, which happens
/// at the head of every alternating series here.
template <typename Value>
struct CompensatedSum {
  Value sum = Value{0};
  Value compensation = Value{0};

  auto operator+=(Value value) -> CompensatedSum& {
    const Value t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
    return *this;
  }

  [[nodiscard]] auto value() const -> Value { return sum + compensation; }
};

}  // namespace zetakit
