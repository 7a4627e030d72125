#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>

namespace seec {

/// Compensated (Kahan-Babuska-Neumaier) accumulator.
template <typename Scalar>
class NeumaierSum {
 public:
  void add(Scalar term) noexcept {
    const Scalar t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  Scalar sum() const noexcept { return sum_ + compensation_; }

 private:
  Scalar sum_{0};
  Scalar compensation_{0};
};

/// Canonical pairwise reduction. The tree shape depends only on the length,
/// so the result is reproducible for identical inputs.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> values) {
  const std::size_t n = values.size();
  if (n == 0) return Scalar(0);
  if (n == 1) return values[0];
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

/// Wider accumulator type for series with cancellation: long double for
/// float/double, the scalar itself otherwise.
template <typename Scalar>
using wider_t = std::conditional_t<(sizeof(Scalar) < sizeof(long double)), long double, Scalar>;

}  // namespace seec
