#pragma once

// Hermite polynomials and their roots, factorials, and the two Gauss-argument
// hypergeometric functions that appear in the Hermite logarithmic potential.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "seec/constants.hpp"
#include "seec/errors.hpp"
#include "seec/summation.hpp"
#include "seec/types.hpp"

namespace seec {

inline constexpr int kMaxEvalOrder = 64;
inline constexpr int kMaxRootOrder = 32;

/// Degree of a Hermite polynomial, checked against a configurable ceiling.
class HermiteOrder {
 public:
  explicit HermiteOrder(int n, int n_max = kMaxEvalOrder) : n_(n) {
    if (n < 0 || n > n_max) {
      throw UnsupportedOrder("Hermite order " + std::to_string(n) + " outside [0, " +
                             std::to_string(n_max) + "]");
    }
  }

  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence.
template <typename Scalar>
Scalar hermite_eval(HermiteOrder n, Scalar z) {
  if (!std::isfinite(z)) throw DomainError("hermite_eval: non-finite argument");
  const int order = n.value();
  if (order == 0) return Scalar(1);
  Scalar prev(1);
  Scalar curr = Scalar(2) * z;
  for (int k = 1; k < order; ++k) {
    const Scalar next = Scalar(2) * z * curr - Scalar(2 * k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Orthonormal Hermite polynomials p_n = H_n / sqrt(2^n n! sqrt(pi)) with
/// respect to the weight e^{-z^2}. Returns {p_n(z), p_{n-1}(z)}; p_{-1} = 0.
template <typename Scalar>
std::pair<Scalar, Scalar> hermite_orthonormal(int n, Scalar z) {
  using std::sqrt;
  Scalar prev(0);
  Scalar curr = Scalar(1) / sqrt(MathConstants<Scalar>::sqrt_pi);
  for (int k = 0; k < n; ++k) {
    const Scalar next = z * sqrt(Scalar(2) / Scalar(k + 1)) * curr -
                        sqrt(Scalar(k) / Scalar(k + 1)) * prev;
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

/// Normalized Hermite function p_n(z) e^{-z^2/2} (unit L2 norm on the line).
template <typename Scalar>
Scalar hermite_function(int n, Scalar z) {
  using std::abs;
  using std::exp;
  // far past the turning point the Gaussian underflows before p_n overflows
  if (abs(z) > Scalar(60)) return Scalar(0);
  return hermite_orthonormal(n, z).first * exp(-z * z / Scalar(2));
}

/// ln(n!). Integer product up to 20!, log-gamma above.
template <typename Scalar = double>
Scalar ln_factorial(int n) {
  if (n < 0) throw DomainError("ln_factorial: negative argument");
  if (n <= 20) {
    std::uint64_t product = 1;
    for (int k = 2; k <= n; ++k) product *= static_cast<std::uint64_t>(k);
    return static_cast<Scalar>(std::log(static_cast<long double>(product)));
  }
  return static_cast<Scalar>(std::lgamma(static_cast<long double>(n) + 1.0L));
}

/// ln(2^n n! sqrt(pi)), the log of the squared norm of H_n.
template <typename Scalar = double>
Scalar ln_hermite_norm2(int n) {
  return Scalar(n) * MathConstants<Scalar>::ln2 + ln_factorial<Scalar>(n) +
         MathConstants<Scalar>::ln_sqrt_pi;
}

namespace detail {

template <typename Scalar>
void symmetrize(VectorX<Scalar>& x) {
  const Eigen::Index n = x.size();
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    const Scalar r = (x(n - 1 - k) - x(k)) / Scalar(2);
    x(k) = -r;
    x(n - 1 - k) = r;
  }
  if (n % 2 == 1) x(n / 2) = Scalar(0);
}

/// Zeros of H_n: eigenvalues of the symmetric Jacobi matrix of the monic
/// recurrence, then two Newton steps on the orthonormal polynomial.
template <typename Scalar>
VectorX<Scalar> hermite_nodes(int n) {
  using std::sqrt;
  if (n == 0) return VectorX<Scalar>();
  if (n == 1) return VectorX<Scalar>::Zero(1);

  VectorX<Scalar> diag = VectorX<Scalar>::Zero(n);
  VectorX<Scalar> sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = sqrt(Scalar(k) / Scalar(2));

  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  VectorX<Scalar> x = solver.eigenvalues();

  const Scalar scale = sqrt(Scalar(2 * n));
  for (int step = 0; step < 2; ++step) {
    for (int i = 0; i < n; ++i) {
      const auto [pn, pn1] = hermite_orthonormal(n, x(i));
      x(i) -= pn / (scale * pn1);
    }
  }
  symmetrize(x);
  return x;
}

}  // namespace detail

template <typename Scalar>
struct RootSet {
  HermiteOrder order;
  VectorX<Scalar> roots;  // strictly increasing

  Eigen::Index size() const noexcept { return roots.size(); }
};

/// All real zeros of H_n in ascending order. Order 0 has none.
template <typename Scalar = double>
RootSet<Scalar> hermite_roots(HermiteOrder n) {
  if (n.value() > kMaxRootOrder) {
    throw UnsupportedOrder("hermite_roots: order " + std::to_string(n.value()) +
                           " exceeds " + std::to_string(kMaxRootOrder));
  }
  return RootSet<Scalar>{n, detail::hermite_nodes<Scalar>(n.value())};
}

/// Series value with an error estimate. `degraded` marks arguments outside
/// the range where the stated accuracy is guaranteed.
template <typename Scalar>
struct SeriesValue {
  Scalar value;
  Scalar abs_error;
  bool degraded;
  int terms;
};

inline constexpr double kHyp1f1ValidRange = 8.0;
inline constexpr double kHyp2f2ValidRange = 3.0;

/// 1F1(1; 1/2; -x^2), summed as e^{-x^2} 1F1(-1/2; 1/2; x^2) whose terms past
/// the first are all negative: 1 - sum_{k>=1} x^{2k} / (k! (2k-1)).
template <typename Scalar>
SeriesValue<Scalar> hyp1f1_gauss(Scalar x) {
  using std::abs;
  using std::exp;
  if (!std::isfinite(x)) throw DomainError("hyp1f1_gauss: non-finite argument");

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar y = x * x;
  const bool degraded = abs(x) > Scalar(kHyp1f1ValidRange);
  // e^{y} overflows the partial sums long before the series converges
  if (y > Scalar(700)) {
    return {std::numeric_limits<Scalar>::quiet_NaN(), std::numeric_limits<Scalar>::infinity(),
            true, 0};
  }

  NeumaierSum<Scalar> tail;
  Scalar power(1);
  int k = 1;
  for (; k < 4000; ++k) {
    power *= y / Scalar(k);
    const Scalar term = power / Scalar(2 * k - 1);
    tail.add(term);
    if (term <= eps * tail.sum()) break;
  }
  const Scalar s = tail.sum();
  const Scalar damp = exp(-y);
  return {damp * (Scalar(1) - s), eps * Scalar(k + 1) * damp * (Scalar(1) + s), degraded, k};
}

/// 2F2(1, 1; 3/2, 2; -x^2) = sum_k (-x^2)^k / ((3/2)_k (k+1)). The series
/// alternates and has no cancellation-free transform; terms are accumulated
/// in extended precision and the estimated rounding error is returned.
template <typename Scalar>
SeriesValue<Scalar> hyp2f2_gauss(Scalar x) {
  using std::abs;
  using Acc = wider_t<Scalar>;
  if (!std::isfinite(x)) throw DomainError("hyp2f2_gauss: non-finite argument");

  const Acc eps = std::numeric_limits<Acc>::epsilon();
  const Acc z = -static_cast<Acc>(x) * static_cast<Acc>(x);
  NeumaierSum<Acc> sum;
  sum.add(Acc(1));
  Acc magnitude(1);
  Acc ratio(1);  // z^k / (3/2)_k
  int k = 1;
  for (; k < 20000; ++k) {
    ratio *= z / (Acc(k) + Acc(0.5));
    const Acc term = ratio / Acc(k + 1);
    sum.add(term);
    magnitude += abs(term);
    if (abs(term) <= eps * abs(sum.sum()) && Acc(k) > abs(z)) break;
  }
  const Scalar value = static_cast<Scalar>(sum.sum());
  const Scalar err = static_cast<Scalar>(eps * Acc(k + 1) * magnitude) +
                     std::numeric_limits<Scalar>::epsilon() * abs(value);
  return {value, err, abs(x) > Scalar(kHyp2f2ValidRange) || !std::isfinite(value), k};
}

/// A value produced by a formula that has not been validated independently.
template <typename Scalar>
struct ExperimentalValue {
  Scalar value;
  bool experimental;
};

/// Closed-form logarithmic potential V_n(x) in the printed hypergeometric
/// form. The binomial sum of that form is index-ambiguous; it matches the
/// direct integral -int e^{-z^2} H_n^2(z) ln|z - x| dz at n = 1 only, so the
/// result is always tagged experimental.
template <typename Scalar>
ExperimentalValue<Scalar> log_potential(HermiteOrder n, Scalar x) {
  using Acc = wider_t<Scalar>;
  using C = MathConstants<Acc>;
  const int order = n.value();
  if (order == 0) throw DomainError("log_potential: H_0 has no roots");
  if (!std::isfinite(x)) throw DomainError("log_potential: non-finite argument");

  Acc binomial(1);
  Acc two_pow(1);
  Acc sum(0);
  for (int k = 1; k <= order; ++k) {
    binomial = binomial * Acc(order - k + 1) / Acc(k);
    two_pow *= Acc(2);
    const Acc sign = (k % 2 == 1) ? Acc(-1) : Acc(1);
    sum += binomial * sign * two_pow / Acc(k);
  }
  const Acc xa = static_cast<Acc>(x);
  const Acc f11 = static_cast<Acc>(hyp1f1_gauss(x).value);
  const Acc f22 = static_cast<Acc>(hyp2f2_gauss(x).value);
  const Acc bracket = C::ln2 + C::euler_gamma / Acc(2) - xa * xa * f22 + sum * f11 / Acc(2);
  const Acc prefactor = std::exp(ln_hermite_norm2<Acc>(order));
  return {static_cast<Scalar>(prefactor * bracket), true};
}

}  // namespace seec
