#pragma once

// Gauss-Hermite rules and graded Gauss-Legendre panels. The panel engine is
// the numerical oracle for every closed-form integral in the library.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "seec/errors.hpp"
#include "seec/specfun.hpp"
#include "seec/summation.hpp"
#include "seec/types.hpp"

namespace seec {

inline constexpr int kMaxHermiteRuleOrder = 64;
inline constexpr int kMaxLegendreOrder = 256;
inline constexpr int kDefaultPanelOrder = 48;

/// Width of the extra panel placed outside the outermost Hermite root.
inline constexpr double kTailSplit = 3.0;

enum class RuleKind { gauss_hermite, legendre_panels };

/// Endpoint clustering inside a panel. Graded panels substitute a polynomial
/// map with vanishing derivative at the graded end(s), which turns the
/// (z - r)^2 ln|z - r| behaviour of the entropy integrand at a root into a
/// smooth integrand for Gauss-Legendre.
enum class PanelGrading { none, both, lower, upper };

template <typename Scalar>
struct QuadratureRule {
  RuleKind kind;
  int order;
  VectorX<Scalar> nodes;  // Gauss-Hermite nodes, or Legendre nodes on [-1, 1]
  VectorX<Scalar> weights;
  std::vector<Scalar> panels;          // boundaries, legendre_panels only
  std::vector<PanelGrading> grading;   // one per panel

  std::size_t panel_count() const noexcept {
    return panels.empty() ? 0 : panels.size() - 1;
  }
};

namespace detail {

/// {P_n(x), P_{n-1}(x)} by the Legendre recurrence.
template <typename Scalar>
std::pair<Scalar, Scalar> legendre_eval(int n, Scalar x) {
  Scalar prev(0);
  Scalar curr(1);
  for (int k = 0; k < n; ++k) {
    const Scalar next = (Scalar(2 * k + 1) * x * curr - Scalar(k) * prev) / Scalar(k + 1);
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

template <typename Scalar>
Scalar legendre_derivative(int n, Scalar x, Scalar pn, Scalar pn1) {
  return Scalar(n) * (x * pn - pn1) / (x * x - Scalar(1));
}

template <typename Scalar>
VectorX<Scalar> legendre_nodes(int n) {
  using std::sqrt;
  if (n == 1) return VectorX<Scalar>::Zero(1);
  VectorX<Scalar> diag = VectorX<Scalar>::Zero(n);
  VectorX<Scalar> sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = Scalar(k) / sqrt(Scalar(4 * k * k - 1));

  Eigen::SelfAdjointEigenSolver<MatrixX<Scalar>> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  VectorX<Scalar> x = solver.eigenvalues();
  for (int step = 0; step < 2; ++step) {
    for (int i = 0; i < n; ++i) {
      const auto [pn, pn1] = legendre_eval(n, x(i));
      x(i) -= pn / legendre_derivative(n, x(i), pn, pn1);
    }
  }
  symmetrize(x);
  return x;
}

/// Maps s in [0, 1] onto [0, 1] for a grading; returns {phi(s), phi'(s)}.
template <typename Scalar>
std::pair<Scalar, Scalar> grading_map(PanelGrading grading, Scalar s) {
  switch (grading) {
    case PanelGrading::both:
      return {s * s * (Scalar(3) - Scalar(2) * s), Scalar(6) * s * (Scalar(1) - s)};
    case PanelGrading::lower:
      return {s * s, Scalar(2) * s};
    case PanelGrading::upper: {
      const Scalar r = Scalar(1) - s;
      return {Scalar(1) - r * r, Scalar(2) * r};
    }
    case PanelGrading::none:
      break;
  }
  return {s, Scalar(1)};
}

}  // namespace detail

/// Gauss-Hermite rule for weight e^{-z^2}: exact for z^p e^{-z^2}, p <= 2 order - 1.
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_hermite_rule(int order) {
  if (order < 1 || order > kMaxHermiteRuleOrder) {
    throw UnsupportedOrder("gauss_hermite_rule: order " + std::to_string(order) +
                           " outside [1, " + std::to_string(kMaxHermiteRuleOrder) + "]");
  }
  QuadratureRule<Scalar> rule{RuleKind::gauss_hermite, order, detail::hermite_nodes<Scalar>(order),
                              VectorX<Scalar>(order), {}, {}};
  // Christoffel weights 1 / (n p_{n-1}(x)^2) with orthonormal p
  for (int i = 0; i < order; ++i) {
    const Scalar pn1 = hermite_orthonormal(order, rule.nodes(i)).second;
    rule.weights(i) = Scalar(1) / (Scalar(order) * pn1 * pn1);
  }
  for (int i = 0; i < order / 2; ++i) {
    const Scalar w = (rule.weights(i) + rule.weights(order - 1 - i)) / Scalar(2);
    rule.weights(i) = w;
    rule.weights(order - 1 - i) = w;
  }
  return rule;
}

/// Single-panel Gauss-Legendre rule on [-1, 1].
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre_rule(int order) {
  if (order < 1 || order > kMaxLegendreOrder) {
    throw UnsupportedOrder("gauss_legendre_rule: order " + std::to_string(order) +
                           " outside [1, " + std::to_string(kMaxLegendreOrder) + "]");
  }
  QuadratureRule<Scalar> rule{RuleKind::legendre_panels, order,
                              detail::legendre_nodes<Scalar>(order), VectorX<Scalar>(order),
                              {Scalar(-1), Scalar(1)}, {PanelGrading::none}};
  for (int i = 0; i < order; ++i) {
    const Scalar x = rule.nodes(i);
    const auto [pn, pn1] = detail::legendre_eval(order, x);
    const Scalar dp = detail::legendre_derivative(order, x, pn, pn1);
    rule.weights(i) = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
  }
  return rule;
}

/// Same Legendre nodes, new panel layout.
template <typename Scalar>
QuadratureRule<Scalar> with_panels(const QuadratureRule<Scalar>& legendre,
                                   std::vector<Scalar> boundaries,
                                   std::vector<PanelGrading> grading = {}) {
  if (legendre.kind != RuleKind::legendre_panels) {
    throw std::invalid_argument("with_panels: rule is not a Legendre rule");
  }
  if (boundaries.size() < 2) throw std::invalid_argument("with_panels: need at least one panel");
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (!(boundaries[i] > boundaries[i - 1])) {
      throw std::invalid_argument("with_panels: boundaries must be strictly increasing");
    }
  }
  if (grading.empty()) grading.assign(boundaries.size() - 1, PanelGrading::none);
  if (grading.size() != boundaries.size() - 1) {
    throw std::invalid_argument("with_panels: one grading entry per panel");
  }
  QuadratureRule<Scalar> rule = legendre;
  rule.panels = std::move(boundaries);
  rule.grading = std::move(grading);
  return rule;
}

template <typename Scalar = double>
QuadratureRule<Scalar> panel_rule(int order, std::vector<Scalar> boundaries,
                                  std::vector<PanelGrading> grading = {}) {
  return with_panels(gauss_legendre_rule<Scalar>(order), std::move(boundaries),
                     std::move(grading));
}

/// Sum over all panels of a Legendre panel rule. Each panel is accumulated
/// in node order and the panel sums are combined by pairwise reduction.
template <typename Scalar, typename F>
Scalar integrate_panels(F&& f, const QuadratureRule<Scalar>& rule) {
  if (rule.kind != RuleKind::legendre_panels) {
    throw std::invalid_argument("integrate_panels: rule is not a Legendre panel rule");
  }
  std::vector<Scalar> sums(rule.panel_count());
  for (std::size_t p = 0; p < sums.size(); ++p) {
    const Scalar a = rule.panels[p];
    const Scalar width = rule.panels[p + 1] - a;
    NeumaierSum<Scalar> acc;
    for (int j = 0; j < rule.order; ++j) {
      const Scalar s = (rule.nodes(j) + Scalar(1)) / Scalar(2);
      const auto [phi, dphi] = detail::grading_map(rule.grading[p], s);
      const Scalar z = a + width * phi;
      const Scalar value = f(z);
      if (!std::isfinite(value)) {
        throw EvaluationError("integrate_panels: non-finite integrand",
                              static_cast<double>(z));
      }
      acc.add(rule.weights(j) / Scalar(2) * width * dphi * value);
    }
    sums[p] = acc.sum();
  }
  return pairwise_sum(std::span<const Scalar>(sums));
}

/// sum_i w_i f(x_i); approximates int f(z) e^{-z^2} dz.
template <typename Scalar, typename F>
Scalar integrate_gauss_hermite(F&& f, const QuadratureRule<Scalar>& rule) {
  if (rule.kind != RuleKind::gauss_hermite) {
    throw std::invalid_argument("integrate_gauss_hermite: rule is not Gauss-Hermite");
  }
  NeumaierSum<Scalar> acc;
  for (int i = 0; i < rule.order; ++i) {
    const Scalar value = f(rule.nodes(i));
    if (!std::isfinite(value)) {
      throw EvaluationError("integrate_gauss_hermite: non-finite integrand",
                            static_cast<double>(rule.nodes(i)));
    }
    acc.add(rule.weights(i) * value);
  }
  return acc.sum();
}

/// Truncation half-width sqrt(2n + 1) + 10: the classical turning point plus
/// ten units, beyond which e^{-z^2} H_n^2 is below 1e-40 of its mass.
template <typename Scalar = double>
Scalar truncation_radius(int n) {
  using std::sqrt;
  return sqrt(Scalar(2 * n + 1)) + Scalar(10);
}

/// Panels on [-L, L] split at the zeros of H_n, graded toward every zero, with
/// one extra split kTailSplit outside each outermost zero.
template <typename Scalar>
QuadratureRule<Scalar> root_panels(HermiteOrder n, const QuadratureRule<Scalar>& legendre) {
  const Scalar L = truncation_radius<Scalar>(n.value());
  if (n.value() == 0) {
    // a single panel over [-L, L] is too coarse for the Gaussian core
    const Scalar split(kTailSplit);
    return with_panels(legendre, {-L, -split, Scalar(0), split, L});
  }

  const VectorX<Scalar> roots = hermite_roots<Scalar>(n).roots;
  const Scalar split(kTailSplit);
  std::vector<Scalar> bounds{-L, roots(0) - split};
  std::vector<PanelGrading> grading{PanelGrading::none, PanelGrading::upper};
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    bounds.push_back(roots(k));
    if (k + 1 < roots.size()) grading.push_back(PanelGrading::both);
  }
  bounds.push_back(roots(roots.size() - 1) + split);
  bounds.push_back(L);
  grading.push_back(PanelGrading::lower);
  grading.push_back(PanelGrading::none);
  return with_panels(legendre, std::move(bounds), std::move(grading));
}

/// I3(n) / I1(n) = int rho_n(z) ln H_n^2(z) dz with rho_n = e^{-z^2} H_n^2 / (2^n n! sqrt(pi)).
template <typename Scalar>
Scalar entropy_integral_normalized(HermiteOrder n, const QuadratureRule<Scalar>& legendre) {
  if (n.value() == 0) return Scalar(0);
  const int order = n.value();
  const Scalar ln_norm2 = ln_hermite_norm2<Scalar>(order);
  auto integrand = [order, ln_norm2](Scalar z) {
    using std::exp;
    using std::log;
    const Scalar p = hermite_orthonormal(order, z).first;
    const Scalar p2 = p * p;
    if (p2 == Scalar(0)) return Scalar(0);
    return p2 * exp(-z * z) * (log(p2) + ln_norm2);
  };
  return integrate_panels(integrand, root_panels(n, legendre));
}

/// I3(n) = int e^{-z^2} H_n^2 ln(H_n^2) dz over root-split graded panels.
/// Tail truncation beyond truncation_radius(n) contributes below 1e-40.
template <typename Scalar>
Scalar entropy_integral_numeric(HermiteOrder n, const QuadratureRule<Scalar>& legendre) {
  using std::exp;
  if (n.value() == 0) return Scalar(0);
  return exp(ln_hermite_norm2<Scalar>(n.value())) * entropy_integral_normalized(n, legendre);
}

template <typename Scalar = double>
Scalar entropy_integral_numeric(HermiteOrder n, int panel_order = kDefaultPanelOrder) {
  return entropy_integral_numeric(n, gauss_legendre_rule<Scalar>(panel_order));
}

/// Direct quadrature of the logarithmic potential
/// V_n(x) = -int e^{-z^2} H_n^2(z) ln|z - x| dz, with panels refined
/// geometrically toward x.
template <typename Scalar = double>
Scalar log_potential_numeric(HermiteOrder n, Scalar x, int panel_order = kDefaultPanelOrder) {
  using std::abs;
  using std::ldexp;
  const int order = n.value();
  if (!std::isfinite(x)) throw DomainError("log_potential_numeric: non-finite argument");
  const Scalar L = std::max(truncation_radius<Scalar>(order), abs(x) + Scalar(2));

  std::vector<Scalar> points{-L, L};
  if (order > 0 && order <= kMaxRootOrder) {
    const VectorX<Scalar> roots = hermite_roots<Scalar>(n).roots;
    for (Eigen::Index k = 0; k < roots.size(); ++k) points.push_back(roots(k));
  }
  for (int k = 0; k <= 40; ++k) {
    const Scalar h = ldexp(Scalar(1), -k);
    points.push_back(x - h);
    points.push_back(x + h);
  }
  // drop everything too close to x, then put x back exactly
  const Scalar guard = ldexp(Scalar(1), -42);
  std::erase_if(points, [&](Scalar p) { return abs(p - x) < guard || abs(p) > L; });
  points.push_back(x);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](Scalar a, Scalar b) { return abs(b - a) < Scalar(1e-14); }),
               points.end());
  // the dedupe may have merged x into a neighbour; restore it
  const auto near_x = std::min_element(points.begin(), points.end(), [&](Scalar a, Scalar b) {
    return abs(a - x) < abs(b - x);
  });
  *near_x = x;

  std::vector<PanelGrading> grading(points.size() - 1, PanelGrading::none);
  for (std::size_t p = 0; p + 1 < points.size(); ++p) {
    if (points[p + 1] == x) grading[p] = PanelGrading::upper;
    if (points[p] == x) grading[p] = PanelGrading::lower;
  }

  const Scalar ln_norm2 = ln_hermite_norm2<Scalar>(order);
  auto integrand = [order, x](Scalar z) {
    using std::exp;
    using std::log;
    const Scalar p = hermite_orthonormal(order, z).first;
    const Scalar d = abs(z - x);
    if (d == Scalar(0)) return Scalar(0);
    return p * p * exp(-z * z) * log(d);
  };
  const Scalar integral =
      integrate_panels(integrand, panel_rule<Scalar>(panel_order, std::move(points),
                                                     std::move(grading)));
  return -std::exp(ln_norm2) * integral;
}

}  // namespace seec
