#include "seec/criterion.hpp"

#include <array>
#include <cmath>
#include <string>

namespace seec {
namespace {

using C = MathConstants<double>;

void check_quantum_numbers(int n, int m) {
  for (const int k : {n, m}) {
    if (k < 0 || k > kMaxQuantumNumber) {
      throw UnsupportedOrder("quantum number " + std::to_string(k) + " outside [0, " +
                             std::to_string(kMaxQuantumNumber) + "]");
    }
  }
}

void check_eta(double eta) {
  if (!std::isfinite(eta)) throw DomainError("eta must be finite");
}

/// Write-once tables of the quadrature and closed-form I3 for every
/// supported order. Built on first use; the magic static makes concurrent
/// first calls safe and all callers see the same values.
struct Tables {
  std::array<double, kMaxQuantumNumber + 1> i3{};
  std::array<double, kMaxQuantumNumber + 1> i3_normalized{};
  std::array<ClosedFormI3, kMaxQuantumNumber + 1> closed{};
};

ClosedFormI3 compute_closed_form(int n, double quadrature) {
  if (n == 0) return {0.0, quadrature, quadrature == 0.0};
  const HermiteOrder order(n);
  const RootSet<double> roots = hermite_roots<double>(order);
  double potential_sum = 0.0;
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    potential_sum += log_potential(order, roots.roots(k)).value;
  }
  const double i1 = std::exp(ln_hermite_norm2(n));
  const double value = i1 * (2.0 * n * C::ln2) - 2.0 * potential_sum;
  const bool valid = std::abs(value - quadrature) <=
                     kClosedFormTolerance * std::max(1.0, std::abs(quadrature));
  return {value, quadrature, valid};
}

const Tables& tables() {
  static const Tables built = [] {
    Tables t;
    const QuadratureRule<double> legendre = gauss_legendre_rule<double>(kDefaultPanelOrder);
    for (int n = 0; n <= kMaxQuantumNumber; ++n) {
      const HermiteOrder order(n);
      t.i3_normalized[n] = entropy_integral_normalized(order, legendre);
      t.i3[n] = n == 0 ? 0.0 : std::exp(ln_hermite_norm2(n)) * t.i3_normalized[n];
      t.closed[n] = compute_closed_form(n, t.i3[n]);
    }
    return t;
  }();
  return built;
}

/// Every marginal is a rescaled standard-state density: scale * rho_k(scale * u).
struct Shape {
  double scale;
  int order;
};

Marginal mirror(Marginal side) {
  switch (side) {
    case Marginal::w_minus: return Marginal::w_plus;
    case Marginal::w_plus: return Marginal::w_minus;
    case Marginal::v_plus: return Marginal::v_minus;
    case Marginal::v_minus: return Marginal::v_plus;
  }
  return side;
}

Shape shape_of(Marginal side, int n, int m, double eta, RotationBranch branch) {
  // under alpha = -45deg the modes trade the + and - coordinates
  if (branch == RotationBranch::minus45) side = mirror(side);
  const ScalingTransform st = ScalingTransform::make(eta);
  switch (side) {
    case Marginal::w_minus: return {st.t, n};
    case Marginal::v_plus: return {st.t, m};
    case Marginal::w_plus: return {1.0 / (2.0 * st.t), m};
    case Marginal::v_minus: return {1.0 / (2.0 * st.t), n};
  }
  return {st.t, n};
}

double expansion_entropy(const Shape& s, double i3) {
  const int k = s.order;
  const double i1 = std::exp(ln_hermite_norm2(k));
  const double i2 = -i1 * (k + 0.5);
  const double ln_q = std::log(s.scale) - ln_hermite_norm2(k);
  const double q = std::exp(ln_q);
  return -(1.0 / s.scale) * q * (ln_q * i1 + i2 + i3);
}

double density(const Shape& s, double u) {
  const double z = s.scale * u;
  const double p = hermite_orthonormal(s.order, z).first;
  return s.scale * p * p * std::exp(-z * z);
}

QuadratureRule<double> scaled_root_panels(const Shape& s, int panel_order) {
  const QuadratureRule<double> base =
      root_panels(HermiteOrder(s.order), gauss_legendre_rule<double>(panel_order));
  std::vector<double> bounds = base.panels;
  for (double& b : bounds) b /= s.scale;
  return with_panels(base, std::move(bounds), base.grading);
}

}  // namespace

ScalingTransform ScalingTransform::make(double eta) {
  check_eta(eta);
  return {eta, std::exp(eta / 2.0) / C::sqrt2};
}

double entropy_integral(int n) {
  check_quantum_numbers(n, 0);
  return tables().i3[n];
}

ClosedFormI3 closed_form_entropy_integral(int n) {
  check_quantum_numbers(n, 0);
  return tables().closed[n];
}

double standard_state_entropy(int k) {
  check_quantum_numbers(k, 0);
  return ln_hermite_norm2(k) + (k + 0.5) - tables().i3_normalized[k];
}

IntegralBundle integral_bundle(int n, int m, double eta, Source prefer) {
  check_quantum_numbers(n, m);
  const ScalingTransform st = ScalingTransform::make(eta);
  const Tables& tab = tables();

  IntegralBundle b{};
  b.n = n;
  b.m = m;
  b.eta = eta;
  b.I0 = std::exp(ln_hermite_norm2(m));
  b.I1 = std::exp(ln_hermite_norm2(n));
  b.I2 = -b.I1 * (n + 0.5);
  b.J0 = std::exp(ln_hermite_norm2(n));
  b.J1 = std::exp(ln_hermite_norm2(m));
  b.J2 = -b.J1 * (m + 0.5);

  b.I3_closed_form = tab.closed[n].value;
  b.J3_closed_form = tab.closed[m].value;
  b.i3_closed_form_valid = tab.closed[n].valid;
  b.j3_closed_form_valid = tab.closed[m].valid;
  const bool closed = prefer == Source::closed_form;
  b.i3_source = closed && b.i3_closed_form_valid ? Source::closed_form : Source::quadrature;
  b.j3_source = closed && b.j3_closed_form_valid ? Source::closed_form : Source::quadrature;
  b.I3 = b.i3_source == Source::closed_form ? b.I3_closed_form : tab.i3[n];
  b.J3 = b.j3_source == Source::closed_form ? b.J3_closed_form : tab.i3[m];

  // t I0 / (pi n! m! 2^{n+m}); the momentum prefactor uses the same power of
  // two, which is what normalizes v+.
  const double ln_denominator = 2.0 * C::ln_sqrt_pi + ln_factorial(n) + ln_factorial(m) +
                                (n + m) * C::ln2;
  b.q_nm = std::exp(std::log(st.t) + std::log(b.I0) - ln_denominator);
  b.r_nm = std::exp(std::log(st.t) + std::log(b.J0) - ln_denominator);
  return b;
}

double marginal(Marginal side, int n, int m, double eta, double u, RotationBranch branch) {
  check_quantum_numbers(n, m);
  if (!std::isfinite(u)) throw DomainError("marginal: non-finite coordinate");
  return density(shape_of(side, n, m, eta, branch), u);
}

double shannon_entropy(Marginal side, int n, int m, double eta, Source prefer,
                       RotationBranch branch) {
  check_quantum_numbers(n, m);
  const Shape s = shape_of(side, n, m, eta, branch);
  const Tables& tab = tables();
  const ClosedFormI3& closed = tab.closed[s.order];
  const bool use_closed = prefer == Source::closed_form && closed.valid;
  return expansion_entropy(s, use_closed ? closed.value : tab.i3[s.order]);
}

EntropyReport criterion_f(int n, int m, double eta, RotationBranch branch) {
  check_quantum_numbers(n, m);
  check_eta(eta);
  const Tables& tab = tables();

  const Shape w = shape_of(Marginal::w_minus, n, m, eta, branch);
  const Shape v = shape_of(Marginal::v_plus, n, m, eta, branch);
  const double h_w = expansion_entropy(w, tab.i3[w.order]);
  const double h_v = expansion_entropy(v, tab.i3[v.order]);
  const double h_w_closed = expansion_entropy(w, tab.closed[w.order].value);
  const double h_v_closed = expansion_entropy(v, tab.closed[v.order].value);

  EntropyReport r{};
  r.n = n;
  r.m = m;
  r.eta = eta;
  r.branch = branch;
  r.H_w_minus = h_w;
  r.H_v_plus = h_v;
  r.f = h_w + h_v - C::ln_2pi_e;
  r.entangled = r.f < 0.0;
  r.eta0 = shannon_entropy(Marginal::w_minus, n, m, 0.0, Source::quadrature, branch) +
           shannon_entropy(Marginal::v_plus, n, m, 0.0, Source::quadrature, branch) - C::ln_2pi_e;
  r.alt_f = shannon_entropy(Marginal::w_plus, n, m, eta, Source::quadrature, branch) +
            shannon_entropy(Marginal::v_minus, n, m, eta, Source::quadrature, branch) -
            C::ln_2pi_e;
  r.oracle_delta = std::abs(h_w_closed - h_w) + std::abs(h_v_closed - h_v);
  r.closed_form_valid = tab.closed[w.order].valid && tab.closed[v.order].valid;
  return r;
}

double threshold_eta0(int n, int m) {
  check_quantum_numbers(n, m);
  return shannon_entropy(Marginal::w_minus, n, m, 0.0) +
         shannon_entropy(Marginal::v_plus, n, m, 0.0) - C::ln_2pi_e;
}

bool is_entangled(int n, int m, double eta) { return criterion_f(n, m, eta).f < 0.0; }

double marginal_mass_numeric(Marginal side, int n, int m, double eta, int panel_order) {
  check_quantum_numbers(n, m);
  const Shape s = shape_of(side, n, m, eta, RotationBranch::plus45);
  return integrate_panels([&](double u) { return density(s, u); },
                          scaled_root_panels(s, panel_order));
}

double marginal_entropy_numeric(Marginal side, int n, int m, double eta, int panel_order) {
  check_quantum_numbers(n, m);
  const Shape s = shape_of(side, n, m, eta, RotationBranch::plus45);
  return integrate_panels(
      [&](double u) {
        const double w = density(s, u);
        return w > 0.0 ? -w * std::log(w) : 0.0;
      },
      scaled_root_panels(s, panel_order));
}

}  // namespace seec
