#pragma once

// Coupled oscillator H = P1^2/2m1 + P2^2/2m2 + (A/2)X1^2 + (B/2)X2^2 + (C/2)X1X2:
// normal-mode decomposition, eigenenergies, and eigenfunctions in the
// sum/difference coordinates x+- = x1 +- x2.

#include <cmath>
#include <string>

#include "seec/constants.hpp"
#include "seec/errors.hpp"
#include "seec/specfun.hpp"

namespace seec {

template <typename Scalar>
struct Couplings {
  Scalar A;
  Scalar B;
  Scalar C;
};

template <typename Scalar>
struct CoupledHamiltonian {
  Scalar m1;
  Scalar m2;
  Scalar A;
  Scalar B;
  Scalar C;

  /// Throws DomainError for nonpositive masses or couplings and
  /// UnboundModeError unless 4AB - C^2 > 0.
  void validate() const {
    if (!(m1 > 0) || !(m2 > 0)) throw DomainError("masses m1, m2 must be positive");
    if (!(A > 0) || !(B > 0)) throw DomainError("couplings A, B must be positive");
    if (!std::isfinite(C)) throw DomainError("coupling C must be finite");
    if (!(Scalar(4) * A * B - C * C > 0)) {
      throw UnboundModeError("bound 4AB - C^2 > 0 violated (4AB - C^2 = " +
                             std::to_string(static_cast<double>(Scalar(4) * A * B - C * C)) +
                             ")");
    }
  }
};

/// Normal-mode description. eta splits the mode frequencies to e^{+-eta}
/// (units of omega); alpha rotates (x1, x2) onto the normal coordinates.
template <typename Scalar>
struct DiagonalizedSystem {
  Scalar M;      // sqrt(m1 m2)
  Scalar K;      // sqrt(AB - C^2/4)
  Scalar omega;  // sqrt(K / M)
  Scalar eta;
  Scalar alpha;  // radians
  bool degenerate_branch = false;
};

/// |A - B| at or below this fraction of A + B takes the A -> B limit.
inline constexpr double kDegeneracyThreshold = 1e-12;

template <typename Scalar>
DiagonalizedSystem<Scalar> diagonalize(const CoupledHamiltonian<Scalar>& h) {
  using std::abs;
  using std::atan2;
  using std::hypot;
  using std::log;
  using std::sqrt;
  h.validate();

  const Scalar diff = h.A - h.B;
  const Scalar sum = h.A + h.B;
  const Scalar radius = hypot(diff, h.C);
  const Scalar disc = sqrt(Scalar(4) * h.A * h.B - h.C * h.C);
  const bool degenerate = abs(diff) <= Scalar(kDegeneracyThreshold) * sum;

  DiagonalizedSystem<Scalar> d;
  d.M = sqrt(h.m1 * h.m2);
  d.K = disc / Scalar(2);
  d.omega = sqrt(d.K / d.M);
  d.degenerate_branch = degenerate;

  // e^{2 eta} = (A + B + sgn(A - B) R) / disc. The minus branch equals
  // disc / (A + B + R), which avoids cancellation near the unbound edge.
  const Scalar sign = (degenerate || diff > 0) ? Scalar(1) : Scalar(-1);
  d.eta = sign * log((sum + radius) / disc) / Scalar(2);

  if (degenerate) {
    const Scalar quarter = MathConstants<Scalar>::pi / Scalar(4);
    d.alpha = h.C == Scalar(0) ? Scalar(0) : (h.C < 0 ? quarter : -quarter);
  } else {
    // cos 2a = |A - B| / R >= 0 and sin 2a = -sgn(A - B) C / R; this is
    // tan 2a = C / (B - A) on the branch that reconstructs (A, B, C).
    d.alpha = atan2(-sign * h.C, abs(diff)) / Scalar(2);
  }
  return d;
}

/// Quadratic-form coefficients of K (e^{2 eta} y1^2 + e^{-2 eta} y2^2) after
/// rotating back to (x1, x2).
template <typename Scalar>
Couplings<Scalar> reconstruct(const DiagonalizedSystem<Scalar>& d) {
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sinh;
  const Scalar c = cos(d.alpha);
  const Scalar s = sin(d.alpha);
  const Scalar up = exp(Scalar(2) * d.eta);
  const Scalar down = exp(Scalar(-2) * d.eta);
  return {d.K * (up * c * c + down * s * s), d.K * (up * s * s + down * c * c),
          Scalar(-2) * d.K * sinh(Scalar(2) * d.eta) * sin(Scalar(2) * d.alpha)};
}

/// Quantum numbers (n, m) of the two normal modes with their normalization
/// constants c = 1 / sqrt(sqrt(pi) k! 2^k).
struct ModePair {
  int n;
  int m;
  double c1;
  double c2;

  static ModePair make(int n, int m) {
    if (n < 0 || m < 0) throw DomainError("quantum numbers must be non-negative");
    if (n > kMaxEvalOrder || m > kMaxEvalOrder) {
      throw UnsupportedOrder("quantum number exceeds " + std::to_string(kMaxEvalOrder));
    }
    return {n, m, std::exp(-ln_hermite_norm2(n) / 2), std::exp(-ln_hermite_norm2(m) / 2)};
  }
};

/// E_nm = e^eta (n + 1/2) + e^-eta (m + 1/2) in units of hbar omega.
template <typename Scalar>
Scalar energy(const ModePair& mode, Scalar eta) {
  using std::exp;
  return exp(eta) * (Scalar(mode.n) + Scalar(0.5)) + exp(-eta) * (Scalar(mode.m) + Scalar(0.5));
}

enum class Space { position, momentum };

/// Which 45-degree rotation: C < 0 gives alpha = +45deg, C > 0 gives -45deg.
enum class RotationBranch { plus45, minus45 };

/// Eigenfunction in (u+, u-) = (x+, x-) or (p+, p-), normalized so that
/// (1/2) int int |Psi|^2 du+ du- = 1.
template <typename Scalar>
Scalar wavefunction(const ModePair& mode, Scalar eta, Space space, Scalar u_plus, Scalar u_minus,
                    RotationBranch branch = RotationBranch::plus45) {
  using std::exp;
  if (!std::isfinite(u_plus) || !std::isfinite(u_minus) || !std::isfinite(eta)) {
    throw DomainError("wavefunction: non-finite argument");
  }
  const Scalar sqrt2 = MathConstants<Scalar>::sqrt2;
  // momentum replaces e^{eta/2} y by e^{-eta/2} p in each mode
  const Scalar s = space == Space::position ? Scalar(1) : Scalar(-1);
  const Scalar scale1 = exp(s * eta / Scalar(2)) / sqrt2;
  const Scalar scale2 = exp(-s * eta / Scalar(2)) / sqrt2;
  if (branch == RotationBranch::plus45) {
    // y1 = u- / sqrt2, y2 = u+ / sqrt2
    return hermite_function(mode.n, scale1 * u_minus) * hermite_function(mode.m, scale2 * u_plus);
  }
  // y1 = u+ / sqrt2, y2 = -u- / sqrt2
  return hermite_function(mode.n, scale1 * u_plus) * hermite_function(mode.m, -scale2 * u_minus);
}

/// Rotation-checked form: only alpha = +-45 degrees has (x+, x-) as normal
/// coordinates.
template <typename Scalar>
Scalar wavefunction(const ModePair& mode, const DiagonalizedSystem<Scalar>& d, Space space,
                    Scalar u_plus, Scalar u_minus) {
  using std::abs;
  const Scalar quarter = MathConstants<Scalar>::pi / Scalar(4);
  const Scalar tol(1e-9);
  if (abs(d.alpha - quarter) <= tol) {
    return wavefunction(mode, d.eta, space, u_plus, u_minus, RotationBranch::plus45);
  }
  if (abs(d.alpha + quarter) <= tol) {
    return wavefunction(mode, d.eta, space, u_plus, u_minus, RotationBranch::minus45);
  }
  throw UnsupportedRegime("wavefunction: alpha = " + std::to_string(static_cast<double>(d.alpha)) +
                          " rad is not +-45 degrees");
}

}  // namespace seec
