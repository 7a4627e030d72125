#pragma once

namespace seec {

template <typename Scalar>
struct MathConstants {
  static constexpr Scalar euler_gamma =
      static_cast<Scalar>(0.577215664901532860606512090082402431L);
  static constexpr Scalar pi =
      static_cast<Scalar>(3.141592653589793238462643383279502884L);
  static constexpr Scalar sqrt_pi =
      static_cast<Scalar>(1.772453850905516027298167483341145182L);
  static constexpr Scalar sqrt2 =
      static_cast<Scalar>(1.414213562373095048801688724209698079L);
  static constexpr Scalar ln2 =
      static_cast<Scalar>(0.693147180559945309417232121458176568L);
  static constexpr Scalar ln_sqrt_pi =
      static_cast<Scalar>(0.572364942924700087071713675676529356L);
  /// ln(2 pi e), the entropic bound on H[w] + H[v] for separable states.
  static constexpr Scalar ln_2pi_e =
      static_cast<Scalar>(2.837877066409345483560659472811235280L);
};

}  // namespace seec
