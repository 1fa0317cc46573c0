#pragma once

#include <array>
#include <vector>

#include "dualsomos/dual.hpp"
#include "dualsomos/errors.hpp"
#include "dualsomos/rational.hpp"
#include "dualsomos/somos.hpp"

namespace dualsomos {

/// Weierstrass data of the curve y^2 = 4x^3 - g2 x - g3 attached to (alpha, beta, J):
///   lambda = (J^2/4 - beta) / (3 alpha), g2 = 12 lambda^2 - 2J,
///   g3 = 4 lambda^3 - g2 lambda - alpha, disc = g2^3 - 27 g3^2.
template <class T>
struct BasicCurveData {
  T lambda, g2, g3, disc;
};

using CurveData = BasicCurveData<Rational>;
using DualCurveData = BasicCurveData<DualScalar>;

namespace detail {
inline bool even_is_zero(const Rational& r) { return r.is_zero(); }
inline bool even_is_zero(const DualScalar& r) { return r.even.is_zero(); }
}  // namespace detail

/// Exact; throws DegenerateAlpha when the even part of alpha vanishes.
template <class T>
BasicCurveData<T> curve_data(const T& alpha, const T& beta, const T& j) {
  if (detail::even_is_zero(alpha)) throw DegenerateAlpha("alpha must be nonzero to define the curve");
  BasicCurveData<T> c;
  c.lambda = (j * j * T(Rational(1, 4)) - beta) / (T(3) * alpha);
  c.g2 = T(12) * c.lambda * c.lambda - T(2) * j;
  c.g3 = T(4) * c.lambda * c.lambda * c.lambda - c.g2 * c.lambda - alpha;
  c.disc = c.g2 * c.g2 * c.g2 - T(27) * c.g3 * c.g3;
  return c;
}

Complex to_smooth(const Rational& r, const Complex*);
DualComplex to_smooth(const DualScalar& r, const DualComplex*);

/// Converts an exact scalar into the floating smooth scalar kind S.
template <class S, class T>
S to_smooth(const T& v) {
  return to_smooth(v, static_cast<const S*>(nullptr));
}

/// Carlson's symmetric integral R_F(x, y, z) by duplication. Arguments must
/// lie off the negative real axis with at most one of them zero.
template <class S>
S carlson_rf(S x, S y, S z);

/// The period lattice of y^2 = 4x^3 - g2 x - g3 and the sigma, zeta and wp
/// functions on it, evaluated through theta-series.
///
/// Half-periods satisfy Im(omega3/omega1) > 0 with the ratio reduced to the
/// fundamental domain. For dual-complex scalars every quantity carries its
/// first-order part; discrete choices (root order, lattice basis, reduction
/// offsets) are made on even parts.
template <class S>
class Lattice {
 public:
  /// Throws SingularCurve when g2^3 - 27 g3^2 vanishes and DomainError when
  /// the computed periods do not reproduce (g2, g3).
  Lattice(S g2, S g3);
  Lattice() = default;

  const S& g2() const { return g2_; }
  const S& g3() const { return g3_; }
  const std::array<S, 3>& roots() const { return roots_; }
  const S& omega1() const { return omega1_; }
  const S& omega3() const { return omega3_; }
  const S& eta1() const { return eta1_; }
  const S& eta3() const { return eta3_; }
  S tau() const { return omega3_ / omega1_; }

  S sigma(const S& z) const;
  S zeta(const S& z) const;
  S wp(const S& z) const;
  S wp_prime(const S& z) const;
  /// 6 wp^2 - g2/2.
  S wp_second(const S& z) const;

  /// Sigma from the series without lattice reduction; only accurate for
  /// arguments within a few periods of the origin.
  S sigma_series(const S& z) const;

  /// g2 and g3 recomputed from the half-periods by Eisenstein q-series.
  std::array<S, 2> invariants_from_periods() const;

  /// Any u with wp(u) = x, via an R_F elliptic integral along a ray.
  S elliptic_log(const S& x) const;

 private:
  struct Reduced {
    S z;      ///< reduced argument
    S shift;  ///< 2m eta1 + 2n eta3
    S half;   ///< m omega1 + n omega3
    long m = 0;
    long n = 0;
  };
  Reduced reduce(const S& z) const;

  struct Theta {
    S t0, t1, t2, t3;  ///< theta_1 and its first three v-derivatives
  };
  Theta theta(const S& v) const;

  S g2_, g3_;
  std::array<S, 3> roots_;
  S omega1_, omega3_, eta1_, eta3_;
  S q_quarter_, q_;
  S theta1_prime0_;
  int terms_ = 0;
};

/// Free-function forms; each builds the lattice from (g2, g3).
template <class S>
S wp(const S& z, const S& g2, const S& g3) {
  return Lattice<S>(g2, g3).wp(z);
}
template <class S>
S wp_prime(const S& z, const S& g2, const S& g3) {
  return Lattice<S>(g2, g3).wp_prime(z);
}
template <class S>
S zeta_w(const S& z, const S& g2, const S& g3) {
  return Lattice<S>(g2, g3).zeta(z);
}
template <class S>
S sigma_w(const S& z, const S& g2, const S& g3) {
  return Lattice<S>(g2, g3).sigma(z);
}

/// The analytic parametrization x_n = A B^n sigma(z0 + n z) / sigma(z)^(n^2)
/// of a Somos-4 orbit, indexed so that n = 0 is the orbit's x_0.
template <class S>
struct EllipticChart {
  BasicCurveData<S> curve;
  Lattice<S> lattice;
  S z, z0, a, b;
  int sign_z = 1;
  int sign_z0 = 1;
  double residual = 0;  ///< relative mismatch at x_2, x_3 for the chosen branch

  S x(int n) const;
};

/// Builds a chart from exact curve data, d0 = x_1 x_{-1} / x_0^2 and the four
/// terms x_0..x_3. A and B are fitted to x_0, x_1; the sign combination for
/// (z, z0) that best reproduces x_2, x_3 is kept. Throws SingularCurve when
/// disc = 0 and BranchFailure when no combination matches to 1e-6.
template <class S>
EllipticChart<S> uniformize(const BasicCurveData<S>& curve, const S& d0, const std::array<S, 4>& x);

struct IndexResidual {
  int n;
  double value;
};

/// Numerical check of the sigma-function solution on an orbit over [lo, hi]
/// (requires x_{-1}..x_3 for the chart). Residuals are |computed - exact|
/// divided by max(1, |exact|) except x_n, which uses |x_n|.
struct SigmaReport {
  EllipticChart<Complex> chart;
  std::vector<IndexResidual> x_error;
  double max_x_error = 0;

  double ab_alpha = 0;   ///< sigma(2z)^2 / sigma(z)^8 vs alpha
  double ab_beta = 0;    ///< -sigma(3z) / sigma(z)^9 vs beta
  double abj_alpha = 0;  ///< wp'(z)^2 vs alpha
  double abj_ratio = 0;  ///< wp(2z) - wp(z) vs beta / alpha
  double abj_j = 0;      ///< wp''(z) vs J

  std::vector<IndexResidual> d_error;  ///< d_n vs wp(z) - wp(z0 + n z)
  /// The remaining checks need a rational map state for the orbit.
  bool has_map = false;
  int v_sign = 1;
  double f_error = 0;                       ///< f vs -3 wp(z)
  std::vector<IndexResidual> v_error;       ///< v_n vs +-(zeta(z0+(n+1)z) - zeta(z0+nz) - zeta(z))
  std::vector<IndexResidual> map_error;     ///< analytic v_n^2 + d_{n+1} + d_n + f
  std::vector<IndexResidual> shadow_error;  ///< y_n^(iii)/x_n vs +-(n zeta(z) + zeta(z0) - zeta(z0+nz))
  double max_vdan_error = 0;
  double max_shadow_error = 0;
};

SigmaReport verify_sigma_solution(const SomosOrbit& orbit, int lo, int hi);

struct DualResidual {
  int n;
  double even;  ///< relative to |x_n|
  double odd;   ///< relative to max(|x_n|, |y_n|)
};

struct DualSigmaReport {
  EllipticChart<DualComplex> chart;
  std::vector<DualResidual> error;
  double max_even = 0;
  double max_odd = 0;
};

/// The same parametrization in dual-complex arithmetic: every parameter
/// (g2, g3, z, z0, A, B) acquires an eps part and the predicted X_n is
/// compared with the exact dual orbit.
DualSigmaReport verify_dual_sigma_solution(const SomosOrbit& orbit, int lo, int hi);

extern template class Lattice<Complex>;
extern template class Lattice<DualComplex>;
extern template struct EllipticChart<Complex>;
extern template struct EllipticChart<DualComplex>;

}  // namespace dualsomos
