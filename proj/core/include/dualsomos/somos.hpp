#pragma once

#include <array>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "dualsomos/direction.hpp"
#include "dualsomos/dual.hpp"
#include "dualsomos/rational.hpp"

namespace dualsomos {

/// Coefficients of X_{n+4} X_n = alpha X_{n+3} X_{n+1} + beta X_{n+2}^2.
class SomosParams {
 public:
  /// Throws InvalidParams when both even parts vanish.
  SomosParams(DualScalar alpha, DualScalar beta);

  const DualScalar& alpha() const { return alpha_; }
  const DualScalar& beta() const { return beta_; }
  const Rational& alpha0() const { return alpha_.even; }
  const Rational& alpha1() const { return alpha_.odd; }
  const Rational& beta0() const { return beta_.even; }
  const Rational& beta1() const { return beta_.odd; }

 private:
  DualScalar alpha_;
  DualScalar beta_;
};

/// Forward: X_{n+4} from (X_n..X_{n+3}). Backward: X_n from (X_{n+1}..X_{n+4}).
/// Throws VanishingEvenPart when the divisor is not a unit.
DualScalar somos_step(std::span<const DualScalar, 4> window, const SomosParams& params,
                      Direction direction);

/// A Somos-4 orbit with its full indexed history.
class SomosOrbit {
 public:
  /// Seeds X_base..X_{base+3}.
  SomosOrbit(SomosParams params, int base_index, std::array<DualScalar, 4> seed);

  const SomosParams& params() const { return params_; }
  int base_index() const { return base_; }
  int lo() const { return first_; }
  int hi() const { return first_ + static_cast<int>(terms_.size()) - 1; }
  bool contains(int n) const { return n >= lo() && n <= hi(); }

  /// Throws std::out_of_range outside [lo, hi].
  const DualScalar& at(int n) const;
  const Rational& x(int n) const { return at(n).even; }
  const Rational& y(int n) const { return at(n).odd; }

  /// Extends in place so [lo, hi] is covered. On VanishingEvenPart the orbit
  /// keeps every term computed so far and the error names the index.
  void extend(int lo, int hi);

  std::array<DualScalar, 4> window(int n) const;
  std::array<Rational, 4> even_window(int n) const;
  std::array<Rational, 4> odd_window(int n) const;

 private:
  SomosParams params_;
  int base_;
  int first_;
  std::deque<DualScalar> terms_;
};

/// Copy of the orbit extended to cover [lo, hi].
SomosOrbit extend_orbit(SomosOrbit orbit, int lo, int hi);

/// The running example: alpha = beta = 1, X_{-1} = X_0 = X_1 = X_2 = 1.
SomosOrbit classical_orbit(int hi = 12);

/// d_n = x_{n+1} x_{n-1} / x_n^2 over even parts.
Rational ratios_d(const SomosOrbit& orbit, int n);

/// d_{n+1} = (alpha d_n + beta) / (d_n^2 d_{n-1}).
Rational qrt_step(const Rational& d_prev, const Rational& d_cur, const Rational& alpha0,
                  const Rational& beta0);

/// The biquadratic invariant d_n d_{n-1} + alpha (1/d_n + 1/d_{n-1}) + beta/(d_n d_{n-1}).
Rational qrt_invariant(const Rational& d_prev, const Rational& d_cur, const Rational& alpha0,
                       const Rational& beta0);

/// First integral of Somos-4 in terms of four consecutive terms, generic over
/// the scalar ring so it evaluates on rationals or on dual numbers.
template <class T>
T somos_invariant(std::span<const T, 4> x, const T& alpha, const T& beta) {
  const T num = x[0] * x[0] * x[3] * x[3] + alpha * (x[1] * x[1] * x[1] * x[3] + x[0] * x[2] * x[2] * x[2]) +
                beta * x[1] * x[1] * x[2] * x[2];
  return num / (x[0] * x[1] * x[2] * x[3]);
}

/// J^(0): the invariant on even parts. Throws DivisionByZero.
Rational j_even(std::span<const Rational, 4> x, const Rational& alpha0, const Rational& beta0);

/// J = J^(0) + J^(1) eps evaluated directly in dual arithmetic.
DualScalar j_dual(std::span<const DualScalar, 4> window, const SomosParams& params);

/// Polynomial coefficients of the linearized first integral at one window.
struct CoefficientRow {
  Rational c0, c1, c2, c3;
  Rational d;

  const Rational& c(int j) const;
};

CoefficientRow coefficient_row(std::span<const Rational, 4> x, const Rational& alpha0,
                               const Rational& beta0, const Rational& alpha1 = Rational(0),
                               const Rational& beta1 = Rational(0));

/// J^(1) = (D - sum_j C_j y_{n+j} / x_{n+j}) / (x_n x_{n+1} x_{n+2} x_{n+3}).
Rational j_odd(std::span<const Rational, 4> x, std::span<const Rational, 4> y, const SomosParams& params);

// ---------------------------------------------------------------------------
// The continued-fraction map (v_{n-1}, d_n) -> (v_n, d_{n+1}):
//   v_n = -v_{n-1} + u / d_n,   d_{n+1} = -d_n - v_n^2 - f.

struct MapState {
  Rational u;
  Rational f;
  Rational v;  ///< v_{n-1}
  Rational d;  ///< d_n

  friend bool operator==(const MapState&, const MapState&) = default;
};

/// Throws DivisionByZero when d = 0.
MapState dtoda_step(const MapState& s);

/// H = d (v^2 + d + f) - u v.
Rational dtoda_invariant(const MapState& s);

/// Determinant of d(v', d')/d(v, d) from the closed-form partials.
Rational dtoda_jacobian_det(const MapState& s);

struct MapParams {
  Rational alpha0;
  Rational beta0;
  Rational j0;
};

/// alpha = u^2, J = -2H, beta = alpha f + J^2 / 4.
MapParams params_from_map(const Rational& u, const Rational& f, const Rational& H);

/// Map state (u, f, v_{n-1}, d_n) whose d-orbit reproduces the Somos ratios
/// d_n, d_{n+1}, ... of the orbit. Requires alpha0 to be a rational square and
/// the quadratic for v_{n-1} to have a rational root; nullopt otherwise.
/// The branch u = -sqrt(alpha0) is preferred.
std::optional<MapState> map_state_for_orbit(const SomosOrbit& orbit, int n);

}  // namespace dualsomos
