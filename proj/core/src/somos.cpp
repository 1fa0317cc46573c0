#include "dualsomos/somos.hpp"

#include <stdexcept>
#include <string>

#include "dualsomos/errors.hpp"

namespace dualsomos {

SomosParams::SomosParams(DualScalar alpha, DualScalar beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.even.is_zero() && beta_.even.is_zero()) {
    throw InvalidParams("alpha and beta both have zero even part");
  }
}

DualScalar somos_step(std::span<const DualScalar, 4> w, const SomosParams& p, Direction direction) {
  if (direction == Direction::forward) {
    if (!w[0].is_unit()) throw VanishingEvenPart("forward divisor X_n is not a unit");
    return (p.alpha() * w[3] * w[1] + p.beta() * w[2] * w[2]) / w[0];
  }
  if (!w[3].is_unit()) throw VanishingEvenPart("backward divisor X_{n+4} is not a unit");
  return (p.alpha() * w[2] * w[0] + p.beta() * w[1] * w[1]) / w[3];
}

SomosOrbit::SomosOrbit(SomosParams params, int base_index, std::array<DualScalar, 4> seed)
    : params_(std::move(params)), base_(base_index), first_(base_index), terms_(seed.begin(), seed.end()) {}

const DualScalar& SomosOrbit::at(int n) const {
  if (!contains(n)) throw std::out_of_range("orbit index " + std::to_string(n) + " not computed");
  return terms_[static_cast<std::size_t>(n - first_)];
}

void SomosOrbit::extend(int lo, int hi) {
  while (this->hi() < hi) {
    const int n = this->hi() + 1;
    const std::size_t k = terms_.size();
    const std::array<DualScalar, 4> w{terms_[k - 4], terms_[k - 3], terms_[k - 2], terms_[k - 1]};
    try {
      terms_.push_back(somos_step(w, params_, Direction::forward));
    } catch (const VanishingEvenPart&) {
      throw VanishingEvenPart("non-unit term at index " + std::to_string(n - 4) + " blocks computing X_" +
                              std::to_string(n));
    }
  }
  while (first_ > lo) {
    const int n = first_ - 1;
    const std::array<DualScalar, 4> w{terms_[0], terms_[1], terms_[2], terms_[3]};
    try {
      terms_.push_front(somos_step(w, params_, Direction::backward));
    } catch (const VanishingEvenPart&) {
      throw VanishingEvenPart("non-unit term at index " + std::to_string(n + 4) + " blocks computing X_" +
                              std::to_string(n));
    }
    --first_;
  }
}

std::array<DualScalar, 4> SomosOrbit::window(int n) const { return {at(n), at(n + 1), at(n + 2), at(n + 3)}; }

std::array<Rational, 4> SomosOrbit::even_window(int n) const { return {x(n), x(n + 1), x(n + 2), x(n + 3)}; }

std::array<Rational, 4> SomosOrbit::odd_window(int n) const { return {y(n), y(n + 1), y(n + 2), y(n + 3)}; }

SomosOrbit extend_orbit(SomosOrbit orbit, int lo, int hi) {
  orbit.extend(lo, hi);
  return orbit;
}

SomosOrbit classical_orbit(int hi) {
  SomosOrbit orbit(SomosParams(DualScalar(1), DualScalar(1)), -1,
                   {DualScalar(1), DualScalar(1), DualScalar(1), DualScalar(1)});
  orbit.extend(-1, hi);
  return orbit;
}

Rational ratios_d(const SomosOrbit& orbit, int n) {
  const Rational& xn = orbit.x(n);
  if (xn.is_zero() || orbit.x(n - 1).is_zero() || orbit.x(n + 1).is_zero()) {
    throw VanishingEvenPart("zero even part near index " + std::to_string(n));
  }
  return orbit.x(n + 1) * orbit.x(n - 1) / (xn * xn);
}

Rational qrt_step(const Rational& d_prev, const Rational& d_cur, const Rational& alpha0, const Rational& beta0) {
  if (d_prev.is_zero() || d_cur.is_zero()) throw DivisionByZero("QRT step through a zero ratio");
  return (alpha0 * d_cur + beta0) / (d_cur * d_cur * d_prev);
}

Rational qrt_invariant(const Rational& d_prev, const Rational& d_cur, const Rational& alpha0, const Rational& beta0) {
  if (d_prev.is_zero() || d_cur.is_zero()) throw DivisionByZero("QRT invariant at a zero ratio");
  const Rational prod = d_cur * d_prev;
  return prod + alpha0 * (inverse(d_cur) + inverse(d_prev)) + beta0 / prod;
}

Rational j_even(std::span<const Rational, 4> x, const Rational& alpha0, const Rational& beta0) {
  return somos_invariant<Rational>(x, alpha0, beta0);
}

DualScalar j_dual(std::span<const DualScalar, 4> window, const SomosParams& params) {
  for (const auto& t : window) {
    if (!t.is_unit()) throw VanishingEvenPart("first integral needs unit terms");
  }
  return somos_invariant<DualScalar>(window, params.alpha(), params.beta());
}

const Rational& CoefficientRow::c(int j) const {
  switch (j) {
    case 0: return c0;
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
    default: throw std::out_of_range("coefficient index");
  }
}

CoefficientRow coefficient_row(std::span<const Rational, 4> x, const Rational& alpha0, const Rational& beta0,
                               const Rational& alpha1, const Rational& beta1) {
  // Shared monomials: a = x1^3 x3, b = x0 x2^3, m = x1^2 x2^2, s = x0^2 x3^2.
  const Rational a = x[1] * x[1] * x[1] * x[3];
  const Rational b = x[0] * x[2] * x[2] * x[2];
  const Rational m = x[1] * x[1] * x[2] * x[2];
  const Rational s = x[0] * x[0] * x[3] * x[3];
  CoefficientRow row;
  row.c0 = alpha0 * a + beta0 * m - s;
  row.c1 = alpha0 * b - Rational(2) * alpha0 * a - beta0 * m + s;
  row.c2 = Rational(-2) * alpha0 * b + alpha0 * a - beta0 * m + s;
  row.c3 = alpha0 * b + beta0 * m - s;
  row.d = alpha1 * b + alpha1 * a + beta1 * m;
  return row;
}

Rational j_odd(std::span<const Rational, 4> x, std::span<const Rational, 4> y, const SomosParams& params) {
  const Rational denom = x[0] * x[1] * x[2] * x[3];
  if (denom.is_zero()) throw DivisionByZero("J^(1) needs nonzero even parts");
  const CoefficientRow row = coefficient_row(x, params.alpha0(), params.beta0(), params.alpha1(), params.beta1());
  Rational num = row.d;
  for (int j = 0; j < 4; ++j) num -= row.c(j) * y[j] / x[j];
  return num / denom;
}

MapState dtoda_step(const MapState& s) {
  if (s.d.is_zero()) throw DivisionByZero("map step with d = 0");
  MapState next = s;
  next.v = -s.v + s.u / s.d;
  next.d = -s.d - next.v * next.v - s.f;
  return next;
}

Rational dtoda_invariant(const MapState& s) { return s.d * (s.v * s.v + s.d + s.f) - s.u * s.v; }

Rational dtoda_jacobian_det(const MapState& s) {
  if (s.d.is_zero()) throw DivisionByZero("map Jacobian with d = 0");
  const Rational vn = -s.v + s.u / s.d;
  const Rational ud2 = s.u / (s.d * s.d);
  // Rows: (dv'/dv, dv'/dd) = (-1, -u/d^2); (dd'/dv, dd'/dd) = (2v', -1 + 2v'u/d^2).
  const Rational a = -1, b = -ud2;
  const Rational c = Rational(2) * vn, d = Rational(-1) + Rational(2) * vn * ud2;
  return a * d - b * c;
}

MapParams params_from_map(const Rational& u, const Rational& f, const Rational& H) {
  MapParams p;
  p.alpha0 = u * u;
  p.j0 = Rational(-2) * H;
  p.beta0 = p.alpha0 * f + p.j0 * p.j0 / Rational(4);
  return p;
}

std::optional<MapState> map_state_for_orbit(const SomosOrbit& orbit, int n) {
  const Rational& alpha0 = orbit.params().alpha0();
  const Rational& beta0 = orbit.params().beta0();
  Rational root;
  if (alpha0.is_zero() || !rational_sqrt(alpha0, root)) return std::nullopt;
  const Rational j0 = j_even(orbit.even_window(n - 1), alpha0, beta0);
  const Rational H = -j0 / Rational(2);
  const Rational f = (beta0 - j0 * j0 / Rational(4)) / alpha0;
  const Rational d1 = ratios_d(orbit, n);
  const Rational d2 = ratios_d(orbit, n + 1);
  const Rational d3 = ratios_d(orbit, n + 2);

  for (const Rational& u : {-root, root}) {
    // d1 v^2 - u v + d1 (d1 + f) - H = 0.
    const Rational a = d1, b = -u, c = d1 * (d1 + f) - H;
    const Rational disc = b * b - Rational(4) * a * c;
    Rational sq;
    if (!rational_sqrt(disc, sq)) continue;
    for (const Rational& s : {-sq, sq}) {
      MapState st{u, f, (-b + s) / (Rational(2) * a), d1};
      const MapState s1 = dtoda_step(st);
      if (s1.d != d2 || s1.d.is_zero()) continue;
      if (dtoda_step(s1).d != d3) continue;
      return st;
    }
  }
  return std::nullopt;
}

}  // namespace dualsomos
