#include "dualsomos/shadow.hpp"

#include <string>

#include "dualsomos/errors.hpp"
#include "dualsomos/linalg.hpp"

namespace dualsomos {

namespace {

SomosParams homogeneous(const SomosParams& p) { return SomosParams(DualScalar(p.alpha0()), DualScalar(p.beta0())); }

std::array<Rational, 5> even5(const SomosOrbit& orbit, int n) {
  return {orbit.x(n), orbit.x(n + 1), orbit.x(n + 2), orbit.x(n + 3), orbit.x(n + 4)};
}

void require_range(const SomosOrbit& orbit, int lo, int hi) {
  if (!orbit.contains(lo) || !orbit.contains(hi)) {
    throw ConsistencyError("orbit does not cover indices " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

Rational shadow_residual_4(std::span<const Rational, 5> x, std::span<const Rational, 5> y, const SomosParams& p) {
  const Rational& a0 = p.alpha0();
  const Rational& b0 = p.beta0();
  const Rational lhs = x[0] * y[4] - a0 * x[1] * y[3] - Rational(2) * b0 * x[2] * y[2] - a0 * x[3] * y[1] + x[4] * y[0];
  const Rational rhs = p.alpha1() * x[1] * x[3] + p.beta1() * x[2] * x[2];
  return lhs - rhs;
}

Rational shadow_step_forward(std::span<const Rational, 5> x, std::span<const Rational, 4> y, const SomosParams& p) {
  if (x[0].is_zero()) throw VanishingEvenPart("forward shadow step divides by x_n = 0");
  const std::array<Rational, 5> yy{y[0], y[1], y[2], y[3], Rational(0)};
  // The residual is affine in y_{n+4} with slope x_n.
  return -shadow_residual_4(x, yy, p) / x[0];
}

Rational shadow_step_backward(std::span<const Rational, 5> x, std::span<const Rational, 4> y, const SomosParams& p) {
  if (x[4].is_zero()) throw VanishingEvenPart("backward shadow step divides by x_{n+4} = 0");
  const std::array<Rational, 5> yy{Rational(0), y[0], y[1], y[2], y[3]};
  return -shadow_residual_4(x, yy, p) / x[4];
}

Rational apply_L(std::span<const Rational, 4> x, std::span<const Rational, 4> y, const Rational& alpha0,
                 const Rational& beta0) {
  const CoefficientRow row = coefficient_row(x, alpha0, beta0);
  Rational sum(0);
  for (int j = 0; j < 4; ++j) {
    if (x[j].is_zero()) throw DivisionByZero("L_n needs nonzero even parts");
    sum += row.c(j) * y[j] / x[j];
  }
  return sum;
}

Rational inhomogeneity(std::span<const Rational, 4> x, const Rational& j1, const SomosParams& p) {
  const CoefficientRow row = coefficient_row(x, p.alpha0(), p.beta0(), p.alpha1(), p.beta1());
  return row.d - j1 * x[0] * x[1] * x[2] * x[3];
}

Rational shadow_iv_step(std::span<const Rational, 4> x, std::span<const Rational, 3> y, const Rational& j1,
                        const SomosParams& p) {
  const CoefficientRow row = coefficient_row(x, p.alpha0(), p.beta0(), p.alpha1(), p.beta1());
  if (row.c3.is_zero()) throw SingularLeadingCoefficient("C^(3) vanishes");
  Rational rhs = row.d - j1 * x[0] * x[1] * x[2] * x[3];
  for (int j = 0; j < 3; ++j) {
    if (x[j].is_zero()) throw DivisionByZero("third-order step needs nonzero even parts");
    rhs -= row.c(j) * y[j] / x[j];
  }
  return x[3] * rhs / row.c3;
}

RationalSequence solve_third_order(const SomosOrbit& orbit, int first, std::array<Rational, 3> seed,
                                   const Rational& j1, const SomosParams& params, int hi) {
  require_range(orbit, first, std::max(hi, first + 2));
  RationalSequence out(first, {seed[0], seed[1], seed[2]});
  for (int n = first; n + 3 <= hi; ++n) {
    const std::array<Rational, 3> y{out.at(n), out.at(n + 1), out.at(n + 2)};
    try {
      out.push_back(shadow_iv_step(orbit.even_window(n), y, j1, params));
    } catch (const SingularLeadingCoefficient&) {
      throw SingularLeadingCoefficient("C^(3) vanishes at n = " + std::to_string(n));
    }
  }
  return out;
}

RationalSequence shadow_i(const SomosOrbit& orbit, int lo, int hi) {
  require_range(orbit, lo, hi);
  RationalSequence out(lo);
  for (int n = lo; n <= hi; ++n) out.push_back(orbit.x(n));
  return out;
}

RationalSequence shadow_ii(const SomosOrbit& orbit, int lo, int hi) {
  require_range(orbit, lo, hi);
  RationalSequence out(lo);
  for (int n = lo; n <= hi; ++n) out.push_back(Rational(n) * orbit.x(n));
  return out;
}

RationalSequence shadow_iii_from_map(const SomosOrbit& orbit, const MapState& map0, int hi) {
  require_range(orbit, -1, std::max(hi, 3) + 2);
  const SomosParams& p = orbit.params();
  if (map0.d != ratios_d(orbit, 1)) throw ConsistencyError("map d_1 does not match the orbit ratio d_1");
  const MapParams mp = params_from_map(map0.u, map0.f, dtoda_invariant(map0));
  if (mp.alpha0 != p.alpha0() || mp.beta0 != p.beta0() || mp.j0 != j_even(orbit.even_window(-1), p.alpha0(), p.beta0())) {
    throw ConsistencyError("map parameters do not reproduce (alpha0, beta0, J0) of the orbit");
  }

  const int top = std::max(hi, 3);
  RationalSequence out(0);
  Rational partial(0);
  MapState s = map0;
  for (int n = 0; n <= top; ++n) {
    out.push_back(-orbit.x(n) * partial);
    // s holds (v_n, d_{n+1}) here.
    partial += s.v;
    if (s.d != ratios_d(orbit, n + 1)) {
      throw ConsistencyError("map orbit leaves the Somos ratios at d_" + std::to_string(n + 1));
    }
    if (n < top) s = dtoda_step(s);
  }
  const std::array<Rational, 4> y{out.at(0), out.at(1), out.at(2), out.at(3)};
  out.push_front(shadow_step_backward(even5(orbit, -1), y, homogeneous(p)));
  if (out.last() > hi) {
    std::vector<Rational> v(out.values().begin(), out.values().begin() + (hi - out.first() + 1));
    return RationalSequence(out.first(), std::move(v));
  }
  return out;
}

RationalSequence extend_shadow_backward(const SomosOrbit& orbit, RationalSequence seq, int lo) {
  const SomosParams p = homogeneous(orbit.params());
  while (seq.first() > lo) {
    const int n = seq.first() - 1;
    require_range(orbit, n, n + 4);
    const std::array<Rational, 4> y{seq.at(n + 1), seq.at(n + 2), seq.at(n + 3), seq.at(n + 4)};
    seq.push_front(shadow_step_backward(even5(orbit, n), y, p));
  }
  return seq;
}

RationalSequence shadow_iv(const SomosOrbit& orbit, int hi) {
  return solve_third_order(orbit, -1, {Rational(0), Rational(0), Rational(0)}, Rational(-1),
                           homogeneous(orbit.params()), hi);
}

ShadowBasis build_shadow_basis(const SomosOrbit& orbit, int hi) {
  const auto map0 = map_state_for_orbit(orbit, 1);
  if (!map0) {
    throw DomainError(
        "map route needs rational (u, f, v0): alpha0 must be a rational square and the v0 quadratic must split "
        "over Q; use the bordered-Hankel route instead");
  }
  ShadowBasis b;
  b.y_i = shadow_i(orbit, -1, hi);
  b.y_ii = shadow_ii(orbit, -1, hi);
  b.y_iii = shadow_iii_from_map(orbit, *map0, hi);
  b.y_iv = shadow_iv(orbit, hi);
  return b;
}

Rational casoratian3(const BasisTriple& basis, int n) {
  RationalMatrix m(3, std::vector<Rational>(3));
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) m[k][j] = basis[j]->at(n + 1 + k);
  }
  return determinant(std::move(m));
}

VoPState vop_seed_for_values(const BasisTriple& basis, int n, std::array<Rational, 3> values) {
  RationalMatrix m(3, std::vector<Rational>(3));
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) m[k][j] = basis[j]->at(n + k);
  }
  const Rational det = determinant(m);
  if (det.is_zero()) throw SingularCasoratian("basis matrix singular at n = " + std::to_string(n));
  std::array<Rational, 3> f;
  for (int j = 0; j < 3; ++j) {
    RationalMatrix mj = m;
    for (int k = 0; k < 3; ++k) mj[k][j] = values[k];
    f[j] = determinant(std::move(mj)) / det;
  }
  return {f[0], f[1], f[2], n};
}

RationalSequence variation_of_parameters(const SomosOrbit& orbit, const BasisTriple& basis, const Rational& j1,
                                         const Rational& alpha1, const Rational& beta1, const VoPState& seed, int hi) {
  const SomosParams p(DualScalar(orbit.params().alpha0(), alpha1), DualScalar(orbit.params().beta0(), beta1));
  std::array<Rational, 3> f{seed.f_i, seed.f_ii, seed.f_iii};
  RationalSequence out(seed.n);
  for (int k = seed.n; k <= hi; ++k) {
    Rational y(0);
    for (int j = 0; j < 3; ++j) y += f[j] * basis[j]->at(k);
    out.push_back(y);
    if (k == hi) break;

    const auto x = orbit.even_window(k);
    const CoefficientRow row = coefficient_row(x, p.alpha0(), p.beta0(), p.alpha1(), p.beta1());
    if (row.c3.is_zero()) throw SingularLeadingCoefficient("C^(3) vanishes at n = " + std::to_string(k));
    const Rational cas = casoratian3(basis, k);
    if (cas.is_zero()) throw SingularCasoratian("Casoratian vanishes at n = " + std::to_string(k));
    const Rational scale = x[3] * inhomogeneity(x, j1, p) / (row.c3 * cas);
    const auto a = [&](int j) -> const Rational& { return basis[j]->at(k + 1); };
    const auto b = [&](int j) -> const Rational& { return basis[j]->at(k + 2); };
    f[0] += scale * (a(1) * b(2) - a(2) * b(1));
    f[1] += scale * (a(2) * b(0) - a(0) * b(2));
    f[2] += scale * (a(0) * b(1) - a(1) * b(0));
  }
  return out;
}

std::optional<int> first_nonpositive(const RationalSequence& seq, int from) {
  for (int n = std::max(from, seq.first()); n <= seq.last(); ++n) {
    if (seq.at(n).sign() <= 0) return n;
  }
  return std::nullopt;
}

}  // namespace dualsomos
