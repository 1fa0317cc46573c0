#pragma once

#include <array>
#include <optional>
#include <span>

#include "dualsomos/rational.hpp"
#include "dualsomos/sequence.hpp"
#include "dualsomos/somos.hpp"

namespace dualsomos {

/// Left minus right side of the odd (eps) component of the dual recurrence on
/// the window n..n+4:
///   x_n y_{n+4} - a0 x_{n+1} y_{n+3} - 2 b0 x_{n+2} y_{n+2} - a0 x_{n+3} y_{n+1}
///   + x_{n+4} y_n - (a1 x_{n+1} x_{n+3} + b1 x_{n+2}^2).
Rational shadow_residual_4(std::span<const Rational, 5> x, std::span<const Rational, 5> y, const SomosParams& params);

/// y_{n+4} from the odd equation given x_n..x_{n+4} and y_n..y_{n+3}.
Rational shadow_step_forward(std::span<const Rational, 5> x, std::span<const Rational, 4> y, const SomosParams& params);

/// y_n from the odd equation given x_n..x_{n+4} and y_{n+1}..y_{n+4}.
Rational shadow_step_backward(std::span<const Rational, 5> x, std::span<const Rational, 4> y, const SomosParams& params);

/// Third-order operator L_n(y) = sum_j C_n^(j) y_{n+j} / x_{n+j}.
Rational apply_L(std::span<const Rational, 4> x, std::span<const Rational, 4> y, const Rational& alpha0,
                 const Rational& beta0);

/// F_n = D_n - J^(1) x_n x_{n+1} x_{n+2} x_{n+3}.
Rational inhomogeneity(std::span<const Rational, 4> x, const Rational& j1, const SomosParams& params);

/// Solves L_n(y) = F_n for y_{n+3}. Throws SingularLeadingCoefficient when C_n^(3) = 0.
Rational shadow_iv_step(std::span<const Rational, 4> x, std::span<const Rational, 3> y, const Rational& j1,
                        const SomosParams& params);

/// Iterates shadow_iv_step from y_first..y_{first+2} up to index hi.
RationalSequence solve_third_order(const SomosOrbit& orbit, int first, std::array<Rational, 3> seed,
                                   const Rational& j1, const SomosParams& params, int hi);

RationalSequence shadow_i(const SomosOrbit& orbit, int lo, int hi);
RationalSequence shadow_ii(const SomosOrbit& orbit, int lo, int hi);

/// y_n = -x_n sum_{j=0}^{n-1} v_j for n >= 0 along the map orbit starting at
/// map0 = (u, f, v_0, d_1), plus one backward homogeneous step for n = -1.
/// Throws ConsistencyError when map0 does not match the orbit.
RationalSequence shadow_iii_from_map(const SomosOrbit& orbit, const MapState& map0, int hi);

/// Prepends homogeneous backward steps (alpha1 = beta1 = 0) until the
/// sequence starts at lo. Needs four known values above each new index.
RationalSequence extend_shadow_backward(const SomosOrbit& orbit, RationalSequence seq, int lo);

/// The J^(1) = -1, zero-seed (n = -1..1) fourth shadow.
RationalSequence shadow_iv(const SomosOrbit& orbit, int hi);

/// The four homogeneous solutions aligned with an orbit.
struct ShadowBasis {
  RationalSequence y_i, y_ii, y_iii, y_iv;
};

/// Builds all four rows on [-1, hi]. The third row needs a rational map
/// state; otherwise throws DomainError suggesting the bordered-Hankel route.
ShadowBasis build_shadow_basis(const SomosOrbit& orbit, int hi);

using BasisTriple = std::array<const RationalSequence*, 3>;

/// det [y^(j)_{n+k}], rows k = 1..3, columns j = i, ii, iii.
Rational casoratian3(const BasisTriple& basis, int n);

/// Accumulators f^(i), f^(ii), f^(iii) at index n.
struct VoPState {
  Rational f_i, f_ii, f_iii;
  int n = 0;
};

/// Accumulators at n reproducing prescribed y_n, y_{n+1}, y_{n+2}.
VoPState vop_seed_for_values(const BasisTriple& basis, int n, std::array<Rational, 3> values);

/// General solution of L_n(y) = F_n by variation of parameters over the
/// homogeneous basis, from seed.n up to hi. Uses alpha0, beta0 of the orbit
/// and the given odd coefficients for D_n.
RationalSequence variation_of_parameters(const SomosOrbit& orbit, const BasisTriple& basis, const Rational& j1,
                                         const Rational& alpha1, const Rational& beta1, const VoPState& seed, int hi);

/// First index >= from at which the sequence is not positive, if any.
std::optional<int> first_nonpositive(const RationalSequence& seq, int from);

}  // namespace dualsomos
