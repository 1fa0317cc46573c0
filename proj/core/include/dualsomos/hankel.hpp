#pragma once

#include <vector>

#include "dualsomos/dual.hpp"
#include "dualsomos/sequence.hpp"
#include "dualsomos/somos.hpp"

namespace dualsomos {

/// Parameters of the quadratic moment recursion. a_hat, b_hat, c_hat and s0
/// must be units; s1 is free.
struct MomentSpec {
  DualScalar a_hat, b_hat, c_hat, s0, s1;

  /// Throws InvalidParams when a required unit has zero even part.
  void validate() const;
};

struct MomentSeq {
  MomentSpec spec;
  IndexedSequence<DualScalar> s;  ///< s_0, s_1, ...
};

/// s_j = a s_{j-2} + b sum_{i<=j-2} s_i s_{j-2-i} + c sum_{i<=j-3} s_i s_{j-3-i}.
/// Throws std::invalid_argument when count < 2.
MomentSeq moments(const MomentSpec& spec, int count);

using DualMatrix = std::vector<std::vector<DualScalar>>;

/// det(A + eps B) = det A + eps sum_i det(A with row i taken from B).
DualScalar dual_determinant(const DualMatrix& m);

/// Delta_n = det(s_{i+j})_{0<=i,j<n}; Delta_0 = 1.
DualScalar hankel_det(const MomentSeq& m, int n);

/// Delta*_n: columns s_{i+j} for j < n-1 and s_{i+n} in the last column;
/// Delta*_0 = 0.
DualScalar bordered_det(const MomentSeq& m, int n);

struct HankelParams {
  DualScalar u, f;
  DualScalar alpha, beta, j;
};

/// U = -s0 c - s1 b, F = -a - 2 s0 b, J = 2(s0 a b + s0^2 b^2 + s1 c),
/// alpha = U^2, beta = alpha F + J^2/4.
HankelParams params_from_moments(const MomentSpec& spec);

/// X_n = Delta_{n-1} for n = 1..hi.
IndexedSequence<DualScalar> hankel_orbit(const MomentSeq& m, int hi);

/// v_n = Delta*_{n-1}/Delta_{n-1} - Delta*_n/Delta_n on even parts, n >= 1.
Rational v_from_hankel(const MomentSeq& m, int n);

/// Delta*_{n-1} (even part) for n = 1..hi. Throws ConsistencyError when the
/// moments are too short or Delta_{n-1} differs from the host x_n.
RationalSequence shadow_iii_from_bordered(const MomentSeq& m, const SomosOrbit& host, int hi);

}  // namespace dualsomos
