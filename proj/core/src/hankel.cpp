#include "dualsomos/hankel.hpp"

#include <stdexcept>
#include <string>

#include "dualsomos/errors.hpp"
#include "dualsomos/linalg.hpp"

namespace dualsomos {

namespace {

void require_moments(const MomentSeq& m, int last) {
  if (m.s.empty() || m.s.last() < last) {
    throw ConsistencyError("moment sequence too short: need s_" + std::to_string(last));
  }
}

DualMatrix bordered_matrix(const MomentSeq& m, int n) {
  DualMatrix a(n, std::vector<DualScalar>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) a[i][j] = m.s.at(i + j);
    a[i][n - 1] = m.s.at(i + n);
  }
  return a;
}

}  // namespace

void MomentSpec::validate() const {
  if (!a_hat.is_unit() || !b_hat.is_unit() || !c_hat.is_unit() || !s0.is_unit()) {
    throw InvalidParams("a_hat, b_hat, c_hat and s0 must have nonzero even parts");
  }
}

MomentSeq moments(const MomentSpec& spec, int count) {
  if (count < 2) throw std::invalid_argument("moment count must be at least 2");
  spec.validate();
  std::vector<DualScalar> s{spec.s0, spec.s1};
  s.reserve(static_cast<std::size_t>(count));
  for (int j = 2; j < count; ++j) {
    DualScalar quad, cub;
    for (int i = 0; i <= j - 2; ++i) quad += s[i] * s[j - 2 - i];
    for (int i = 0; i <= j - 3; ++i) cub += s[i] * s[j - 3 - i];
    s.push_back(spec.a_hat * s[j - 2] + spec.b_hat * quad + spec.c_hat * cub);
  }
  return {spec, IndexedSequence<DualScalar>(0, std::move(s))};
}

DualScalar dual_determinant(const DualMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix even(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) even[i][j] = m[i][j].even;
  }
  Rational odd(0);
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix row_i = even;
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      row_i[i][j] = m[i][j].odd;
      nonzero = nonzero || !m[i][j].odd.is_zero();
    }
    if (nonzero) odd += determinant(std::move(row_i));
  }
  return {determinant(std::move(even)), odd};
}

DualScalar hankel_det(const MomentSeq& m, int n) {
  if (n < 0) throw std::invalid_argument("Hankel order must be nonnegative");
  if (n == 0) return DualScalar(Rational(1));
  require_moments(m, 2 * n - 2);
  DualMatrix a(n, std::vector<DualScalar>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.s.at(i + j);
  }
  return dual_determinant(a);
}

DualScalar bordered_det(const MomentSeq& m, int n) {
  if (n < 0) throw std::invalid_argument("bordered Hankel order must be nonnegative");
  if (n == 0) return DualScalar(Rational(0));
  require_moments(m, 2 * n - 1);
  return dual_determinant(bordered_matrix(m, n));
}

HankelParams params_from_moments(const MomentSpec& spec) {
  spec.validate();
  const auto& [a, b, c, s0, s1] = spec;
  HankelParams p;
  p.u = -(s0 * c) - s1 * b;
  p.f = -a - DualScalar(2) * s0 * b;
  p.j = DualScalar(2) * (s0 * a * b + s0 * s0 * b * b + s1 * c);
  p.alpha = p.u * p.u;
  p.beta = p.alpha * p.f + p.j * p.j * DualScalar(Rational(1, 4));
  return p;
}

IndexedSequence<DualScalar> hankel_orbit(const MomentSeq& m, int hi) {
  if (hi < 1) throw std::invalid_argument("Hankel orbit starts at n = 1");
  IndexedSequence<DualScalar> out(1);
  for (int n = 1; n <= hi; ++n) out.push_back(hankel_det(m, n - 1));
  return out;
}

Rational v_from_hankel(const MomentSeq& m, int n) {
  if (n < 1) throw std::invalid_argument("v_n from Hankel determinants needs n >= 1");
  const Rational prev = hankel_det(m, n - 1).even;
  const Rational cur = hankel_det(m, n).even;
  if (prev.is_zero() || cur.is_zero()) throw DivisionByZero("Hankel determinant vanishes at n = " + std::to_string(n));
  return bordered_det(m, n - 1).even / prev - bordered_det(m, n).even / cur;
}

RationalSequence shadow_iii_from_bordered(const MomentSeq& m, const SomosOrbit& host, int hi) {
  if (hi < 1) throw std::invalid_argument("bordered shadow starts at n = 1");
  require_moments(m, std::max(2 * hi - 3, 1));
  RationalSequence out(1);
  for (int n = 1; n <= hi; ++n) {
    if (!host.contains(n) || hankel_det(m, n - 1).even != host.x(n)) {
      throw ConsistencyError("Delta_" + std::to_string(n - 1) + " does not match host x_" + std::to_string(n));
    }
    out.push_back(bordered_det(m, n - 1).even);
  }
  return out;
}

}  // namespace dualsomos
