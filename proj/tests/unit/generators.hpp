#pragma once

#include <cstdint>
#include <random>

#include "dualsomos/dual.hpp"
#include "dualsomos/rational.hpp"

namespace testgen {

using dualsomos::DualScalar;
using dualsomos::Rational;

/// Small hand-rolled generators over a fixed-seed engine, so every property
/// test replays the same cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  int nonzero(int lo, int hi) {
    int v = 0;
    while (v == 0) v = integer(lo, hi);
    return v;
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational(int span = 5, int max_den = 4) { return Rational(integer(-span, span), integer(1, max_den)); }
  Rational nonzero_rational(int span = 5, int max_den = 4) {
    return Rational(nonzero(-span, span), integer(1, max_den));
  }

  DualScalar dual(int span = 5) { return {rational(span), rational(span)}; }
  DualScalar unit(int span = 5) { return {nonzero_rational(span), rational(span)}; }
  DualScalar small_int_dual(int span = 3) { return {Rational(integer(-span, span)), Rational(integer(-span, span))}; }
  DualScalar small_int_unit(int span = 3) { return {Rational(nonzero(-span, span)), Rational(integer(-span, span))}; }

  std::complex<double> complex(double radius) { return {real(-radius, radius), real(-radius, radius)}; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
