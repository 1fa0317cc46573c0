#include <doctest.h>

#include "dualsomos/dual.hpp"
#include "generators.hpp"

using dualsomos::DualScalar;
using dualsomos::Rational;
using dualsomos::dual_parse;
using dualsomos::dual_str;

namespace {
DualScalar d(long e, long o) { return {Rational(e), Rational(o)}; }
}  // namespace

TEST_SUITE("dual") {
  TEST_CASE("multiplication") {
    CHECK(d(0, 1) * d(0, 1) == d(0, 0));
    CHECK(d(1, 1) * d(1, 1) == d(1, 2));
    CHECK(d(1, -4) * d(1, 1) == d(1, -3));
  }

  TEST_CASE("reciprocal") {
    CHECK(inverse(d(1, 1)) == d(1, -1));
    CHECK(inverse(d(2, 1)) == DualScalar(Rational(1, 2), Rational(-1, 4)));
    CHECK(d(2, 1) * inverse(d(2, 1)) == d(1, 0));
    CHECK_THROWS_AS(inverse(d(0, 1)), dualsomos::VanishingEvenPart);
    CHECK_THROWS_AS(d(1, 0) / d(0, 3), dualsomos::VanishingEvenPart);
  }

  TEST_CASE("literal grammar") {
    CHECK(dual_parse("1-3/2e") == DualScalar(Rational(1), Rational(-3, 2)));
    CHECK(dual_parse("7") == d(7, 0));
    CHECK(dual_parse("0+1e") == d(0, 1));
    CHECK(dual_parse("-3/2e") == DualScalar(Rational(0), Rational(-3, 2)));
    CHECK(dual_parse("1/2e") == DualScalar(Rational(0), Rational(1, 2)));
    for (const char* bad : {"", "e", "1+", "1+e", "1 + 2e", "1+2", "1+2ee", "x", "1/0"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(dual_parse(bad), dualsomos::ParseError);
    }
  }

  TEST_CASE("printing round-trips") {
    testgen::Gen g(5);
    for (int i = 0; i < 300; ++i) {
      const DualScalar x = g.dual(30);
      CAPTURE(dual_str(x));
      CHECK(dual_parse(dual_str(x)) == x);
    }
  }

  TEST_CASE("ring laws and the derivative rule") {
    testgen::Gen g(6);
    for (int i = 0; i < 200; ++i) {
      const DualScalar a = g.dual(), b = g.dual(), c = g.unit();
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a / c) * c == a);
      // f(x + y eps) = f(x) + f'(x) y eps for f = t^k.
      const int k = g.integer(-4, 6);
      const DualScalar p = pow(c, k);
      CHECK(p.even == pow(c.even, k));
      CHECK(p.odd == Rational(k) * pow(c.even, k - 1) * c.odd);
    }
  }

  TEST_CASE("dual-complex smooth functions carry first-order parts") {
    using dualsomos::Complex;
    using dualsomos::DualComplex;
    const DualComplex z{Complex(0.3, 0.7), Complex(1.0, -0.5)};
    const double h = 1e-7;
    const DualComplex s = sqrt(z);
    const Complex fd = (std::sqrt(z.even + h * z.odd) - std::sqrt(z.even - h * z.odd)) / (2 * h);
    CHECK(std::abs(s.odd - fd) < 1e-7);
    const DualComplex e = exp(z);
    CHECK(std::abs(e.odd - std::exp(z.even) * z.odd) < 1e-14);
    CHECK_THROWS_AS(sqrt(DualComplex{Complex(0), Complex(1)}), dualsomos::DomainError);
  }
}
