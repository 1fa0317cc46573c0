#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "dualsomos/errors.hpp"
#include "dualsomos/rational.hpp"

namespace dualsomos {

/// Element x + y*eps of the commutative algebra with eps^2 = 0.
///
/// `even` is the x part, `odd` the coefficient of eps. The template is
/// instantiated over exact rationals (DualScalar) for the recurrence kernel
/// and over std::complex<double> (DualComplex) for the elliptic layer.
template <class T>
struct Dual {
  T even{};
  T odd{};

  constexpr Dual() = default;
  constexpr Dual(T e) : even(std::move(e)), odd() {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(T e, T o) : even(std::move(e)), odd(std::move(o)) {}
  template <class U>
    requires(std::is_arithmetic_v<U> && !std::is_same_v<U, T>)
  constexpr Dual(U v) : even(T(v)), odd() {}  // NOLINT(google-explicit-constructor)

  /// A dual number is invertible iff its even part is nonzero.
  bool is_unit() const { return !(even == T{}); }

  Dual& operator+=(const Dual& o) {
    even += o.even;
    odd += o.odd;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    even -= o.even;
    odd -= o.odd;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    odd = even * o.odd + odd * o.even;
    even *= o.even;
    return *this;
  }
  Dual& operator/=(const Dual& o) { return *this *= inverse_of(o); }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.even, -a.odd); }

  friend bool operator==(const Dual& a, const Dual& b) { return a.even == b.even && a.odd == b.odd; }

  /// x^-1 (1 - x^-1 y eps); throws VanishingEvenPart for non-units.
  static Dual inverse_of(const Dual& a) {
    if (!a.is_unit()) throw VanishingEvenPart("dual number with zero even part is not invertible");
    T inv = T(1) / a.even;
    return Dual(inv, -(inv * inv * a.odd));
  }
};

using DualScalar = Dual<Rational>;
using Complex = std::complex<double>;
using DualComplex = Dual<Complex>;

template <class T>
Dual<T> inverse(const Dual<T>& a) {
  return Dual<T>::inverse_of(a);
}

template <class T>
Dual<T> pow(const Dual<T>& base, int exponent) {
  Dual<T> b = exponent < 0 ? inverse(base) : base;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  Dual<T> result(T(1));
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline DualScalar dual_mul(const DualScalar& a, const DualScalar& b) { return a * b; }
inline DualScalar dual_inv(const DualScalar& a) { return inverse(a); }

/// Parses `rat | rat sign rat 'e' | rat 'e'` with no whitespace, where
/// `rat := '-'? digits ('/' digits)?`. Examples: "7", "1+2e", "-3/2e".
DualScalar dual_parse(std::string_view text);

/// Canonical text in the same grammar; dual_parse(dual_str(x)) == x.
std::string dual_str(const DualScalar& x);

inline std::ostream& operator<<(std::ostream& os, const DualScalar& x) { return os << dual_str(x); }

// ---------------------------------------------------------------------------
// Smooth scalars: the operations the elliptic layer needs. Complex doubles use
// the standard library; dual-complex values propagate first-order parts via
// Phi(x + y eps) = Phi(x) + Phi'(x) y eps.

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const DualComplex& z) { return std::abs(z.even); }

inline Complex even_part(const Complex& z) { return z; }
inline Complex even_part(const DualComplex& z) { return z.even; }

/// Principal branch.
inline DualComplex sqrt(const DualComplex& a) {
  const Complex r = std::sqrt(a.even);
  if (r == Complex{}) throw DomainError("dual square root at zero even part");
  return {r, a.odd / (2.0 * r)};
}

inline DualComplex exp(const DualComplex& a) {
  const Complex e = std::exp(a.even);
  return {e, e * a.odd};
}

template <class S>
concept SmoothScalar = requires(S a, S b, double d) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { S(d) };
  { sqrt(a) } -> std::convertible_to<S>;
  { exp(a) } -> std::convertible_to<S>;
  { magnitude(a) } -> std::convertible_to<double>;
  { even_part(a) } -> std::convertible_to<Complex>;
};

static_assert(SmoothScalar<Complex>);
static_assert(SmoothScalar<DualComplex>);

}  // namespace dualsomos
