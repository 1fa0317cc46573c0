#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dualsomos/direction.hpp"
#include "dualsomos/dual.hpp"
#include "dualsomos/rational.hpp"

namespace dualsomos {

/// The fixed generator list of the symbolic ring. Order matters: it is the
/// tie-break order of the graded lexicographic monomial order.
enum class Gen : std::uint8_t {
  x0, x1, x2, x3,
  alpha0, alpha1, beta0, beta1,
  y0, y1, y2, y3,
};

inline constexpr std::size_t kGenCount = 12;

std::string_view gen_name(Gen g);

/// Only the four seed generators x0..x3 may carry negative exponents.
constexpr bool is_laurent_gen(Gen g) { return static_cast<std::size_t>(g) < 4; }

/// Generators that make up the odd (eps) sector: y0..y3, alpha1, beta1.
constexpr bool is_odd_gen(Gen g) {
  return g == Gen::alpha1 || g == Gen::beta1 || static_cast<std::size_t>(g) >= 8;
}

using ExponentVector = std::array<std::int32_t, kGenCount>;

int total_degree(const ExponentVector& e);

/// Graded lex: higher total degree first, then lexicographic in generator order.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse Laurent polynomial with integer coefficients. Terms are kept in
/// descending grlex order, so begin() is the leading term. No zero
/// coefficient is ever stored.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, BigInt, GrlexGreater>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly gen(Gen g, int exponent = 1);
  static LaurentPoly monomial(const ExponentVector& e, BigInt coeff);
  /// Adopts an already-normalized term map (no zero coefficients).
  static LaurentPoly from_terms(Terms terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Minimum exponent of each generator over all terms (zero for the zero poly).
  ExponentVector min_exponents() const;

  /// Maximum total degree in the given generator subset over all terms.
  int max_degree_in(bool (*pred)(Gen)) const;
  int min_degree_in(bool (*pred)(Gen)) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by the monomial x^shift.
  LaurentPoly shifted(const ExponentVector& shift) const;

  /// Canonical dump: terms in descending division order, decimal coefficients,
  /// e.g. "x0^-1*x1*x3*alpha0 + x0^-1*x2^2*beta0".
  std::string str() const;

  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const BigInt& c);

 private:
  Terms terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient in the Laurent ring, or nullopt when none exists.
///
/// Both operands are first shifted by monomials in x0..x3 so that no x
/// generator is a common factor; the quotient of the shifted polynomials is
/// then an ordinary polynomial iff the Laurent quotient exists, and is found
/// by leading-term cancellation under grlex.
std::optional<LaurentPoly> lp_try_exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// As lp_try_exact_div, throwing NotDivisible on failure.
LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den);

using Assignment = std::array<Rational, kGenCount>;

/// Evaluates at an assignment; throws VanishingEvenPart if an x generator is
/// assigned zero.
Rational lp_eval(const LaurentPoly& p, const Assignment& a);

/// Symbolic dual iterate: even part free of odd generators, odd part linear in them.
struct DualLaurent {
  LaurentPoly even;
  LaurentPoly odd;

  friend DualLaurent operator+(const DualLaurent& a, const DualLaurent& b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend DualLaurent operator*(const DualLaurent& a, const DualLaurent& b) {
    return {a.even * b.even, a.even * b.odd + a.odd * b.even};
  }
  friend bool operator==(const DualLaurent& a, const DualLaurent& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

DualScalar lp_eval(const DualLaurent& p, const Assignment& a);

/// Dual quotient num / den; both exact divisions must succeed.
DualLaurent dual_exact_div(const DualLaurent& num, const DualLaurent& den);

/// The symbolic coefficients alpha = alpha0 + alpha1 eps, beta = beta0 + beta1 eps.
DualLaurent symbolic_alpha();
DualLaurent symbolic_beta();

/// The generic seed window X_i = x_i + y_i eps, i = 0..3.
std::array<DualLaurent, 4> symbolic_seed();

/// One step of the dual Somos-4 recurrence on symbolic data. Forward returns
/// X_{n+4} from (X_n..X_{n+3}); backward returns X_n from (X_{n+1}..X_{n+4}).
/// Propagates NotDivisible.
DualLaurent symbolic_somos_step(std::span<const DualLaurent, 4> window, Direction direction);

/// Membership checks for the Laurent property statement.
bool even_part_is_clean(const LaurentPoly& even);
bool odd_part_is_affine_linear(const LaurentPoly& odd);

}  // namespace dualsomos
