#include "dualsomos/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace dualsomos {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }

  // Scale each row to integers, then run Bareiss over Z.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (const auto& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].numerator() * (l / m[i][j].denominator());
    scale *= l;
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

}  // namespace dualsomos
