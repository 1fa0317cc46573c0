#include "dualsomos/rational.hpp"

#include <cctype>

#include "dualsomos/errors.hpp"

namespace dualsomos {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

BigInt parse_digits(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits", start);
  return BigInt(std::string(text.substr(start, pos - start)), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  BigInt num = parse_digits(text, pos);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = parse_digits(text, pos);
    if (den == 0) throw ParseError("zero denominator", den_pos);
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& base, int exponent) {
  Rational b = exponent < 0 ? inverse(base) : base;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  Rational result(1);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const BigInt n = r.numerator();
  const BigInt d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  return true;
}

}  // namespace dualsomos
