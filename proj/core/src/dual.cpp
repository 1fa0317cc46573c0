#include "dualsomos/dual.hpp"

#include <cctype>

namespace dualsomos {

namespace {

// Scans one `rat` token starting at pos and returns its end.
std::size_t scan_rational(std::string_view text, std::size_t pos) {
  const std::size_t start = pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected rational", start);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den) throw ParseError("expected denominator digits", den);
  }
  return pos;
}

Rational parse_token(std::string_view text, std::size_t start, std::size_t end) {
  try {
    return Rational::parse(text.substr(start, end - start));
  } catch (const ParseError& e) {
    throw ParseError("invalid rational", start + e.position());
  }
}

}  // namespace

DualScalar dual_parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty dual literal", 0);
  std::size_t end = scan_rational(text, 0);
  Rational first = parse_token(text, 0, end);
  if (end == text.size()) return DualScalar(first);
  if (text[end] == 'e') {
    if (end + 1 != text.size()) throw ParseError("trailing characters after 'e'", end + 1);
    return DualScalar(Rational(0), first);
  }
  if (text[end] != '+' && text[end] != '-') throw ParseError("expected '+', '-' or 'e'", end);
  const bool negate = text[end] == '-';
  const std::size_t start = end + 1;
  end = scan_rational(text, start);
  Rational second = parse_token(text, start, end);
  if (end >= text.size() || text[end] != 'e') throw ParseError("expected 'e'", end);
  if (end + 1 != text.size()) throw ParseError("trailing characters after 'e'", end + 1);
  return DualScalar(first, negate ? -second : second);
}

std::string dual_str(const DualScalar& x) {
  if (x.odd.is_zero()) return x.even.str();
  if (x.even.is_zero()) return x.odd.str() + "e";
  if (x.odd.sign() < 0) return x.even.str() + "-" + (-x.odd).str() + "e";
  return x.even.str() + "+" + x.odd.str() + "e";
}

}  // namespace dualsomos
