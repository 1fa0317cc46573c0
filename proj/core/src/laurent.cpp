#include "dualsomos/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "dualsomos/errors.hpp"

namespace dualsomos {

namespace {

constexpr std::array<std::string_view, kGenCount> kGenNames = {
    "x0", "x1", "x2", "x3", "alpha0", "alpha1", "beta0", "beta1", "y0", "y1", "y2", "y3"};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r{};
  for (std::size_t i = 0; i < kGenCount; ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::string_view gen_name(Gen g) { return kGenNames[static_cast<std::size_t>(g)]; }

int total_degree(const ExponentVector& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(ExponentVector{}, BigInt(c));
}

LaurentPoly LaurentPoly::gen(Gen g, int exponent) {
  ExponentVector e{};
  e[static_cast<std::size_t>(g)] = exponent;
  return monomial(e, BigInt(1));
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

void LaurentPoly::add_term(const ExponentVector& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExponentVector LaurentPoly::min_exponents() const {
  if (terms_.empty()) return ExponentVector{};
  ExponentVector m;
  m.fill(std::numeric_limits<std::int32_t>::max());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kGenCount; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

int LaurentPoly::max_degree_in(bool (*pred)(Gen)) const {
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (pred(static_cast<Gen>(i))) d += e[i];
    }
    best = std::max(best, d);
  }
  return best;
}

int LaurentPoly::min_degree_in(bool (*pred)(Gen)) const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (pred(static_cast<Gen>(i))) d += e[i];
    }
    best = std::min(best, d);
  }
  return best;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<ExponentVector, BigInt, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  BigInt prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[add(ea, eb)] += prod;
    }
  }
  LaurentPoly r;
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.emplace(e, std::move(c));
  }
  return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  // A monomial shift preserves the relative grlex order, so hinted insertion
  // at the end keeps this linear.
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add(e, shift), c);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    std::ostringstream mono;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (e[i] == 0) continue;
      if (!constant) mono << "*";
      constant = false;
      mono << kGenNames[i];
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (constant) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

std::optional<LaurentPoly> lp_try_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("Laurent division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly{};

  // Clear x-denominators and common x factors on both sides.
  const ExponentVector nmin = num.min_exponents();
  const ExponentVector dmin = den.min_exponents();
  ExponentVector nshift{}, dshift{}, qshift{};
  for (std::size_t i = 0; i < 4; ++i) {
    nshift[i] = -nmin[i];
    dshift[i] = -dmin[i];
    qshift[i] = nmin[i] - dmin[i];
  }
  LaurentPoly rem = num.shifted(nshift);
  const LaurentPoly divisor = den.shifted(dshift);

  const auto& [lead_exp, lead_coeff] = *divisor.terms().begin();
  std::vector<std::pair<ExponentVector, BigInt>> quotient_terms;
  BigInt q, prod;
  while (!rem.is_zero()) {
    const auto& [rexp, rcoeff] = *rem.terms().begin();
    ExponentVector qexp{};
    for (std::size_t i = 0; i < kGenCount; ++i) {
      qexp[i] = rexp[i] - lead_exp[i];
      if (qexp[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rcoeff.get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), rcoeff.get_mpz_t(), lead_coeff.get_mpz_t());
    for (const auto& [de, dc] : divisor.terms()) {
      mpz_mul(prod.get_mpz_t(), q.get_mpz_t(), dc.get_mpz_t());
      rem.add_term(add(qexp, de), -prod);
    }
    quotient_terms.emplace_back(qexp, q);
  }
  // Quotient terms were produced in strictly descending order.
  LaurentPoly::Terms terms;
  for (auto& [e, c] : quotient_terms) terms.emplace_hint(terms.end(), add(e, qshift), std::move(c));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = lp_try_exact_div(num, den);
  if (!q) throw NotDivisible("exact division failed in the Laurent ring");
  return std::move(*q);
}

Rational lp_eval(const LaurentPoly& p, const Assignment& a) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].is_zero()) throw VanishingEvenPart("x generator " + std::string(kGenNames[i]) + " assigned zero");
  }
  std::array<std::map<int, Rational>, kGenCount> powers;
  auto power = [&](std::size_t g, int e) -> const Rational& {
    auto it = powers[g].find(e);
    if (it == powers[g].end()) it = powers[g].emplace(e, pow(a[g], e)).first;
    return it->second;
  };
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term(c);
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
      if (term.is_zero()) break;
    }
    sum += term;
  }
  return sum;
}

DualScalar lp_eval(const DualLaurent& p, const Assignment& a) {
  return DualScalar(lp_eval(p.even, a), lp_eval(p.odd, a));
}

DualLaurent dual_exact_div(const DualLaurent& num, const DualLaurent& den) {
  if (den.even.is_zero()) throw VanishingEvenPart("symbolic divisor has zero even part");
  LaurentPoly even = lp_exact_div(num.even, den.even);
  LaurentPoly odd = lp_exact_div(num.odd - den.odd * even, den.even);
  return {std::move(even), std::move(odd)};
}

DualLaurent symbolic_alpha() { return {LaurentPoly::gen(Gen::alpha0), LaurentPoly::gen(Gen::alpha1)}; }
DualLaurent symbolic_beta() { return {LaurentPoly::gen(Gen::beta0), LaurentPoly::gen(Gen::beta1)}; }

std::array<DualLaurent, 4> symbolic_seed() {
  return {DualLaurent{LaurentPoly::gen(Gen::x0), LaurentPoly::gen(Gen::y0)},
          DualLaurent{LaurentPoly::gen(Gen::x1), LaurentPoly::gen(Gen::y1)},
          DualLaurent{LaurentPoly::gen(Gen::x2), LaurentPoly::gen(Gen::y2)},
          DualLaurent{LaurentPoly::gen(Gen::x3), LaurentPoly::gen(Gen::y3)}};
}

DualLaurent symbolic_somos_step(std::span<const DualLaurent, 4> w, Direction direction) {
  static const DualLaurent alpha = symbolic_alpha();
  static const DualLaurent beta = symbolic_beta();
  if (direction == Direction::forward) {
    return dual_exact_div(alpha * w[3] * w[1] + beta * w[2] * w[2], w[0]);
  }
  return dual_exact_div(alpha * w[2] * w[0] + beta * w[1] * w[1], w[3]);
}

bool even_part_is_clean(const LaurentPoly& even) {
  for (const auto& [e, c] : even.terms()) {
    for (std::size_t i = 0; i < kGenCount; ++i) {
      if (e[i] != 0 && is_odd_gen(static_cast<Gen>(i))) return false;
      if (e[i] < 0 && !is_laurent_gen(static_cast<Gen>(i))) return false;
    }
  }
  return true;
}

bool odd_part_is_affine_linear(const LaurentPoly& odd) {
  for (const auto& [e, c] : odd.terms()) {
    int degree = 0;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      const auto g = static_cast<Gen>(i);
      if (e[i] < 0 && !is_laurent_gen(g)) return false;
      if (is_odd_gen(g)) degree += e[i];
    }
    if (degree != 1) return false;
  }
  return true;
}

}  // namespace dualsomos
