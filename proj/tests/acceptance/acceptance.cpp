// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "dualsomos/elliptic.hpp"
#include "dualsomos/hankel.hpp"
#include "dualsomos/laurent_check.hpp"
#include "dualsomos/shadow.hpp"
#include "dualsomos/somos.hpp"

using namespace dualsomos;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::vector<long> kClassical{1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313, 620297};
const std::vector<long> kRowII{-1, 0, 1, 2, 6, 12, 35, 138, 413, 2512, 13761, 82090, 916443, 7443564};
const std::vector<long> kRowIII{0, 0, 1, 1, 3, 7, 15, 70, 202, 1107, 6906, 36386, 420371, 3594979};
const std::vector<long> kRowIV{0, 0, 0, 1, 1, 3, 10, 22, 108, 472, 2174, 17792, 120536, 1161627};

bool row_matches(const RationalSequence& s, const std::vector<long>& expected) {
  for (int n = -1; n <= 12; ++n) {
    if (!s.contains(n) || s.at(n) != Rational(expected[static_cast<std::size_t>(n + 1)])) return false;
  }
  return true;
}

DualScalar P(const char* s) { return dual_parse(s); }

std::vector<DualScalar> P(std::initializer_list<const char*> l) {
  std::vector<DualScalar> v;
  for (const char* s : l) v.push_back(dual_parse(s));
  return v;
}

const MomentSpec kEx1{P("1-4e"), P("1"), P("1-3/2e"), P("1+1e"), P("1/2e")};
const MomentSpec kEx2{P("1+1e"), P("1"), P("1+1/2e"), P("1"), P("-1/2e")};
const MomentSpec kEx3{P("1+1e"), P("1"), P("1+1/2e"), P("1"), P("0")};
const MomentSpec kClassicalSpec{P("1"), P("1"), P("1"), P("1"), P("0")};

// ---------------------------------------------------------------------------

Outcome classical_sequence() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"somos", "--classical", "--from", "-1", "--to", "12"}, out, err);
  o.require(code == 0, "somos exited with " + std::to_string(code));
  if (!o.ok) return o;
  const auto terms = nlohmann::json::parse(out.str())["terms"];
  o.require(terms.size() == kClassical.size(), "wrong number of terms");
  for (std::size_t k = 0; k < terms.size() && o.ok; ++k) {
    o.require(terms[k]["even"] == std::to_string(kClassical[k]) && terms[k]["odd"] == "0",
              "term " + std::to_string(k) + " differs");
  }
  return o;
}

Outcome shadow_table() {
  Outcome o;
  const SomosOrbit orbit = classical_orbit(18);
  const RationalSequence i = shadow_i(orbit, -1, 14);
  const RationalSequence ii = shadow_ii(orbit, -1, 14);
  o.require(row_matches(i, kClassical), "row i");
  o.require(row_matches(ii, kRowII), "row ii");

  const auto map0 = map_state_for_orbit(orbit, 1);
  o.require(map0.has_value(), "no rational map state");
  if (!o.ok) return o;
  const RationalSequence iii_map = shadow_iii_from_map(orbit, *map0, 14);
  o.require(row_matches(iii_map, kRowIII), "row iii via the map sum");

  // Bordered route: Delta*_{n-1} plus the -v0 multiple of x_n, then one
  // homogeneous step back to n = -1.
  const MomentSeq m = moments(kClassicalSpec, 32);
  const RationalSequence raw = shadow_iii_from_bordered(m, orbit, 14);
  RationalSequence shifted(1);
  for (int n = 1; n <= 14; ++n) shifted.push_back(raw.at(n) - map0->v * orbit.x(n));
  const RationalSequence iii_bordered = extend_shadow_backward(orbit, shifted, -1);
  o.require(row_matches(iii_bordered, kRowIII), "row iii via bordered determinants");

  o.require(row_matches(shadow_iv(orbit, 12), kRowIV), "row iv via the third-order recurrence");
  const BasisTriple basis{&i, &ii, &iii_map};
  const VoPState seed = vop_seed_for_values(basis, -1, {0, 0, 0});
  const RationalSequence iv_vop = variation_of_parameters(orbit, basis, -1, 0, 0, seed, 12);
  o.require(row_matches(iv_vop, kRowIV), "row iv via variation of parameters");
  return o;
}

Outcome hankel_examples() {
  Outcome o;
  struct Case {
    const MomentSpec* spec;
    std::vector<DualScalar> moments;
    std::vector<DualScalar> dets;
    std::array<DualScalar, 3> params;
  };
  const std::vector<Case> cases{
      {&kEx1, P({"1+1e", "1/2e", "2-1e", "1+2e", "6-6e", "7+2e", "24-28e", "41-23e", "115-154e", "236-527/2e"}),
       P({"2+1e", "3+3e", "7+10e"}), {P("1"), P("1"), P("4-1e")}},
      {&kEx2, P({"1", "-1/2e", "2+1e", "1-1e", "6+4e", "7", "24+18e", "41+18e", "115+98e", "236+345/2e"}),
       P({"2+1e", "3+2e", "7+10e"}), {P("1"), P("1+1e"), P("4+1e")}},
      {&kEx3, P({"1", "0", "2+1e", "1+1/2e", "6+5e", "7+13/2e", "24+27e", "41+105/2e", "115+164e", "236+378e"}),
       P({"2+1e", "3+3e", "7+10e"}), {P("1+1e"), P("1"), P("4+2e")}},
  };
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const std::string tag = "example " + std::to_string(c + 1) + ": ";
    const MomentSeq m = moments(*cases[c].spec, 20);
    for (int j = 0; j < 10; ++j) {
      o.require(m.s.at(j) == cases[c].moments[static_cast<std::size_t>(j)], tag + "moment s" + std::to_string(j));
    }
    for (int n = 2; n <= 4; ++n) {
      o.require(hankel_det(m, n) == cases[c].dets[static_cast<std::size_t>(n - 2)], tag + "Delta" + std::to_string(n));
    }
    const HankelParams p = params_from_moments(*cases[c].spec);
    o.require(p.alpha == cases[c].params[0] && p.beta == cases[c].params[1] && p.j == cases[c].params[2],
              tag + "(alpha, beta, J)");
  }
  const std::vector<long> odd2{1, 2, 10, 48, 160, 1273, 7346, 51394, 645078};
  const std::vector<long> odd3{1, 3, 10, 59, 198, 1387, 9389, 57983, 752301};
  const MomentSeq m2 = moments(kEx2, 20), m3 = moments(kEx3, 20);
  for (int n = 2; n <= 10; ++n) {
    o.require(hankel_det(m2, n).odd == Rational(odd2[static_cast<std::size_t>(n - 2)]), "second example shadow");
    o.require(hankel_det(m3, n).odd == Rational(odd3[static_cast<std::size_t>(n - 2)]), "third example shadow");
  }
  return o;
}

Outcome first_integrals() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> small(-3, 3);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = small(rng);
    return v;
  };
  int orbits = 0, attempts = 0;
  while (orbits < 25 && attempts < 1000) {
    ++attempts;
    const DualScalar a(small(rng), small(rng)), b(small(rng), small(rng));
    if (a.even.is_zero() && b.even.is_zero()) continue;
    const SomosParams params(a, b);
    std::array<DualScalar, 4> seed;
    for (auto& s : seed) s = DualScalar(nonzero(), small(rng));
    SomosOrbit orbit(params, 0, seed);
    bool usable = true;
    try {
      orbit.extend(-5, 23);
      for (int n = -5; n <= 23; ++n) usable = usable && !orbit.x(n).is_zero();
    } catch (const VanishingEvenPart&) {
      usable = false;
    }
    if (!usable) continue;
    ++orbits;
    const Rational j0 = j_even(orbit.even_window(0), params.alpha0(), params.beta0());
    const Rational j1 = j_odd(orbit.even_window(0), orbit.odd_window(0), params);
    for (int n = -5; n <= 20; ++n) {
      const Rational je = j_even(orbit.even_window(n), params.alpha0(), params.beta0());
      const Rational jo = j_odd(orbit.even_window(n), orbit.odd_window(n), params);
      o.require(je == j0, "J0 changes at n = " + std::to_string(n));
      o.require(jo == j1, "J1 changes at n = " + std::to_string(n));
      o.require(j_dual(orbit.window(n), params) == DualScalar(je, jo), "dual J differs from (J0, J1)");
    }
  }
  o.require(orbits >= 25, "only " + std::to_string(orbits) + " usable orbits");
  if (o.ok) o.detail = std::to_string(orbits) + " orbits";
  return o;
}

Outcome laurent_phenomenon() {
  Outcome o;
  const LaurentCheckReport r = verify_laurent_property(10, 20, 1);
  for (const auto& e : r.entries) {
    o.require(e.even_clean, "even part of X" + std::to_string(e.n) + " not clean");
    o.require(e.odd_affine, "odd part of X" + std::to_string(e.n) + " not affine-linear");
  }
  o.require(r.entries.size() == 11, "symbolic orbit incomplete");
  o.require(r.specializations == 20, "wrong number of specializations");
  o.require(r.specialization_mismatches == 0, "specialization mismatch");
  o.require(r.ok, "report not ok");
  return o;
}

Outcome map_layer() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  int states = 0;
  while (states < 10) {
    MapState s{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
               Rational(num(rng), den(rng))};
    if (s.u.is_zero() || s.d.is_zero()) continue;
    const Rational h = dtoda_invariant(s);
    bool usable = true;
    for (int k = 0; k < 50 && usable; ++k) {
      if (s.d.is_zero()) {
        usable = false;
        break;
      }
      o.require(dtoda_jacobian_det(s) == Rational(1), "Jacobian differs from 1");
      s = dtoda_step(s);
      o.require(dtoda_invariant(s) == h, "H not conserved");
    }
    if (usable) ++states;
  }
  const SomosOrbit orbit = classical_orbit(30);
  MapState s{-1, -3, -1, 1};
  for (int n = 1; n <= 28; ++n) {
    o.require(s.d == ratios_d(orbit, n), "map d differs from ratios_d at n = " + std::to_string(n));
    s = dtoda_step(s);
  }
  return o;
}

Outcome analytic_layer() {
  Outcome o;
  const CurveData c = curve_data<Rational>(1, 1, 4);
  o.require(c.lambda == Rational(1) && c.g2 == Rational(4) && c.g3 == Rational(-1), "curve data");

  const SigmaReport r = verify_sigma_solution(classical_orbit(16), -1, 12);
  o.require(r.max_x_error <= 1e-6, "sigma solution error " + std::to_string(r.max_x_error));
  for (double e : {r.ab_alpha, r.ab_beta}) o.require(e <= 1e-7, "coefficient residual");
  for (double e : {r.abj_alpha, r.abj_ratio, r.abj_j}) o.require(e <= 1e-7, "three-equation system residual");
  o.require(r.has_map && r.max_vdan_error <= 1e-7, "map solution residual");

  SomosOrbit dual(SomosParams(1, P("1+1e")), -1, {1, 1, 1, 1});
  dual.extend(-1, 12);
  const DualSigmaReport d = verify_dual_sigma_solution(dual, -1, 8);
  o.require(d.max_even <= 1e-5 && d.max_odd <= 1e-5, "dual solution error");

  char buf[160];
  std::snprintf(buf, sizeof buf, "x %.1e, coeff %.1e, vdan %.1e, dual %.1e/%.1e", r.max_x_error,
                std::max({r.ab_alpha, r.ab_beta, r.abj_alpha, r.abj_ratio, r.abj_j}), r.max_vdan_error, d.max_even,
                d.max_odd);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome cross_routes() {
  Outcome o;
  const MomentSeq m = moments(kClassicalSpec, 32);
  MapState s{-1, -3, -1, 1};
  for (int n = 1; n <= 8; ++n) {
    s = dtoda_step(s);
    o.require(v_from_hankel(m, n) == s.v, "v_" + std::to_string(n) + " differs");
  }
  const SomosOrbit orbit = classical_orbit(16);
  const RationalSequence iii = shadow_iii_from_map(orbit, MapState{-1, -3, -1, 1}, 12);
  const RationalSequence star = shadow_iii_from_bordered(m, orbit, 10);
  for (int n = 1; n <= 10; ++n) {
    o.require(star.at(n) == iii.at(n) - orbit.x(n), "Delta*_" + std::to_string(n - 1) + " differs");
    o.require(bordered_det(m, n - 1).even == star.at(n), "bordered determinant mismatch");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 means untimed
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "classical sequence", 0.1, classical_sequence},
      {2, "four-row shadow table by both routes", 1.0, shadow_table},
      {3, "moment examples", 2.0, hankel_examples},
      {4, "first integrals on random dual orbits", 0, first_integrals},
      {5, "Laurent property to depth 10", 60.0, laurent_phenomenon},
      {6, "map invariant, Jacobian and ratios", 0, map_layer},
      {7, "analytic layer", 10.0, analytic_layer},
      {8, "cross-route consistency", 0, cross_routes},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    char line[512];
    std::snprintf(line, sizeof line, "criterion %d: %s  %s  (%.3f s)%s%s", c.id, out.ok ? "PASS" : "FAIL", c.name,
                  secs, out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::cout << line << '\n';
    if (!out.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
