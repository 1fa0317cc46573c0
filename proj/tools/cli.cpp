#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "dualsomos/dual.hpp"
#include "dualsomos/elliptic.hpp"
#include "dualsomos/errors.hpp"
#include "dualsomos/hankel.hpp"
#include "dualsomos/laurent_check.hpp"
#include "dualsomos/shadow.hpp"
#include "dualsomos/somos.hpp"

namespace dualsomos::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<DualScalar> parse_duals(const std::string& text, std::size_t expected, const char* what) {
  std::vector<DualScalar> out;
  for (const auto& part : split(text, ',')) out.push_back(dual_parse(part));
  if (expected != 0 && out.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("malformed range '" + text + "', expected a..b");
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json complex_json(const Complex& c) { return Json{{"re", num(c.real())}, {"im", num(c.imag())}}; }
Json complex_json(const DualComplex& c) { return Json{{"even", complex_json(c.even)}, {"odd", complex_json(c.odd)}}; }

Json term(int n, const DualScalar& x) { return Json{{"n", n}, {"even", x.even.str()}, {"odd", x.odd.str()}}; }
Json value(int n, const Rational& x) { return Json{{"n", n}, {"value", x.str()}}; }

/// A document with both renderings; CSV is a flat table.
struct Document {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(doc.header);
    for (const auto& r : doc.rows) line(r);
  } else {
    out << doc.json.dump(2) << '\n';
  }
}

// Orbit flags shared by several subcommands.
struct OrbitFlags {
  std::string alpha = "1";
  std::string beta = "1";
  std::string seed = "1,1,1,1";
  int base = -1;
  bool classical = false;

  void attach(CLI::App* app) {
    auto* a = app->add_option("--alpha", alpha, "alpha as a dual literal, e.g. 1+1e")->capture_default_str();
    auto* b = app->add_option("--beta", beta, "beta as a dual literal")->capture_default_str();
    auto* s = app->add_option("--seed", seed, "four comma-separated dual terms X_base..X_base+3")->capture_default_str();
    auto* i = app->add_option("--base", base, "index of the first seed term")->capture_default_str();
    app->add_flag("--classical", classical, "alpha = beta = 1 with seed 1,1,1,1 at n = -1")
        ->excludes(a)
        ->excludes(b)
        ->excludes(s)
        ->excludes(i);
  }

  SomosOrbit orbit() const {
    const auto s = parse_duals(seed, 4, "--seed");
    return SomosOrbit(SomosParams(dual_parse(alpha), dual_parse(beta)), base, {s[0], s[1], s[2], s[3]});
  }
};

SomosOrbit extended(const OrbitFlags& flags, int lo, int hi) {
  SomosOrbit o = flags.orbit();
  o.extend(std::min(lo, o.lo()), std::max(hi, o.hi()));
  return o;
}

Document cmd_somos(const OrbitFlags& flags, int from, int to) {
  if (from > to) throw UsageError("--from must not exceed --to");
  const SomosOrbit o = extended(flags, from, to);
  Document doc;
  doc.json["alpha"] = dual_str(o.params().alpha());
  doc.json["beta"] = dual_str(o.params().beta());
  doc.json["base"] = o.base_index();
  doc.header = {"n", "even", "odd"};
  Json terms = Json::array();
  for (int n = from; n <= to; ++n) {
    terms.push_back(term(n, o.at(n)));
    doc.rows.push_back({std::to_string(n), o.x(n).str(), o.y(n).str()});
  }
  doc.json["terms"] = std::move(terms);
  return doc;
}

struct ShadowFlags {
  std::string rows = "i,ii,iii,iv";
  int to = 12;
  std::string iii_route = "map";
  std::string iv_route = "recurrence";
  std::string spec = "1,1,1,1,0";
  bool general = false;
  std::string j1 = "-1";
  std::string alpha1 = "0";
  std::string beta1 = "0";
  std::string values = "0,0,0";
};

Document cmd_shadow(const OrbitFlags& oflags, const ShadowFlags& f) {
  if (f.to < 3) throw UsageError("--to must be at least 3");
  const SomosOrbit o = extended(oflags, -1, f.to + 4);
  const auto wanted = split(f.rows, ',');
  for (const auto& r : wanted) {
    if (r != "i" && r != "ii" && r != "iii" && r != "iv") throw UsageError("unknown shadow row '" + r + "'");
  }

  std::map<std::string, RationalSequence> rows;
  rows["i"] = shadow_i(o, -1, f.to + 2);
  rows["ii"] = shadow_ii(o, -1, f.to + 2);

  Json notes = Json::object();
  if (f.iii_route == "map") {
    const auto map0 = map_state_for_orbit(o, 1);
    if (!map0) {
      throw DomainError(
          "the map route needs a rational map state (alpha0 a rational square, v0 quadratic split over Q); "
          "use --iii-route bordered");
    }
    rows["iii"] = shadow_iii_from_map(o, *map0, f.to + 2);
    notes["iii"] = Json{{"route", "map"}, {"u", map0->u.str()}, {"f", map0->f.str()}, {"v0", map0->v.str()}};
  } else if (f.iii_route == "bordered") {
    const auto s = parse_duals(f.spec, 5, "--spec");
    const MomentSeq m = moments({s[0], s[1], s[2], s[3], s[4]}, 2 * (f.to + 2));
    RationalSequence raw = shadow_iii_from_bordered(m, o, f.to + 2);
    // Delta*_{n-1} is y^(iii) up to a multiple of x_n; with a rational map
    // state the multiple -v0 restores the map-route normalization.
    Rational c(0);
    if (const auto map0 = map_state_for_orbit(o, 1)) c = -map0->v;
    RationalSequence shifted(1);
    for (int n = 1; n <= f.to + 2; ++n) shifted.push_back(raw.at(n) + c * o.x(n));
    rows["iii"] = extend_shadow_backward(o, std::move(shifted), -1);
    notes["iii"] = Json{{"route", "bordered"}, {"x_multiple", c.str()}};
  } else {
    throw UsageError("--iii-route must be map or bordered");
  }

  if (f.iv_route == "recurrence") {
    rows["iv"] = shadow_iv(o, f.to);
  } else if (f.iv_route == "vop") {
    const BasisTriple basis{&rows["i"], &rows["ii"], &rows["iii"]};
    const VoPState seed = vop_seed_for_values(basis, -1, {Rational(0), Rational(0), Rational(0)});
    rows["iv"] = variation_of_parameters(o, basis, Rational(-1), Rational(0), Rational(0), seed, f.to);
  } else {
    throw UsageError("--iv-route must be recurrence or vop");
  }
  notes["iv"] = Json{{"route", f.iv_route}, {"j1", "-1"}};

  Document doc;
  doc.json["alpha0"] = o.params().alpha0().str();
  doc.json["beta0"] = o.params().beta0().str();
  doc.json["routes"] = notes;
  doc.header = {"n"};
  for (const auto& r : wanted) doc.header.push_back(r);

  Json jrows = Json::object();
  for (const auto& r : wanted) {
    Json seq = Json::array();
    for (int n = -1; n <= f.to; ++n) seq.push_back(value(n, rows[r].at(n)));
    jrows[r] = std::move(seq);
  }

  if (f.general) {
    const BasisTriple basis{&rows["i"], &rows["ii"], &rows["iii"]};
    const auto v = parse_duals(f.values, 3, "--values");
    for (const auto& d : v) {
      if (!d.odd.is_zero()) throw UsageError("--values takes plain rationals");
    }
    const VoPState seed = vop_seed_for_values(basis, -1, {v[0].even, v[1].even, v[2].even});
    const RationalSequence g = variation_of_parameters(o, basis, Rational::parse(f.j1), Rational::parse(f.alpha1),
                                                       Rational::parse(f.beta1), seed, f.to);
    Json seq = Json::array();
    for (int n = -1; n <= f.to; ++n) seq.push_back(value(n, g.at(n)));
    jrows["general"] = std::move(seq);
    doc.json["general"] = Json{{"j1", f.j1}, {"alpha1", f.alpha1}, {"beta1", f.beta1}, {"values", f.values}};
    doc.header.push_back("general");
    rows["general"] = g;
  }
  doc.json["rows"] = std::move(jrows);

  Json positivity = Json::object();
  const auto scan = [&](const char* key, int from) {
    if (!rows.count(key)) return;
    RationalSequence part(-1);
    for (int n = -1; n <= f.to; ++n) part.push_back(rows[key].at(n));
    const auto bad = first_nonpositive(part, from);
    positivity[key] = bad ? Json(*bad) : Json(nullptr);
  };
  scan("iii", 1);
  scan("iv", 2);
  doc.json["first_nonpositive"] = std::move(positivity);

  for (int n = -1; n <= f.to; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t k = 1; k < doc.header.size(); ++k) row.push_back(rows[doc.header[k]].at(n).str());
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

struct HankelFlags {
  std::string spec = "1,1,1,1,0";
  int count = 10;
  std::string dets = "0..4";
  std::string bordered = "0..4";
  std::string v;
};

Document cmd_hankel(const HankelFlags& f) {
  const auto s = parse_duals(f.spec, 5, "--spec");
  const MomentSpec spec{s[0], s[1], s[2], s[3], s[4]};
  const Range dets = parse_range(f.dets);
  const Range bord = parse_range(f.bordered);
  std::optional<Range> vr;
  if (!f.v.empty()) vr = parse_range(f.v);
  if (dets.lo < 0 || bord.lo < 0 || dets.lo > dets.hi || bord.lo > bord.hi) throw UsageError("bad determinant range");
  if (vr && (vr->lo < 1 || vr->lo > vr->hi)) throw UsageError("--v range must start at 1 or later");
  int needed = std::max({f.count, 2 * dets.hi, 2 * bord.hi + 1, vr ? 2 * vr->hi + 1 : 0, 2});
  const MomentSeq m = moments(spec, needed);

  Document doc;
  Json js = Json::array();
  for (const auto& d : s) js.push_back(dual_str(d));
  doc.json["spec"] = std::move(js);
  const HankelParams p = params_from_moments(spec);
  doc.json["params"] = Json{{"U", dual_str(p.u)}, {"F", dual_str(p.f)}, {"alpha", dual_str(p.alpha)},
                            {"beta", dual_str(p.beta)}, {"J", dual_str(p.j)}};
  doc.header = {"kind", "n", "even", "odd"};

  Json mom = Json::array();
  for (int j = 0; j < f.count; ++j) {
    mom.push_back(term(j, m.s.at(j)));
    doc.rows.push_back({"s", std::to_string(j), m.s.at(j).even.str(), m.s.at(j).odd.str()});
  }
  doc.json["moments"] = std::move(mom);

  const auto table = [&](const char* kind, Range r, const std::function<DualScalar(int)>& fn) {
    Json arr = Json::array();
    for (int n = r.lo; n <= r.hi; ++n) {
      const DualScalar d = fn(n);
      arr.push_back(term(n, d));
      doc.rows.push_back({kind, std::to_string(n), d.even.str(), d.odd.str()});
    }
    return arr;
  };
  doc.json["dets"] = table("delta", dets, [&](int n) { return hankel_det(m, n); });
  doc.json["bordered"] = table("delta_star", bord, [&](int n) { return bordered_det(m, n); });
  if (vr) {
    doc.json["v"] = table("v", *vr, [&](int n) { return DualScalar(v_from_hankel(m, n)); });
  }
  return doc;
}

Document cmd_invariants(const OrbitFlags& flags, int from, int to) {
  if (from > to) throw UsageError("--from must not exceed --to");
  const SomosOrbit o = extended(flags, from, to + 3);
  Document doc;
  doc.header = {"n", "j_even", "j_odd", "H"};
  Json windows = Json::array();
  for (int n = from; n <= to; ++n) {
    const Rational je = j_even(o.even_window(n), o.params().alpha0(), o.params().beta0());
    const Rational jo = j_odd(o.even_window(n), o.odd_window(n), o.params());
    windows.push_back(Json{{"n", n}, {"j_even", je.str()}, {"j_odd", jo.str()}, {"j", dual_str(j_dual(o.window(n), o.params()))}});
    doc.rows.push_back({std::to_string(n), je.str(), jo.str(), ""});
  }
  doc.json["windows"] = std::move(windows);

  // H at each map state (v_n, d_{n+1}), when the orbit admits a rational one.
  if (const auto map0 = map_state_for_orbit(o, from + 1)) {
    Json hs = Json::array();
    MapState s = *map0;
    for (int n = from; n <= to; ++n) {
      const Rational h = dtoda_invariant(s);
      hs.push_back(value(n + 1, h));
      doc.rows[static_cast<std::size_t>(n - from)][3] = h.str();
      s = dtoda_step(s);
    }
    doc.json["map"] = Json{{"u", map0->u.str()}, {"f", map0->f.str()}, {"H", std::move(hs)}};
  }
  return doc;
}

Document cmd_laurent(int depth, int samples, std::uint64_t rng_seed, bool& ok) {
  if (depth < 4) throw UsageError("--depth must be at least 4");
  if (samples < 0) throw UsageError("--samples must be nonnegative");
  const LaurentCheckReport r = verify_laurent_property(depth, samples, rng_seed);
  ok = r.ok;
  Document doc;
  doc.json["depth"] = r.depth;
  doc.json["specializations"] = r.specializations;
  doc.json["specialization_mismatches"] = r.specialization_mismatches;
  doc.header = {"n", "even_terms", "odd_terms", "even_clean", "odd_affine"};
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"n", e.n}, {"even_terms", e.even_terms}, {"odd_terms", e.odd_terms},
                           {"even_clean", e.even_clean}, {"odd_affine", e.odd_affine}});
    doc.rows.push_back({std::to_string(e.n), std::to_string(e.even_terms), std::to_string(e.odd_terms),
                        e.even_clean ? "true" : "false", e.odd_affine ? "true" : "false"});
  }
  doc.json["iterates"] = std::move(entries);
  doc.json["verified"] = r.ok;
  return doc;
}

Json residuals(const std::vector<IndexResidual>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(Json{{"n", r.n}, {"value", num(r.value)}});
  return arr;
}

template <class S>
Json chart_json(const EllipticChart<S>& c) {
  Json roots = Json::array();
  for (const auto& e : c.lattice.roots()) roots.push_back(complex_json(e));
  return Json{{"lambda", complex_json(c.curve.lambda)},
              {"g2", complex_json(c.curve.g2)},
              {"g3", complex_json(c.curve.g3)},
              {"disc", complex_json(c.curve.disc)},
              {"roots", std::move(roots)},
              {"omega1", complex_json(c.lattice.omega1())},
              {"omega3", complex_json(c.lattice.omega3())},
              {"z", complex_json(c.z)},
              {"z0", complex_json(c.z0)},
              {"A", complex_json(c.a)},
              {"B", complex_json(c.b)},
              {"sign_z", c.sign_z},
              {"sign_z0", c.sign_z0},
              {"branch_residual", num(c.residual)}};
}

Document cmd_elliptic(const OrbitFlags& flags, int from, int to, bool dual) {
  if (from > to) throw UsageError("--from must not exceed --to");
  const SomosOrbit o = extended(flags, std::min(from, -1), std::max(to, 4) + 2);
  Document doc;
  if (dual) {
    const DualSigmaReport r = verify_dual_sigma_solution(o, from, to);
    doc.json["kind"] = "dual-complex";
    doc.json["chart"] = chart_json(r.chart);
    Json errs = Json::array();
    doc.header = {"n", "even_error", "odd_error"};
    for (const auto& e : r.error) {
      errs.push_back(Json{{"n", e.n}, {"even", num(e.even)}, {"odd", num(e.odd)}});
      doc.rows.push_back({std::to_string(e.n), num(e.even), num(e.odd)});
    }
    doc.json["x_error"] = std::move(errs);
    doc.json["max_even_error"] = num(r.max_even);
    doc.json["max_odd_error"] = num(r.max_odd);
    return doc;
  }
  const SigmaReport r = verify_sigma_solution(o, from, to);
  doc.json["kind"] = "complex";
  doc.json["chart"] = chart_json(r.chart);
  doc.json["x_error"] = residuals(r.x_error);
  doc.json["max_x_error"] = num(r.max_x_error);
  doc.json["coefficients"] = Json{{"sigma_alpha", num(r.ab_alpha)}, {"sigma_beta", num(r.ab_beta)},
                                  {"wp_alpha", num(r.abj_alpha)}, {"wp_ratio", num(r.abj_ratio)},
                                  {"wp_j", num(r.abj_j)}};
  doc.json["d_error"] = residuals(r.d_error);
  if (r.has_map) {
    doc.json["map"] = Json{{"v_sign", r.v_sign},
                           {"f_error", num(r.f_error)},
                           {"v_error", residuals(r.v_error)},
                           {"map_error", residuals(r.map_error)},
                           {"zeta_shadow_error", residuals(r.shadow_error)},
                           {"max_zeta_shadow_error", num(r.max_shadow_error)}};
  }
  doc.json["max_vdan_error"] = num(r.max_vdan_error);
  doc.header = {"n", "x_error"};
  for (const auto& e : r.x_error) doc.rows.push_back({std::to_string(e.n), num(e.value)});
  return doc;
}

Document cmd_map(const std::string& u, const std::string& f, const std::string& v, const std::string& d, int start,
                 int steps) {
  if (steps < 0) throw UsageError("--steps must be nonnegative");
  MapState s{Rational::parse(u), Rational::parse(f), Rational::parse(v), Rational::parse(d)};
  const MapParams p = params_from_map(s.u, s.f, dtoda_invariant(s));
  Document doc;
  doc.json["u"] = s.u.str();
  doc.json["f"] = s.f.str();
  doc.json["params"] = Json{{"alpha", p.alpha0.str()}, {"beta", p.beta0.str()}, {"J", p.j0.str()}};
  doc.header = {"n", "v_prev", "d", "H", "jacobian"};
  Json states = Json::array();
  for (int k = 0; k <= steps; ++k) {
    const int n = start + k;
    const Rational h = dtoda_invariant(s);
    const Rational jac = dtoda_jacobian_det(s);
    states.push_back(Json{{"n", n}, {"v_prev", s.v.str()}, {"d", s.d.str()}, {"H", h.str()}, {"jacobian", jac.str()}});
    doc.rows.push_back({std::to_string(n), s.v.str(), s.d.str(), h.str(), jac.str()});
    if (k < steps) s = dtoda_step(s);
  }
  doc.json["states"] = std::move(states);
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dual-number Somos-4 toolkit", "dsomos"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.fallthrough();

  auto* somos = app.add_subcommand("somos", "iterate the dual recurrence");
  OrbitFlags somos_orbit;
  somos_orbit.attach(somos);
  int somos_from = -1, somos_to = 12;
  somos->add_option("--from", somos_from)->capture_default_str();
  somos->add_option("--to", somos_to)->capture_default_str();

  auto* shadow = app.add_subcommand("shadow", "shadow basis rows and general solutions");
  OrbitFlags shadow_orbit;
  shadow_orbit.attach(shadow);
  ShadowFlags sf;
  shadow->add_option("--rows", sf.rows, "comma-separated subset of i,ii,iii,iv")->capture_default_str();
  shadow->add_option("--to", sf.to)->capture_default_str();
  shadow->add_option("--iii-route", sf.iii_route, "map or bordered")->capture_default_str();
  shadow->add_option("--iv-route", sf.iv_route, "recurrence or vop")->capture_default_str();
  shadow->add_option("--spec", sf.spec, "moment spec for the bordered route: a,b,c,s0,s1")->capture_default_str();
  shadow->add_flag("--general", sf.general, "add the variation-of-parameters solution");
  shadow->add_option("--j1", sf.j1)->capture_default_str();
  shadow->add_option("--alpha1", sf.alpha1)->capture_default_str();
  shadow->add_option("--beta1", sf.beta1)->capture_default_str();
  shadow->add_option("--values", sf.values, "y_{-1},y_0,y_1 for the general solution")->capture_default_str();

  auto* hankel = app.add_subcommand("hankel", "moments, Hankel determinants and parameters");
  HankelFlags hf;
  hankel->add_option("--spec", hf.spec, "a,b,c,s0,s1 as dual literals")->capture_default_str();
  hankel->add_option("--count", hf.count, "number of moments to list")->capture_default_str()->check(CLI::Range(2, 1000));
  hankel->add_option("--dets", hf.dets, "range a..b of Hankel determinants")->capture_default_str();
  hankel->add_option("--bordered", hf.bordered, "range a..b of bordered determinants")->capture_default_str();
  hankel->add_option("--v", hf.v, "range a..b of v_n from determinants");

  auto* inv = app.add_subcommand("invariants", "first integrals along an orbit");
  OrbitFlags inv_orbit;
  inv_orbit.attach(inv);
  int inv_from = -1, inv_to = 8;
  inv->add_option("--from", inv_from)->capture_default_str();
  inv->add_option("--to", inv_to)->capture_default_str();

  auto* laurent = app.add_subcommand("laurent-verify", "symbolic Laurent property check");
  int depth = 10, samples = 20;
  std::uint64_t rng_seed = 1;
  laurent->add_option("--depth", depth)->capture_default_str();
  laurent->add_option("--samples", samples)->capture_default_str();
  laurent->add_option("--rng-seed", rng_seed)->capture_default_str();

  auto* ell = app.add_subcommand("elliptic-verify", "numerical check of the sigma-function solution");
  OrbitFlags ell_orbit;
  ell_orbit.attach(ell);
  int ell_from = -1, ell_to = 12;
  bool ell_dual = false;
  ell->add_option("--from", ell_from)->capture_default_str();
  ell->add_option("--to", ell_to)->capture_default_str();
  ell->add_flag("--dual", ell_dual, "dual-complex chart against the dual orbit");

  auto* map = app.add_subcommand("map", "iterate the continued-fraction map");
  std::string mu = "-1", mf = "-3", mv = "-1", md = "1";
  int mstart = 1, msteps = 10;
  map->add_option("--u", mu)->capture_default_str();
  map->add_option("--f", mf)->capture_default_str();
  map->add_option("--v", mv, "v_{n-1} at the start")->capture_default_str();
  map->add_option("--d", md, "d_n at the start")->capture_default_str();
  map->add_option("--start", mstart, "index n of the starting d_n")->capture_default_str();
  map->add_option("--steps", msteps)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Document doc;
    int code = kOk;
    if (*somos) {
      doc = cmd_somos(somos_orbit, somos_from, somos_to);
    } else if (*shadow) {
      doc = cmd_shadow(shadow_orbit, sf);
    } else if (*hankel) {
      doc = cmd_hankel(hf);
    } else if (*inv) {
      doc = cmd_invariants(inv_orbit, inv_from, inv_to);
    } else if (*laurent) {
      bool ok = false;
      doc = cmd_laurent(depth, samples, rng_seed, ok);
      if (!ok) {
        err << Json{{"error", "LaurentPropertyViolation"}, {"message", "membership or specialization check failed"}}.dump()
            << '\n';
        code = kMath;
      }
    } else if (*ell) {
      doc = cmd_elliptic(ell_orbit, ell_from, ell_to, ell_dual);
    } else if (*map) {
      doc = cmd_map(mu, mf, mv, md, mstart, msteps);
    }
    emit(doc, format, out);
    return code;
  } catch (const MathError& e) {
    err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return kMath;
  } catch (const ParseError& e) {
    err << Json{{"error", "ParseError"}, {"message", e.what()}, {"position", e.position()}}.dump() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  }
}

}  // namespace dualsomos::cli
