#include "dualsomos/laurent_check.hpp"

#include <random>

#include "dualsomos/errors.hpp"
#include "dualsomos/somos.hpp"

namespace dualsomos {

std::vector<DualLaurent> symbolic_orbit(int depth) {
  const auto seed = symbolic_seed();
  std::vector<DualLaurent> xs(seed.begin(), seed.end());
  for (int n = 4; n <= depth; ++n) {
    const std::array<DualLaurent, 4> w{xs[n - 4], xs[n - 3], xs[n - 2], xs[n - 1]};
    xs.push_back(symbolic_somos_step(w, Direction::forward));
  }
  if (depth < 3) xs.resize(static_cast<std::size_t>(std::max(depth + 1, 0)));
  return xs;
}

LaurentCheckReport verify_laurent_property(int depth, int samples, std::uint64_t rng_seed) {
  LaurentCheckReport rep;
  rep.depth = depth;
  const auto xs = symbolic_orbit(depth);
  bool ok = true;
  for (int n = 0; n < static_cast<int>(xs.size()); ++n) {
    LaurentCheckEntry e;
    e.n = n;
    e.even_terms = xs[n].even.term_count();
    e.odd_terms = xs[n].odd.term_count();
    e.even_clean = even_part_is_clean(xs[n].even);
    e.odd_affine = odd_part_is_affine_linear(xs[n].odd);
    ok = ok && e.even_clean && e.odd_affine;
    rep.entries.push_back(e);
  }

  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> small(-3, 3);
  auto nonzero = [&] {
    int v = 0;
    while (v == 0) v = small(rng);
    return v;
  };
  int attempts = 0;
  while (rep.specializations < samples && attempts < 100 * (samples + 1)) {
    ++attempts;
    Assignment a;
    for (int i = 0; i < 4; ++i) a[i] = Rational(nonzero());
    for (std::size_t i = 4; i < kGenCount; ++i) a[i] = Rational(small(rng));
    if (a[static_cast<int>(Gen::alpha0)].is_zero() && a[static_cast<int>(Gen::beta0)].is_zero()) continue;
    const auto g = [&](Gen x) { return a[static_cast<std::size_t>(x)]; };
    try {
      SomosOrbit orbit(SomosParams({g(Gen::alpha0), g(Gen::alpha1)}, {g(Gen::beta0), g(Gen::beta1)}), 0,
                       {DualScalar(g(Gen::x0), g(Gen::y0)), DualScalar(g(Gen::x1), g(Gen::y1)),
                        DualScalar(g(Gen::x2), g(Gen::y2)), DualScalar(g(Gen::x3), g(Gen::y3))});
      orbit.extend(0, depth);
      ++rep.specializations;
      for (int n = 0; n < static_cast<int>(xs.size()); ++n) {
        if (lp_eval(xs[n], a) != orbit.at(n)) {
          ++rep.specialization_mismatches;
          break;
        }
      }
    } catch (const VanishingEvenPart&) {
      // The numeric orbit hit a zero term; draw another point.
    }
  }
  rep.ok = ok && rep.specializations == samples && rep.specialization_mismatches == 0;
  return rep;
}

}  // namespace dualsomos
