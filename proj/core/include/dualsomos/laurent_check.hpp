#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dualsomos/laurent.hpp"

namespace dualsomos {

/// Symbolic iterates X_0..X_depth of the dual recurrence from the generic seed.
/// Throws NotDivisible if some division leaves the Laurent ring.
std::vector<DualLaurent> symbolic_orbit(int depth);

struct LaurentCheckEntry {
  int n = 0;
  std::size_t even_terms = 0;
  std::size_t odd_terms = 0;
  bool even_clean = false;
  bool odd_affine = false;
};

struct LaurentCheckReport {
  int depth = 0;
  std::vector<LaurentCheckEntry> entries;
  int specializations = 0;
  int specialization_mismatches = 0;
  bool ok = false;
};

/// Builds the symbolic orbit up to depth, checks the membership conditions of
/// every iterate and compares `samples` random small-integer specializations
/// against the exact numeric orbit.
LaurentCheckReport verify_laurent_property(int depth, int samples, std::uint64_t rng_seed);

}  // namespace dualsomos
