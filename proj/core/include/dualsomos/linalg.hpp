#pragma once

#include <vector>

#include "dualsomos/rational.hpp"

namespace dualsomos {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
Rational determinant(RationalMatrix m);

}  // namespace dualsomos
