#pragma once

namespace dualsomos {

/// Forward computes the term after a window of four, backward the term before.
enum class Direction { forward, backward };

}  // namespace dualsomos
