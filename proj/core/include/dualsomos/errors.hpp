#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualsomos {

/// Base of every mathematical failure raised by the library. The CLI maps
/// these to exit code 3; everything else is a usage or internal error.
class MathError : public std::runtime_error {
 public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DUALSOMOS_DEFINE_ERROR(Name)                                      \
  class Name : public MathError {                                         \
   public:                                                                \
    explicit Name(const std::string& what) : MathError(#Name, what) {}    \
  }

/// A dual number with zero even part was used as a divisor.
DUALSOMOS_DEFINE_ERROR(VanishingEvenPart);
DUALSOMOS_DEFINE_ERROR(DivisionByZero);
/// Exact division in the Laurent ring failed.
DUALSOMOS_DEFINE_ERROR(NotDivisible);
DUALSOMOS_DEFINE_ERROR(SingularLeadingCoefficient);
DUALSOMOS_DEFINE_ERROR(SingularCasoratian);
DUALSOMOS_DEFINE_ERROR(ConsistencyError);
DUALSOMOS_DEFINE_ERROR(DegenerateAlpha);
DUALSOMOS_DEFINE_ERROR(SingularCurve);
DUALSOMOS_DEFINE_ERROR(BranchFailure);
DUALSOMOS_DEFINE_ERROR(DomainError);
DUALSOMOS_DEFINE_ERROR(InvalidParams);

#undef DUALSOMOS_DEFINE_ERROR

/// Malformed textual input. Not a MathError: the CLI reports it as a usage
/// error.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dualsomos
