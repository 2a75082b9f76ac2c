#include "tropiloc/scalar.hpp"

#include <cmath>
#include <ostream>

#include "tropiloc/errors.hpp"

namespace tropiloc {

ExtendedScalar::ExtendedScalar(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw DomainError("ExtendedScalar: finite value required");
  }
}

ExtendedScalar ExtendedScalar::inverse() const {
  if (is_bottom()) throw DomainError("ExtendedScalar: bottom has no inverse");
  return ExtendedScalar(Finite{}, -value_);
}

ExtendedScalar ExtendedScalar::pow(double exponent) const {
  if (!std::isfinite(exponent)) throw DomainError("ExtendedScalar: exponent must be finite");
  if (is_bottom()) {
    if (exponent > 0.0) return bottom();
    throw DomainError("ExtendedScalar: bottom raised to a non-positive power");
  }
  return ExtendedScalar(Finite{}, value_ * exponent);
}

std::ostream& operator<<(std::ostream& os, ExtendedScalar x) {
  if (x.is_bottom()) return os << "-inf";
  return os << x.value();
}

}  // namespace tropiloc
