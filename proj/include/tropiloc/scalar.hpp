#pragma once

/**
 * @file scalar.hpp
 * @brief Elements of the (max,+) semifield: the reals plus a bottom element.
 *
 * Operator conventions follow the usual semiring notation:
 *   a + b   is tropical addition      (max, bottom is neutral)
 *   a * b   is tropical multiplication (ordinary +, bottom is absorbing)
 * The tropical one is the real 0.
 */

#include <compare>
#include <iosfwd>
#include <limits>

namespace tropiloc {

class ExtendedScalar {
 public:
  /// Tropical zero.
  constexpr ExtendedScalar() = default;

  /// Finite value; throws DomainError for NaN or infinities.
  explicit ExtendedScalar(double value);

  static constexpr ExtendedScalar bottom() { return ExtendedScalar(); }
  static constexpr ExtendedScalar one() { return ExtendedScalar(Finite{}, 0.0); }

  constexpr bool is_bottom() const { return value_ == kBottom; }
  constexpr bool is_finite() const { return value_ != kBottom; }

  /// The real value; -infinity for bottom.
  constexpr double value() const { return value_; }

  /// Multiplicative inverse (conventional negation). Bottom has none.
  ExtendedScalar inverse() const;

  /// Real power, realized as ordinary scaling of the exponent.
  /// bottom^e is bottom for e > 0 and undefined otherwise.
  ExtendedScalar pow(double exponent) const;

  friend constexpr ExtendedScalar operator+(ExtendedScalar a, ExtendedScalar b) {
    return a.value_ < b.value_ ? b : a;
  }
  friend constexpr ExtendedScalar operator*(ExtendedScalar a, ExtendedScalar b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return ExtendedScalar(Finite{}, a.value_ + b.value_);
  }
  ExtendedScalar& operator+=(ExtendedScalar o) { return *this = *this + o; }
  ExtendedScalar& operator*=(ExtendedScalar o) { return *this = *this * o; }

  friend constexpr bool operator==(ExtendedScalar a, ExtendedScalar b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtendedScalar a, ExtendedScalar b) {
    return a.value_ <=> b.value_;
  }

 private:
  struct Finite {};
  constexpr ExtendedScalar(Finite, double v) : value_(v) {}

  static constexpr double kBottom = -std::numeric_limits<double>::infinity();
  double value_ = kBottom;
};

std::ostream& operator<<(std::ostream& os, ExtendedScalar x);

}  // namespace tropiloc
