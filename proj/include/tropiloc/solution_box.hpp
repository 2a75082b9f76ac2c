#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "tropiloc/matrix.hpp"

namespace tropiloc {

/// Maps the solver's internal coordinates back to the caller's coordinates.
struct Transform {
  enum class Kind {
    identity,
    /// internal z_i = c_i x_i
    scale,
    /// internal y = (x1 + x2, x2 - x1)
    rotate45,
    /// internal z_i = c_i y_i with y the rotated point; c = (c1, c2)
    rotate_scaled,
  };

  Kind kind = Kind::identity;
  std::vector<double> factors;

  static Transform identity() { return {}; }
  static Transform scaled(std::vector<double> c) { return {Kind::scale, std::move(c)}; }
  static Transform rotate45() { return {Kind::rotate45, {}}; }
  static Transform rotate_scaled(double c1, double c2) { return {Kind::rotate_scaled, {c1, c2}}; }

  std::vector<double> to_original(std::span<const double> internal) const;
  std::vector<double> to_internal(std::span<const double> original) const;

  friend bool operator==(const Transform&, const Transform&) = default;
};

std::string_view to_string(Transform::Kind kind);

/// The complete optimal set { to_original(generator * u) : lower <= u <= upper }.
struct SolutionBox {
  double theta = 0.0;
  TropMatrix generator;
  TropVector lower;
  TropVector upper;
  Transform transform;

  std::size_t dimension() const { return generator.rows(); }
  bool empty() const { return !leq(lower, upper); }

  TropVector internal_member(const TropVector& u) const { return mat_vec(generator, u); }
  std::vector<double> member(const TropVector& u) const;
};

/// Outcome of the two consistency certificates: Tr(B) <= 0 and t^- B* s <= 0.
struct FeasibilityReport {
  bool spectral_ok = false;
  ExtendedScalar trace;
  bool bounds_ok = false;
  /// t^- B* s; absent when B* does not exist.
  std::optional<ExtendedScalar> bounds_value;

  bool feasible() const { return spectral_ok && bounds_ok; }
};

struct InfeasibleInstance {
  FeasibilityReport report;
};

using SolveResult = std::variant<SolutionBox, InfeasibleInstance>;

}  // namespace tropiloc
