#pragma once

/**
 * @file linear.hpp
 * @brief Complete solutions of the tropical inequalities A x <= d,
 *        A x + b <= x, and A x + p <= x <= q.
 */

#include <optional>
#include <variant>

#include "tropiloc/matrix.hpp"

namespace tropiloc {

/// All vectors generator * u with lower <= u <= upper (upper side vacuous
/// when absent).
struct ParametricFamily {
  TropMatrix generator;
  TropVector lower;
  std::optional<TropVector> upper;

  bool empty() const { return upper && !leq(lower, *upper); }
  TropVector member(const TropVector& u) const { return mat_vec(generator, u); }
};

enum class InfeasibleCause {
  /// Tr(A) > 0: the homogeneous part has no regular solution.
  spectral,
  /// The lower bound exceeds the residuated upper bound.
  bound_conflict,
};

struct Infeasible {
  InfeasibleCause cause;
  /// Tr(A) for spectral failures; the largest (lower - upper) gap otherwise.
  ExtendedScalar witness;
};

using FamilyResult = std::variant<ParametricFamily, Infeasible>;

/// Greatest solution of A x <= d, i.e. (d^- A)^-. Every x <= result solves
/// the inequality and nothing else does. A must have no zero column and d
/// must be regular (DomainError otherwise).
TropVector solve_upper(const TropMatrix& a, const TropVector& d);

/// Regular solutions of A x + b <= x: x = A* u, u >= b when Tr(A) <= 0.
FamilyResult solve_fixed_point(const TropMatrix& a, const TropVector& b);

/// Solutions of A x + p <= x <= q for regular q: x = A* u with
/// p <= u <= (q^- A*)^-. Entries of p may be bottom.
FamilyResult solve_double(const TropMatrix& a, const TropVector& p, const TropVector& q);

}  // namespace tropiloc
