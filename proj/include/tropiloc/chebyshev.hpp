#pragma once

/**
 * @file chebyshev.hpp
 * @brief Constrained minimax location with weighted Chebyshev distance.
 *
 * Minimize   max_j ( w_j d(x, p_j) + h_j )
 * subject to d(x, p_j) <= d_j                 (capped points only)
 *            b_ik + c_k x_k <= c_i x_i         (finite b_ik)
 *            f <= x <= g
 *
 * The particular problem has c = (1, ..., 1). The optimum theta is
 * evaluated in closed form and all minimizers are returned as a
 * SolutionBox.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "tropiloc/matrix.hpp"
#include "tropiloc/solution_box.hpp"

namespace tropiloc {

struct ChebyshevInstance {
  std::size_t n = 0;
  /// m points, each of length n.
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
  std::vector<double> addends;
  /// One entry per point; nullopt drops the distance cap for that point.
  std::vector<std::optional<double>> caps;
  std::vector<double> lower;
  std::vector<double> upper;
  /// n x n, bottom entries switch the corresponding constraint off.
  TropMatrix constraints;

  std::size_t m() const { return points.size(); }

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

struct ScaledChebyshevInstance {
  ChebyshevInstance base;
  /// Nonzero coefficients c_i.
  std::vector<double> scale;

  void validate() const;
};

/// Lower/upper bound vectors of the parametrized inequality system.
/// q and r depend on theta and are absent when theta is not supplied.
struct BoundVectors {
  TropVector s;
  TropVector t;
  std::optional<TropVector> q;
  std::optional<TropVector> r;
};

BoundVectors assemble_bounds(const ChebyshevInstance& inst, std::optional<double> theta);
BoundVectors assemble_bounds(const ScaledChebyshevInstance& inst, std::optional<double> theta);

FeasibilityReport check_feasibility(const ChebyshevInstance& inst);
FeasibilityReport check_feasibility(const ScaledChebyshevInstance& inst);

/// Optimal value; throws ContractViolation for an infeasible instance.
double compute_theta(const ChebyshevInstance& inst);
double compute_theta_scaled(const ScaledChebyshevInstance& inst);

/// Theta given the closure B* and the (theta-free) bounds s, t. This is the
/// O(m^2 n^2)-bounded part of compute_theta.
double theta_from_closure(const ChebyshevInstance& inst, const TropMatrix& star,
                          const BoundVectors& bounds);
double theta_from_closure_scaled(const ScaledChebyshevInstance& inst, const TropMatrix& star,
                                 const BoundVectors& bounds);

SolveResult solve_particular(const ChebyshevInstance& inst);
SolveResult solve_scaled(const ScaledChebyshevInstance& inst);

}  // namespace tropiloc
