#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force lattice search over the true objective and the true
 *        constraints. Independent of the algebraic solvers; used to cross-check
 *        them on small instances.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropiloc/instance.hpp"

namespace tropiloc {

struct OracleOptions {
  /// Upper limit on the number of lattice points.
  std::size_t max_points = 50'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Constraint replay slack.
  double feasibility_slack = 1e-12;
  /// Points within this distance of the best value are reported.
  double tie_slack = 1e-9;
  /// At most this many best points are kept (lexicographically first).
  std::size_t max_best_points = 64;
};

struct OracleResult {
  /// Absent when no lattice point is feasible.
  std::optional<double> best_value;
  std::vector<std::vector<double>> best_points;
  double grid_step = 0.0;
  std::size_t evaluated = 0;

  bool feasible() const { return best_value.has_value(); }
};

/// Minimizes the objective over the lattice lo + step * Z^n clipped to
/// [lo, hi]. Dimension is limited to 3.
OracleResult grid_minimize(const Instance& inst, std::span<const double> lo,
                           std::span<const double> hi, double step, const OracleOptions& options = {});

/// True iff some lattice point satisfies every constraint.
bool grid_feasible(const Instance& inst, std::span<const double> lo, std::span<const double> hi,
                   double step, const OracleOptions& options = {});

}  // namespace tropiloc
