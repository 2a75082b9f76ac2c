#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropiloc/instance.hpp"
#include "tropiloc/solution_box.hpp"

namespace tropiloc {

/// Objective tolerance used by verify().
inline constexpr double kObjectiveTolerance = 1e-9;
/// Arithmetic slack allowed on constraint replay.
inline constexpr double kConstraintSlack = 1e-12;

/// True iff some u in [lower, upper] maps to x. Comparisons in internal
/// coordinates allow a relative tolerance `tol` for the coordinate
/// transform round trip.
bool is_member(const SolutionBox& box, std::span<const double> x, double tol = 1e-9);

/// Deterministic representatives: the vertex u = lower, then u = upper,
/// then k - 2 parameters drawn uniformly per coordinate. Throws DomainError
/// for an empty box or k == 0.
std::vector<std::vector<double>> sample(const SolutionBox& box, std::size_t k, std::uint64_t seed);

struct VerificationReport {
  std::size_t checked_count = 0;
  double max_objective_deviation = 0.0;
  double max_constraint_violation = 0.0;
  bool pass = false;
};

/// Samples k members and replays the objective and every original
/// constraint on each.
VerificationReport verify(const SolutionBox& box, const Instance& inst, std::size_t k,
                          std::uint64_t seed = 0);

}  // namespace tropiloc
