#pragma once

/**
 * @file rectilinear.hpp
 * @brief Planar minimax location with weighted rectilinear distance.
 *
 * The feasible set is a 45-degree tilted rectangle
 *   f1 <= x1 + x2 <= g1,   f2 <= x2 - x1 <= g2
 * intersected with either a vertical strip a <= x1 <= b or a tilted strip
 * a + x2 <= c x1 <= b + x2. Rotating by 45 degrees turns rectilinear
 * distance into Chebyshev distance, so both problems are solved by the
 * Chebyshev solvers in rotated coordinates.
 */

#include <array>
#include <optional>
#include <vector>

#include "tropiloc/chebyshev.hpp"

namespace tropiloc {

using Point2 = std::array<double, 2>;

enum class Direction { forward, inverse };

/// forward: (x1 + x2, x2 - x1); inverse: ((y1 - y2)/2, (y1 + y2)/2).
Point2 rotate(Point2 x, Direction direction);

struct StripInstance {
  std::vector<Point2> points;
  std::vector<double> weights;
  std::vector<double> addends;
  std::vector<std::optional<double>> caps;
  /// (f1, f2) bound x1 + x2 and x2 - x1 from below.
  Point2 lower{};
  /// (g1, g2) bound x1 + x2 and x2 - x1 from above.
  Point2 upper{};
  double a = 0.0;
  double b = 0.0;

  std::size_t m() const { return points.size(); }
  void validate() const;
};

struct TiltedStripInstance {
  /// The strip bounds a, b now bound c x1 - x2.
  StripInstance base;
  double c = 0.0;

  void validate() const;
};

/// Chebyshev problem in rotated coordinates; B = [[bottom, 2a], [-2b, bottom]].
ChebyshevInstance to_chebyshev(const StripInstance& inst);
/// Scaled Chebyshev problem in rotated coordinates with scale (c - 1, c + 1).
ScaledChebyshevInstance to_scaled_chebyshev(const TiltedStripInstance& inst);

FeasibilityReport check_feasibility(const StripInstance& inst);
FeasibilityReport check_feasibility(const TiltedStripInstance& inst);

SolveResult solve_strip(const StripInstance& inst);
SolveResult solve_tilted(const TiltedStripInstance& inst);

}  // namespace tropiloc
