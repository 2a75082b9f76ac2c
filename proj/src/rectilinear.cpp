#include "tropiloc/rectilinear.hpp"

#include <cmath>
#include <string>

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

void require_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) throw ValidationError(field + ": expected a finite number");
}

std::string indexed(const char* name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

TropMatrix strip_matrix(double a, double b) {
  TropMatrix out(2, 2);
  out(0, 1) = ExtendedScalar(2 * a);
  out(1, 0) = ExtendedScalar(-2 * b);
  return out;
}

}  // namespace

Point2 rotate(Point2 x, Direction direction) {
  if (direction == Direction::forward) return {x[0] + x[1], x[1] - x[0]};
  return {(x[0] - x[1]) / 2, (x[0] + x[1]) / 2};
}

void StripInstance::validate() const {
  if (points.empty()) throw ValidationError("points: at least one point required");
  const std::size_t count = m();
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < 2; ++i) require_finite(points[j][i], indexed("points", j) + indexed("", i));
  }
  if (weights.size() != count) throw ValidationError("weights: expected one entry per point");
  if (addends.size() != count) throw ValidationError("addends: expected one entry per point");
  if (caps.size() != count) throw ValidationError("caps: expected one entry per point");
  for (std::size_t j = 0; j < count; ++j) {
    require_finite(weights[j], indexed("weights", j));
    if (weights[j] <= 0) throw ValidationError(indexed("weights", j) + ": must be positive");
    require_finite(addends[j], indexed("addends", j));
    if (caps[j]) {
      require_finite(*caps[j], indexed("caps", j));
      if (*caps[j] <= 0) throw ValidationError(indexed("caps", j) + ": must be positive");
    }
  }
  for (std::size_t i = 0; i < 2; ++i) {
    require_finite(lower[i], indexed("lower", i));
    require_finite(upper[i], indexed("upper", i));
    if (lower[i] > upper[i]) throw ValidationError(indexed("lower", i) + ": exceeds " + indexed("upper", i));
  }
  require_finite(a, "strip.a");
  require_finite(b, "strip.b");
  if (a > b) throw ValidationError("strip.a: exceeds strip.b");
}

void TiltedStripInstance::validate() const {
  base.validate();
  require_finite(c, "strip.c");
  if (c == 1) throw ValidationError("strip.c: must differ from 1 (the strip degenerates)");
  if (c == -1) throw ValidationError("strip.c: must differ from -1 (the rotated x2-x1 scale vanishes)");
}

ChebyshevInstance to_chebyshev(const StripInstance& inst) {
  inst.validate();
  ChebyshevInstance out;
  out.n = 2;
  out.points.reserve(inst.m());
  for (const Point2& p : inst.points) {
    const Point2 o = rotate(p, Direction::forward);
    out.points.push_back({o[0], o[1]});
  }
  out.weights = inst.weights;
  out.addends = inst.addends;
  out.caps = inst.caps;
  out.lower = {inst.lower[0], inst.lower[1]};
  out.upper = {inst.upper[0], inst.upper[1]};
  out.constraints = strip_matrix(inst.a, inst.b);
  return out;
}

ScaledChebyshevInstance to_scaled_chebyshev(const TiltedStripInstance& inst) {
  inst.validate();
  return ScaledChebyshevInstance{to_chebyshev(inst.base), {inst.c - 1, inst.c + 1}};
}

FeasibilityReport check_feasibility(const StripInstance& inst) {
  return check_feasibility(to_chebyshev(inst));
}

FeasibilityReport check_feasibility(const TiltedStripInstance& inst) {
  return check_feasibility(to_scaled_chebyshev(inst));
}

SolveResult solve_strip(const StripInstance& inst) {
  SolveResult result = solve_particular(to_chebyshev(inst));
  if (auto* box = std::get_if<SolutionBox>(&result)) box->transform = Transform::rotate45();
  return result;
}

SolveResult solve_tilted(const TiltedStripInstance& inst) {
  SolveResult result = solve_scaled(to_scaled_chebyshev(inst));
  if (auto* box = std::get_if<SolutionBox>(&result)) {
    box->transform = Transform::rotate_scaled(inst.c - 1, inst.c + 1);
  }
  return result;
}

}  // namespace tropiloc
