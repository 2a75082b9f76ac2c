#include "tropiloc/solution_set.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tropiloc/errors.hpp"
#include "tropiloc/linear.hpp"

namespace tropiloc {

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool at_most(double a, double b, double tol) { return a <= b || close(a, b, tol); }

}  // namespace

bool is_member(const SolutionBox& box, std::span<const double> x, double tol) {
  if (x.size() != box.dimension()) return false;
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  const std::vector<double> internal = box.transform.to_internal(x);
  const TropVector y = TropVector::from_reals(internal);

  // y lies in the image of the generator iff y = G u_max for the greatest
  // u_max with G u <= y. The candidate is then clipped by the upper bound.
  TropVector u = solve_upper(box.generator, y);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (box.upper[k] < u[k]) u[k] = box.upper[k];
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!at_most(box.lower[k].value(), u[k].value(), tol)) return false;
  }
  const TropVector image = mat_vec(box.generator, u);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!close(image[i].value(), y[i].value(), tol)) return false;
  }
  return true;
}

std::vector<std::vector<double>> sample(const SolutionBox& box, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw DomainError("sample: at least one member requested");
  if (box.empty()) throw DomainError("sample: solution box is empty");

  std::vector<std::vector<double>> out;
  out.reserve(k);
  out.push_back(box.member(box.lower));
  if (k == 1) return out;
  out.push_back(box.member(box.upper));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t draw = 2; draw < k; ++draw) {
    TropVector u(box.lower.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double lo = box.lower[i].value();
      const double hi = box.upper[i].value();
      u[i] = ExtendedScalar(std::clamp(lo + unit(rng) * (hi - lo), lo, hi));
    }
    out.push_back(box.member(u));
  }
  return out;
}

VerificationReport verify(const SolutionBox& box, const Instance& inst, std::size_t k,
                          std::uint64_t seed) {
  VerificationReport report;
  for (const auto& x : sample(box, k, seed)) {
    ++report.checked_count;
    report.max_objective_deviation =
        std::max(report.max_objective_deviation, std::abs(objective_value(inst, x) - box.theta));
    report.max_constraint_violation =
        std::max(report.max_constraint_violation, constraint_violation(inst, x));
  }
  report.pass = report.max_objective_deviation <= kObjectiveTolerance &&
                report.max_constraint_violation <= kConstraintSlack;
  return report;
}

}  // namespace tropiloc
