#include "tropiloc/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tropiloc/errors.hpp"
#include "tropiloc/linear.hpp"

namespace tropiloc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

void require_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) throw ValidationError(field + ": expected a finite number");
}

std::string indexed(const char* name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

// Closure of B plus the theta-free bounds and the two certificates.
struct Prepared {
  FeasibilityReport report;
  std::optional<TropMatrix> star;
  BoundVectors bounds;
};

template <typename Instance>
Prepared prepare(const Instance& inst, const TropMatrix& constraints) {
  Prepared out;
  out.bounds = assemble_bounds(inst, std::nullopt);
  auto closure = trace_and_closure(constraints);
  out.report.trace = closure.trace;
  out.report.spectral_ok = closure.star.has_value();
  if (closure.star) {
    const ExtendedScalar value =
        dot(conjugate_transpose(out.bounds.t), mat_vec(*closure.star, out.bounds.s));
    out.report.bounds_value = value;
    out.report.bounds_ok = value <= ExtendedScalar::one();
    out.star = std::move(closure.star);
  }
  return out;
}

// Parameter box for B y + lower <= y <= upper. The certificates guarantee
// the exact box is nonempty; an inversion of a few ulps produced by the
// rounded theta is closed by lifting the upper bound.
SolutionBox make_box(const TropMatrix& constraints, const TropMatrix& star, const TropVector& lower,
                     const TropVector& upper, double theta, double min_weight,
                     Transform transform) {
  FamilyResult family = solve_double(constraints, lower, upper);
  if (auto* fam = std::get_if<ParametricFamily>(&family)) {
    return SolutionBox{theta, std::move(fam->generator), std::move(fam->lower),
                       std::move(*fam->upper), std::move(transform)};
  }
  const auto& failure = std::get<Infeasible>(family);
  if (failure.cause == InfeasibleCause::spectral) {
    throw ContractViolation("solver: constraint matrix lost its closure");
  }

  TropVector hi = solve_upper(star, upper);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (lower[k] <= hi[k]) continue;
    const double lo_v = lower[k].value();
    const double hi_v = hi[k].value();
    const double magnitude =
        std::max({1.0, std::abs(lo_v), std::abs(hi_v), std::abs(theta) / min_weight});
    if (lo_v - hi_v > 1e-10 * magnitude) {
      throw ContractViolation("solver: parameter box empty at the computed optimum (gap " +
                              std::to_string(lo_v - hi_v) + ")");
    }
    hi[k] = lower[k];
  }
  return SolutionBox{theta, star, lower, std::move(hi), std::move(transform)};
}

double min_weight(const ChebyshevInstance& inst) {
  return *std::min_element(inst.weights.begin(), inst.weights.end());
}

TropVector lower_bound(const BoundVectors& b) { return vec_add(*b.q, b.s); }

TropVector upper_bound(const BoundVectors& b) {
  TropVector out(b.t.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (*b.r)[i] <= b.t[i] ? (*b.r)[i] : b.t[i];
  }
  return out;
}

}  // namespace

void ChebyshevInstance::validate() const {
  if (n == 0) throw ValidationError("n: dimension must be at least 1");
  if (points.empty()) throw ValidationError("points: at least one point required");
  const std::size_t count = m();
  for (std::size_t j = 0; j < count; ++j) {
    if (points[j].size() != n) {
      throw ValidationError(indexed("points", j) + ": expected " + std::to_string(n) + " coordinates");
    }
    for (std::size_t i = 0; i < n; ++i) {
      require_finite(points[j][i], indexed("points", j) + indexed("", i));
    }
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
  if (lower.size() != n) throw ValidationError("lower: expected " + std::to_string(n) + " entries");
  if (upper.size() != n) throw ValidationError("upper: expected " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i) {
    require_finite(lower[i], indexed("lower", i));
    require_finite(upper[i], indexed("upper", i));
    if (lower[i] > upper[i]) {
      throw ValidationError(indexed("lower", i) + ": exceeds " + indexed("upper", i));
    }
  }
  if (constraints.rows() != n || constraints.cols() != n) {
    throw ValidationError("B: expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
}

void ScaledChebyshevInstance::validate() const {
  base.validate();
  if (scale.size() != base.n) {
    throw ValidationError("c: expected " + std::to_string(base.n) + " entries");
  }
  for (std::size_t i = 0; i < scale.size(); ++i) {
    require_finite(scale[i], indexed("c", i));
    if (scale[i] == 0) throw ValidationError(indexed("c", i) + ": must be nonzero");
  }
}

BoundVectors assemble_bounds(const ChebyshevInstance& inst, std::optional<double> theta) {
  const std::size_t n = inst.n;
  BoundVectors out{TropVector(n), TropVector(n), std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    double s = inst.lower[i];
    double t = inst.upper[i];
    for (std::size_t j = 0; j < inst.m(); ++j) {
      if (!inst.caps[j]) continue;
      s = std::max(s, inst.points[j][i] - *inst.caps[j]);
      t = std::min(t, inst.points[j][i] + *inst.caps[j]);
    }
    out.s[i] = ExtendedScalar(s);
    out.t[i] = ExtendedScalar(t);
  }
  if (theta) {
    TropVector q(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
      double qi = kNegInf;
      double ri = kPosInf;
      for (std::size_t j = 0; j < inst.m(); ++j) {
        qi = std::max(qi, (inst.addends[j] - *theta) / inst.weights[j] + inst.points[j][i]);
        ri = std::min(ri, (*theta - inst.addends[j]) / inst.weights[j] + inst.points[j][i]);
      }
      q[i] = ExtendedScalar(qi);
      r[i] = ExtendedScalar(ri);
    }
    out.q = std::move(q);
    out.r = std::move(r);
  }
  return out;
}

BoundVectors assemble_bounds(const ScaledChebyshevInstance& inst, std::optional<double> theta) {
  const ChebyshevInstance& base = inst.base;
  const std::size_t n = base.n;
  BoundVectors out{TropVector(n), TropVector(n), std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < n; ++i) {
    const double c = inst.scale[i];
    const double ac = std::abs(c);
    double s = std::min(c * base.lower[i], c * base.upper[i]);
    double t = std::max(c * base.lower[i], c * base.upper[i]);
    for (std::size_t j = 0; j < base.m(); ++j) {
      if (!base.caps[j]) continue;
      s = std::max(s, c * base.points[j][i] - ac * *base.caps[j]);
      t = std::min(t, c * base.points[j][i] + ac * *base.caps[j]);
    }
    out.s[i] = ExtendedScalar(s);
    out.t[i] = ExtendedScalar(t);
  }
  if (theta) {
    TropVector q(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double c = inst.scale[i];
      const double ac = std::abs(c);
      double qi = kNegInf;
      double ri = kPosInf;
      for (std::size_t j = 0; j < base.m(); ++j) {
        qi = std::max(qi, ac * ((base.addends[j] - *theta) / base.weights[j]) + c * base.points[j][i]);
        ri = std::min(ri, ac * ((*theta - base.addends[j]) / base.weights[j]) + c * base.points[j][i]);
      }
      q[i] = ExtendedScalar(qi);
      r[i] = ExtendedScalar(ri);
    }
    out.q = std::move(q);
    out.r = std::move(r);
  }
  return out;
}

FeasibilityReport check_feasibility(const ChebyshevInstance& inst) {
  inst.validate();
  return prepare(inst, inst.constraints).report;
}

FeasibilityReport check_feasibility(const ScaledChebyshevInstance& inst) {
  inst.validate();
  return prepare(inst, inst.base.constraints).report;
}

double theta_from_closure(const ChebyshevInstance& inst, const TropMatrix& star,
                          const BoundVectors& bounds) {
  const std::size_t n = inst.n;
  const std::size_t m = inst.m();
  const auto& p = inst.points;
  const auto& w = inst.weights;
  const auto& h = inst.addends;

  // star_p[l] = B* p_l and star_s = B* s, as plain reals (B* has a zero
  // diagonal, so both are regular).
  std::vector<std::vector<double>> star_p(m, std::vector<double>(n, kNegInf));
  std::vector<double> star_s(n, kNegInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExtendedScalar b = star(i, k);
      if (b.is_bottom()) continue;
      for (std::size_t l = 0; l < m; ++l) star_p[l][i] = std::max(star_p[l][i], b.value() + p[l][k]);
      star_s[i] = std::max(star_s[i], b.value() + bounds.s[k].value());
    }
  }

  double theta = kNegInf;
  for (std::size_t j = 0; j < m; ++j) {
    // h_j (p_j^- B* s)^{w_j}
    double lower_term = kNegInf;
    // h_j (t^- B* p_j)^{w_j}
    double upper_term = kNegInf;
    for (std::size_t i = 0; i < n; ++i) {
      lower_term = std::max(lower_term, star_s[i] - p[j][i]);
      upper_term = std::max(upper_term, star_p[j][i] - bounds.t[i].value());
    }
    theta = std::max(theta, h[j] + w[j] * lower_term);
    theta = std::max(theta, h[j] + w[j] * upper_term);

    for (std::size_t l = 0; l < m; ++l) {
      double spread = kNegInf;  // p_j^- B* p_l
      for (std::size_t i = 0; i < n; ++i) spread = std::max(spread, star_p[l][i] - p[j][i]);
      const double mix = (w[l] * h[j] + w[j] * h[l]) / (w[l] + w[j]);
      const double rate = (w[j] * w[l]) / (w[j] + w[l]);
      theta = std::max(theta, mix + rate * spread);
    }
  }
  return theta;
}

double theta_from_closure_scaled(const ScaledChebyshevInstance& inst, const TropMatrix& star,
                                 const BoundVectors& bounds) {
  const ChebyshevInstance& base = inst.base;
  const std::size_t n = base.n;
  const std::size_t m = base.m();
  const auto& w = base.weights;
  const auto& h = base.addends;
  const auto& c = inst.scale;

  // cp[j][i] = c_i p_ij
  std::vector<std::vector<double>> cp(m, std::vector<double>(n));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) cp[j][i] = c[i] * base.points[j][i];
  }

  double theta = kNegInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = std::abs(c[i]);
    for (std::size_t k = 0; k < n; ++k) {
      const ExtendedScalar b = star(i, k);
      if (b.is_bottom()) continue;
      const double bik = b.value();
      const double ak = std::abs(c[k]);
      for (std::size_t j = 0; j < m; ++j) {
        theta = std::max(theta, h[j] + (w[j] / ai) * ((bik + bounds.s[k].value()) - cp[j][i]));
        for (std::size_t l = 0; l < m; ++l) {
          const double mix = (ai * w[l] * h[j] + ak * w[j] * h[l]) / (ai * w[l] + ak * w[j]);
          const double rate = (w[j] * w[l]) / (ak * w[j] + ai * w[l]);
          theta = std::max(theta, mix + rate * ((bik + cp[l][k]) - cp[j][i]));
        }
      }
      for (std::size_t l = 0; l < m; ++l) {
        theta = std::max(theta, h[l] + (w[l] / ak) * ((bik + cp[l][k]) - bounds.t[i].value()));
      }
    }
  }
  return theta;
}

double compute_theta(const ChebyshevInstance& inst) {
  inst.validate();
  Prepared prep = prepare(inst, inst.constraints);
  if (!prep.report.feasible()) throw ContractViolation("compute_theta: instance is infeasible");
  return theta_from_closure(inst, *prep.star, prep.bounds);
}

double compute_theta_scaled(const ScaledChebyshevInstance& inst) {
  inst.validate();
  Prepared prep = prepare(inst, inst.base.constraints);
  if (!prep.report.feasible()) throw ContractViolation("compute_theta_scaled: instance is infeasible");
  return theta_from_closure_scaled(inst, *prep.star, prep.bounds);
}

SolveResult solve_particular(const ChebyshevInstance& inst) {
  inst.validate();
  Prepared prep = prepare(inst, inst.constraints);
  if (!prep.report.feasible()) return InfeasibleInstance{prep.report};
  const double theta = theta_from_closure(inst, *prep.star, prep.bounds);
  const BoundVectors bounds = assemble_bounds(inst, theta);
  return make_box(inst.constraints, *prep.star, lower_bound(bounds), upper_bound(bounds), theta,
                  min_weight(inst), Transform::identity());
}

SolveResult solve_scaled(const ScaledChebyshevInstance& inst) {
  inst.validate();
  Prepared prep = prepare(inst, inst.base.constraints);
  if (!prep.report.feasible()) return InfeasibleInstance{prep.report};
  const double theta = theta_from_closure_scaled(inst, *prep.star, prep.bounds);
  const BoundVectors bounds = assemble_bounds(inst, theta);
  return make_box(inst.base.constraints, *prep.star, lower_bound(bounds), upper_bound(bounds), theta,
                  min_weight(inst.base), Transform::scaled(inst.scale));
}

}  // namespace tropiloc
