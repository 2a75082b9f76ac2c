#include "tropiloc/linear.hpp"

#include "tropiloc/errors.hpp"

namespace tropiloc {

TropVector solve_upper(const TropMatrix& a, const TropVector& d) {
  if (a.rows() != d.size()) throw DimensionError("solve_upper: shape mismatch");
  if (a.has_zero_column()) throw DomainError("solve_upper: matrix has a zero column");
  if (!d.is_regular()) throw DomainError("solve_upper: right-hand side must be regular");
  return conjugate_transpose(vec_mat(conjugate_transpose(d), a));
}

FamilyResult solve_fixed_point(const TropMatrix& a, const TropVector& b) {
  if (!a.is_square() || a.rows() != b.size()) {
    throw DimensionError("solve_fixed_point: shape mismatch");
  }
  auto closure = trace_and_closure(a);
  if (!closure.star) return Infeasible{InfeasibleCause::spectral, closure.trace};
  return ParametricFamily{std::move(*closure.star), b, std::nullopt};
}

FamilyResult solve_double(const TropMatrix& a, const TropVector& p, const TropVector& q) {
  if (!a.is_square() || a.rows() != p.size() || p.size() != q.size()) {
    throw DimensionError("solve_double: shape mismatch");
  }
  if (!q.is_regular()) throw DomainError("solve_double: upper bound must be regular");

  auto closure = trace_and_closure(a);
  if (!closure.star) return Infeasible{InfeasibleCause::spectral, closure.trace};

  // A* >= I has no zero column, so residuation against q applies.
  TropVector upper = solve_upper(*closure.star, q);
  if (!leq(p, upper)) {
    ExtendedScalar gap;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > upper[i]) gap += p[i] * upper[i].inverse();
    }
    return Infeasible{InfeasibleCause::bound_conflict, gap};
  }
  return ParametricFamily{std::move(*closure.star), p, std::move(upper)};
}

}  // namespace tropiloc
