#include "tropiloc/solution_box.hpp"

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

void require_size(std::span<const double> v, std::size_t n) {
  if (v.size() != n) throw DimensionError("Transform: point has wrong dimension");
}

}  // namespace

std::vector<double> Transform::to_original(std::span<const double> internal) const {
  switch (kind) {
    case Kind::identity:
      return {internal.begin(), internal.end()};
    case Kind::scale: {
      require_size(internal, factors.size());
      std::vector<double> x(internal.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = internal[i] / factors[i];
      return x;
    }
    case Kind::rotate45:
      require_size(internal, 2);
      return {(internal[0] - internal[1]) / 2, (internal[0] + internal[1]) / 2};
    case Kind::rotate_scaled: {
      require_size(internal, 2);
      const double y1 = internal[0] / factors[0];
      const double y2 = internal[1] / factors[1];
      return {(y1 - y2) / 2, (y1 + y2) / 2};
    }
  }
  throw ContractViolation("Transform: unknown kind");
}

std::vector<double> Transform::to_internal(std::span<const double> original) const {
  switch (kind) {
    case Kind::identity:
      return {original.begin(), original.end()};
    case Kind::scale: {
      require_size(original, factors.size());
      std::vector<double> z(original.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = factors[i] * original[i];
      return z;
    }
    case Kind::rotate45:
      require_size(original, 2);
      return {original[0] + original[1], original[1] - original[0]};
    case Kind::rotate_scaled:
      require_size(original, 2);
      return {factors[0] * (original[0] + original[1]), factors[1] * (original[1] - original[0])};
  }
  throw ContractViolation("Transform: unknown kind");
}

std::string_view to_string(Transform::Kind kind) {
  switch (kind) {
    case Transform::Kind::identity: return "identity";
    case Transform::Kind::scale: return "scale";
    case Transform::Kind::rotate45: return "rotate45";
    case Transform::Kind::rotate_scaled: return "rotate_scaled";
  }
  return "unknown";
}

std::vector<double> SolutionBox::member(const TropVector& u) const {
  const TropVector z = internal_member(u);
  if (!z.is_regular()) throw DomainError("SolutionBox::member: parameter yields a non-regular point");
  const std::vector<double> values = z.values();
  return transform.to_original(values);
}

}  // namespace tropiloc
