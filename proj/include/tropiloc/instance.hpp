#pragma once

#include <span>
#include <string_view>
#include <variant>

#include "tropiloc/chebyshev.hpp"
#include "tropiloc/rectilinear.hpp"

namespace tropiloc {

using Instance =
    std::variant<ChebyshevInstance, ScaledChebyshevInstance, StripInstance, TiltedStripInstance>;

enum class Variant { chebyshev, chebyshev_scaled, rectilinear_strip, rectilinear_tilted };

Variant variant_of(const Instance& inst);
std::string_view to_string(Variant v);
/// Throws ValidationError for an unknown name.
Variant parse_variant(std::string_view name);

/// Dimension of the location space (n, or 2 for the planar variants).
std::size_t dimension(const Instance& inst);
std::size_t point_count(const Instance& inst);
double max_weight(const Instance& inst);

void validate(const Instance& inst);

/// max_j (w_j d(x, p_j) + h_j) with the variant's metric, in the caller's
/// coordinates.
double objective_value(const Instance& inst, std::span<const double> x);

/// Largest amount by which x violates any constraint of the instance
/// (0 when x is feasible). Evaluated directly from the original data.
double constraint_violation(const Instance& inst, std::span<const double> x);

FeasibilityReport check_feasibility(const Instance& inst);
SolveResult solve(const Instance& inst);

}  // namespace tropiloc
