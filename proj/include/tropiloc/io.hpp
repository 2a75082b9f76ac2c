#pragma once

/**
 * @file io.hpp
 * @brief JSON instance documents, solution output (JSON / CSV / SVG) and
 *        report serialization.
 *
 * Instance schema:
 *   { "variant": "chebyshev", "n": int, "m": int,
 *     "points": [[real]*n]*m, "weights": [real]*m, "addends": [real]*m,
 *     "caps": [real|null]*m (optional), "lower": [real]*n, "upper": [real]*n,
 *     "B": [[real|null]*n]*n }
 * "chebyshev_scaled" adds "c": [real]*n. The rectilinear variants fix
 * n = 2, drop "B" and carry "strip": {"a", "b"} (plus "c" when tilted);
 * their lower/upper bound x1 + x2 and x2 - x1. null in B is bottom.
 */

#include <cstdint>
#include <string>
#include <string_view>

#include "tropiloc/errors.hpp"
#include "tropiloc/instance.hpp"
#include "tropiloc/oracle.hpp"
#include "tropiloc/solution_set.hpp"

namespace tropiloc {

/// Malformed JSON or a schema violation; the message names the field.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

enum class OutputFormat { json, csv, svg };

/// Parses "json", "csv" or "svg".
OutputFormat parse_format(std::string_view name);

struct EmitOptions {
  std::size_t samples = 10;
  std::uint64_t seed = 0;
};

/// Serializes a solved box with sampled members. SVG needs a planar
/// instance (DomainError otherwise).
std::string emit_solution(const SolutionBox& box, const Instance& inst, OutputFormat format,
                          const EmitOptions& options = {});

std::string emit_report(const FeasibilityReport& report);
std::string emit_report(const VerificationReport& report);
std::string emit_report(const OracleResult& result);

}  // namespace tropiloc
