#pragma once

#include <cstddef>
#include <cstdint>

#include "tropiloc/instance.hpp"

namespace tropiloc {

struct GeneratorOptions {
  /// Redraw until check_feasibility passes.
  bool require_feasible = true;
  std::size_t max_attempts = 100'000;
};

/// Random instance with every datum a multiple of 0.25: points in [-2, 2],
/// box [f, g] with f in [-3, -1] and g in [1, 3], weights in [0.5, 3],
/// addends in [-1, 1], caps in [2, 6] or absent, and off-diagonal B entries
/// in [-2, 1] or bottom. Planar variants ignore n. Deterministic in seed.
/// Throws ResourceError when no feasible draw is found within max_attempts.
Instance generate_instance(Variant variant, std::size_t n, std::size_t m, std::uint64_t seed,
                           const GeneratorOptions& options = {});

}  // namespace tropiloc
