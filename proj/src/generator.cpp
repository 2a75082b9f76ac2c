#include "tropiloc/generator.hpp"

#include <random>

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

constexpr double kQuantum = 0.25;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  /// Uniform multiple of kQuantum in [lo, hi].
  double quarter(double lo, double hi) {
    const auto steps = static_cast<int>((hi - lo) / kQuantum);
    return lo + kQuantum * std::uniform_int_distribution<int>(0, steps)(rng_);
  }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T, std::size_t N>
  T pick(const T (&options)[N]) {
    return options[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
  }

 private:
  std::mt19937_64 rng_;
};

std::optional<double> cap(Draw& d) {
  if (d.chance(0.5)) return std::nullopt;
  return d.quarter(2, 6);
}

ChebyshevInstance chebyshev(Draw& d, std::size_t n, std::size_t m) {
  ChebyshevInstance inst;
  inst.n = n;
  inst.points.assign(m, std::vector<double>(n));
  for (auto& p : inst.points) {
    for (double& x : p) x = d.quarter(-2, 2);
  }
  for (std::size_t j = 0; j < m; ++j) {
    inst.weights.push_back(d.quarter(0.5, 3));
    inst.addends.push_back(d.quarter(-1, 1));
    inst.caps.push_back(cap(d));
  }
  for (std::size_t i = 0; i < n; ++i) {
    inst.lower.push_back(d.quarter(-3, -1));
    inst.upper.push_back(d.quarter(1, 3));
  }
  inst.constraints = TropMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i != k && d.chance(0.4)) inst.constraints(i, k) = ExtendedScalar(d.quarter(-2, 1));
    }
  }
  return inst;
}

StripInstance strip(Draw& d, std::size_t m) {
  StripInstance inst;
  for (std::size_t j = 0; j < m; ++j) {
    inst.points.push_back({d.quarter(-2, 2), d.quarter(-2, 2)});
    inst.weights.push_back(d.quarter(0.5, 3));
    inst.addends.push_back(d.quarter(-1, 1));
    inst.caps.push_back(cap(d));
  }
  inst.lower = {d.quarter(-4, -1), d.quarter(-4, -1)};
  inst.upper = {d.quarter(1, 4), d.quarter(1, 4)};
  inst.a = d.quarter(-2, 1);
  inst.b = inst.a + d.quarter(0, 2);
  return inst;
}

Instance draw(Variant variant, std::size_t n, std::size_t m, Draw& d) {
  static constexpr double kScales[] = {-2, -1, -0.5, 0.5, 1, 2};
  static constexpr double kSlopes[] = {-3, -2, 0, 2, 3};
  switch (variant) {
    case Variant::chebyshev:
      return chebyshev(d, n, m);
    case Variant::chebyshev_scaled: {
      ScaledChebyshevInstance inst{chebyshev(d, n, m), {}};
      for (std::size_t i = 0; i < n; ++i) inst.scale.push_back(d.pick(kScales));
      return inst;
    }
    case Variant::rectilinear_strip:
      return strip(d, m);
    case Variant::rectilinear_tilted:
      return TiltedStripInstance{strip(d, m), d.pick(kSlopes)};
  }
  throw ContractViolation("generate_instance: unknown variant");
}

}  // namespace

Instance generate_instance(Variant variant, std::size_t n, std::size_t m, std::uint64_t seed,
                           const GeneratorOptions& options) {
  const bool planar = variant == Variant::rectilinear_strip || variant == Variant::rectilinear_tilted;
  if (!planar && n == 0) throw DimensionError("generate_instance: n must be positive");
  if (m == 0) throw DimensionError("generate_instance: m must be positive");

  Draw d(seed);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    Instance inst = draw(variant, n, m, d);
    if (!options.require_feasible || check_feasibility(inst).feasible()) return inst;
  }
  throw ResourceError("generate_instance: no feasible draw within the attempt limit");
}

}  // namespace tropiloc
