#pragma once

// Independent reference computations for the test suites. Everything here
// works on plain doubles (-inf as bottom) and avoids the library's own
// matrix routines.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "tropiloc/instance.hpp"
#include "tropiloc/matrix.hpp"

namespace reference {

inline constexpr double kBottom = -std::numeric_limits<double>::infinity();

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const tropiloc::TropMatrix& a) {
  Dense out(a.rows(), std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).value();
  }
  return out;
}

inline tropiloc::TropMatrix from_dense(const Dense& a) {
  tropiloc::TropMatrix out(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != kBottom) out(i, j) = tropiloc::ExtendedScalar(a[i][j]);
    }
  }
  return out;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<double>(m, kBottom));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (a[i][l] == kBottom || b[l][j] == kBottom) continue;
        out[i][j] = std::max(out[i][j], a[i][l] + b[l][j]);
      }
    }
  }
  return out;
}

/// I + A + ... + A^{n-1} by repeated multiplication.
inline Dense power_sum(const Dense& a) {
  const std::size_t n = a.size();
  Dense sum(n, std::vector<double>(n, kBottom));
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = 0;
  Dense power = sum;
  for (std::size_t k = 1; k < n; ++k) {
    power = multiply(power, a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum[i][j] = std::max(sum[i][j], power[i][j]);
    }
  }
  return sum;
}

/// max_k max_i (A^k)_ii for k = 1..n.
inline double trace_of_powers(const Dense& a) {
  double best = kBottom;
  Dense power = a;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, power[i][i]);
    power = multiply(power, a);
  }
  return best;
}

/// Random dyadic value in [lo, hi] with denominator 2^bits; sums and
/// differences of such values are exact in double precision.
inline double dyadic(std::mt19937_64& rng, double lo, double hi, int bits = 3) {
  const double q = std::ldexp(1.0, -bits);
  const auto steps = static_cast<long long>((hi - lo) / q);
  return lo + q * static_cast<double>(std::uniform_int_distribution<long long>(0, steps)(rng));
}

/// Random matrix with bottom entries at probability `sparsity` and
/// finite dyadic entries in [lo, hi].
inline Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double sparsity,
                          double lo, double hi) {
  std::bernoulli_distribution hole(sparsity);
  Dense out(rows, std::vector<double>(cols, kBottom));
  for (auto& row : out) {
    for (double& v : row) {
      if (!hole(rng)) v = dyadic(rng, lo, hi);
    }
  }
  return out;
}

/// Bounding window of the instance's own bound constraints.
inline std::pair<std::vector<double>, std::vector<double>> window(const tropiloc::Instance& inst) {
  using namespace tropiloc;
  if (const auto* c = std::get_if<ChebyshevInstance>(&inst)) return {c->lower, c->upper};
  if (const auto* sc = std::get_if<ScaledChebyshevInstance>(&inst)) return {sc->base.lower, sc->base.upper};
  const StripInstance& s = std::holds_alternative<StripInstance>(inst)
                               ? std::get<StripInstance>(inst)
                               : std::get<TiltedStripInstance>(inst).base;
  return {{(s.lower[0] - s.upper[1]) / 2, (s.lower[0] + s.lower[1]) / 2},
          {(s.upper[0] - s.lower[1]) / 2, (s.upper[0] + s.upper[1]) / 2}};
}

}  // namespace reference
