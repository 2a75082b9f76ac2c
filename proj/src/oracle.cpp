#include "tropiloc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

struct Lattice {
  std::vector<double> lo;
  double step = 0;
  std::vector<std::size_t> counts;
  std::size_t total = 1;

  std::size_t dim() const { return counts.size(); }

  // Row-major with the first coordinate outermost, so index order is
  // lexicographic order of the points.
  void point(std::size_t index, std::vector<double>& x) const {
    for (std::size_t d = dim(); d-- > 0;) {
      x[d] = lo[d] + static_cast<double>(index % counts[d]) * step;
      index /= counts[d];
    }
  }
};

Lattice make_lattice(const Instance& inst, std::span<const double> lo, std::span<const double> hi,
                     double step, const OracleOptions& options) {
  const std::size_t n = dimension(inst);
  if (n > 3) throw DomainError("oracle: dimension " + std::to_string(n) + " exceeds 3");
  if (lo.size() != n || hi.size() != n) throw DimensionError("oracle: bounds have wrong dimension");
  if (!(step > 0) || !std::isfinite(step)) throw DomainError("oracle: step must be positive");

  Lattice lat;
  lat.lo.assign(lo.begin(), lo.end());
  lat.step = step;
  for (std::size_t d = 0; d < n; ++d) {
    if (!(lo[d] <= hi[d])) throw DomainError("oracle: lo exceeds hi");
    // Tolerate hi sitting a rounding error below a lattice point.
    const double cells = std::floor((hi[d] - lo[d]) / step + 1e-9);
    if (cells + 1 > static_cast<double>(options.max_points)) {
      throw ResourceError("oracle: lattice exceeds the configured point budget");
    }
    lat.counts.push_back(static_cast<std::size_t>(cells) + 1);
    if (lat.total > options.max_points / lat.counts.back()) {
      throw ResourceError("oracle: lattice exceeds the configured point budget");
    }
    lat.total *= lat.counts.back();
  }
  return lat;
}

unsigned worker_count(const OracleOptions& options, std::size_t total) {
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(1, total / 4096)));
}

struct ChunkResult {
  double best = std::numeric_limits<double>::infinity();
  /// (value, point) pairs within tie slack of `best`, in lattice order.
  std::vector<std::pair<double, std::vector<double>>> points;
  bool truncated = false;
  std::size_t evaluated = 0;
};

// Scans [begin, end). With a fixed threshold, collects points whose value
// is <= threshold; otherwise tracks the running best.
ChunkResult scan(const Instance& inst, const Lattice& lat, std::size_t begin, std::size_t end,
                 const OracleOptions& options, std::optional<double> threshold) {
  ChunkResult out;
  std::vector<double> x(lat.dim());
  for (std::size_t idx = begin; idx < end; ++idx) {
    lat.point(idx, x);
    ++out.evaluated;
    if (constraint_violation(inst, x) > options.feasibility_slack) continue;
    const double value = objective_value(inst, x);
    if (!threshold && value < out.best) {
      out.best = value;
      std::erase_if(out.points, [&](const auto& e) { return e.first > value + options.tie_slack; });
    }
    const double limit = threshold ? *threshold : out.best + options.tie_slack;
    if (value > limit) continue;
    if (out.points.size() < options.max_best_points) {
      out.points.emplace_back(value, x);
    } else {
      out.truncated = true;
    }
  }
  return out;
}

}  // namespace

OracleResult grid_minimize(const Instance& inst, std::span<const double> lo,
                           std::span<const double> hi, double step, const OracleOptions& options) {
  validate(inst);
  const Lattice lat = make_lattice(inst, lo, hi, step, options);
  const unsigned workers = worker_count(options, lat.total);
  const std::size_t chunk = (lat.total + workers - 1) / workers;

  std::vector<std::future<ChunkResult>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(lat.total, w * chunk);
    const std::size_t end = std::min(lat.total, begin + chunk);
    jobs.push_back(std::async(std::launch::async, scan, std::cref(inst), std::cref(lat), begin, end,
                              std::cref(options), std::nullopt));
  }
  std::vector<ChunkResult> parts;
  for (auto& job : jobs) parts.push_back(job.get());

  OracleResult result;
  result.grid_step = step;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& part : parts) {
    result.evaluated += part.evaluated;
    best = std::min(best, part.best);
  }
  if (!std::isfinite(best)) return result;
  result.best_value = best;

  // Chunks are in lattice order, so concatenation keeps lexicographic order.
  const double limit = best + options.tie_slack;
  for (std::size_t w = 0; w < parts.size() && result.best_points.size() < options.max_best_points; ++w) {
    ChunkResult& part = parts[w];
    if (part.best > limit) continue;
    if (part.truncated) {
      // Entries dropped while the chunk's own best was moving may be
      // missing; rebuild the list against the global threshold.
      const std::size_t begin = std::min(lat.total, w * chunk);
      const std::size_t end = std::min(lat.total, begin + chunk);
      part = scan(inst, lat, begin, end, options, limit);
    }
    for (auto& [value, x] : part.points) {
      if (result.best_points.size() >= options.max_best_points) break;
      if (value <= limit) result.best_points.push_back(std::move(x));
    }
  }
  return result;
}

bool grid_feasible(const Instance& inst, std::span<const double> lo, std::span<const double> hi,
                   double step, const OracleOptions& options) {
  validate(inst);
  const Lattice lat = make_lattice(inst, lo, hi, step, options);
  const unsigned workers = worker_count(options, lat.total);
  const std::size_t chunk = (lat.total + workers - 1) / workers;
  std::atomic<bool> found{false};

  auto search = [&](std::size_t begin, std::size_t end) {
    std::vector<double> x(lat.dim());
    for (std::size_t idx = begin; idx < end && !found.load(std::memory_order_relaxed); ++idx) {
      lat.point(idx, x);
      if (constraint_violation(inst, x) <= options.feasibility_slack) found = true;
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(lat.total, w * chunk);
    jobs.push_back(std::async(std::launch::async, search, begin, std::min(lat.total, begin + chunk)));
  }
  for (auto& job : jobs) job.get();
  return found;
}

}  // namespace tropiloc
