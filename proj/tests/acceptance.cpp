// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/builders.hpp"
#include "support/reference.hpp"
#include "tropiloc/generator.hpp"
#include "tropiloc/linear.hpp"
#include "tropiloc/oracle.hpp"
#include "tropiloc/solution_set.hpp"

using namespace tropiloc;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

ExtendedScalar v(double x) { return ExtendedScalar(x); }

// Matrix whose cycle weights are all <= 0: a_ij = pi_i - pi_j + w_ij with
// w_ij <= 0, so every cycle sums to a sum of w's.
TropMatrix potential_matrix(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<double> pi(n);
  for (double& x : pi) x = reference::dyadic(rng, -8, 8);
  std::bernoulli_distribution present(density);
  TropMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (present(rng)) a(i, j) = v(pi[i] - pi[j] + reference::dyadic(rng, -4, 0));
    }
  }
  return a;
}

// --- 1 -------------------------------------------------------------------

Verdict semiring_axioms() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  std::bernoulli_distribution bottom(0.1);
  auto draw = [&] { return bottom(rng) ? ExtendedScalar::bottom() : v(reference::dyadic(rng, -1e6, 1e6, 4)); };
  const ExtendedScalar zero = ExtendedScalar::bottom(), one = ExtendedScalar::one();
  int failures = 0;
  constexpr int kTriples = 10'000;
  for (int t = 0; t < kTriples; ++t) {
    const ExtendedScalar a = draw(), b = draw(), c = draw();
    const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a &&
                    a * b == b * a && a + a == a && a * (b + c) == a * b + a * c &&
                    (b + c) * a == b * a + c * a && a * zero == zero && zero * a == zero && a + zero == a &&
                    a * one == a;
    failures += !ok;
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 5.0,
          fmt("%d triples, %d failures, %.3f s (limit 5 s)", kTriples, failures, elapsed)};
}

// --- 2 -------------------------------------------------------------------

Verdict greatest_solution() {
  std::mt19937_64 rng(2);
  int failures = 0, solutions = 0;
  constexpr int kCases = 1000;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    auto dense = reference::random_dense(rng, rows, cols, 0.4, -8, 8);
    for (std::size_t j = 0; j < cols; ++j) dense[j % rows][j] = reference::dyadic(rng, -8, 8);
    const TropMatrix a = reference::from_dense(dense);
    TropVector d(rows), x(cols);
    for (std::size_t i = 0; i < rows; ++i) d[i] = v(reference::dyadic(rng, -8, 8));
    for (std::size_t k = 0; k < cols; ++k) x[k] = v(reference::dyadic(rng, -16, 4));
    const TropVector bar = solve_upper(a, d);
    const bool solves = leq(mat_vec(a, x), d);
    solutions += solves;
    failures += solves != leq(x, bar) || !leq(mat_vec(a, bar), d);
  }
  return {failures == 0, fmt("%d cases (%d solutions, %d non-solutions), %d mismatches", kCases, solutions,
                             kCases - solutions, failures)};
}

// --- 3 -------------------------------------------------------------------

Verdict closure() {
  std::mt19937_64 rng(3);
  int failures = 0;
  constexpr int kSmall = 500;
  for (int t = 0; t < kSmall; ++t) {
    const std::size_t n = 1 + t % 6;
    const TropMatrix a = potential_matrix(rng, n, 0.6);
    const auto r = trace_and_closure(a);
    failures += !r.star || reference::to_dense(*r.star) != reference::power_sum(reference::to_dense(a));
  }
  const TropMatrix big = potential_matrix(rng, 200, 0.05);
  const auto start = Clock::now();
  const auto r = trace_and_closure(big);
  const double elapsed = seconds_since(start);
  const bool big_ok = r.star && r.trace <= ExtendedScalar::one() &&
                      *r.star == mat_add(TropMatrix::identity(200), mat_mul(big, *r.star));
  return {failures == 0 && big_ok && elapsed < 2.0,
          fmt("%d small matrices, %d mismatches; n=200 closure %.3f s (limit 2 s), fixed point %s", kSmall,
              failures, elapsed, big_ok ? "holds" : "FAILS")};
}

// --- 4 and 5 -------------------------------------------------------------

struct SolverRun {
  int instances = 0;
  int oracle_failures = 0;
  double worst_ratio = 0;  // |theta - grid| / tolerance
  double elapsed = 0;
  int replay_failures = 0;
  double worst_objective = 0;
  double worst_violation = 0;
};

const SolverRun& solver_run() {
  static const SolverRun run = [] {
    SolverRun out;
    constexpr double kStep = 0.05;
    const auto start = Clock::now();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 1 + seed % 3, m = 1 + (seed / 3) % 4;
      const Instance inst = generate_instance(Variant::chebyshev, n, m, 1000 + seed);
      const auto& cheb = std::get<ChebyshevInstance>(inst);
      const SolveResult solved = solve(inst);
      const OracleResult grid = grid_minimize(inst, cheb.lower, cheb.upper, kStep);
      ++out.instances;
      const auto* box = std::get_if<SolutionBox>(&solved);
      const double tol = max_weight(inst) * kStep * static_cast<double>(n);
      if (!box || !grid.feasible() || std::abs(box->theta - *grid.best_value) > tol) {
        ++out.oracle_failures;
        continue;
      }
      out.worst_ratio = std::max(out.worst_ratio, std::abs(box->theta - *grid.best_value) / tol);
      const VerificationReport report = verify(*box, inst, 10, seed);
      out.replay_failures += !report.pass;
      out.worst_objective = std::max(out.worst_objective, report.max_objective_deviation);
      out.worst_violation = std::max(out.worst_violation, report.max_constraint_violation);
    }
    out.elapsed = seconds_since(start);
    return out;
  }();
  return run;
}

Verdict solver_vs_oracle() {
  const SolverRun& r = solver_run();
  return {r.oracle_failures == 0 && r.elapsed < 60.0,
          fmt("%d instances, %d outside L*0.05*n, worst |theta-grid|/tol %.3f, %.2f s (limit 60 s)", r.instances,
              r.oracle_failures, r.worst_ratio, r.elapsed)};
}

Verdict attainment() {
  const SolverRun& r = solver_run();
  return {r.replay_failures == 0 && r.oracle_failures == 0 && r.worst_objective <= kObjectiveTolerance &&
              r.worst_violation <= kConstraintSlack,
          fmt("%d instances x 10 members, %d failing, max |f-theta| %.3g (tol 1e-9), max violation %.3g (tol 1e-12)",
              r.instances - r.oracle_failures, r.replay_failures, r.worst_objective, r.worst_violation)};
}

// --- 6 -------------------------------------------------------------------

Verdict worked_examples() {
  std::vector<std::string> failed;
  auto check = [&failed](const std::string& name, bool ok) {
    if (!ok) failed.push_back(name);
  };
  auto theta_of = [](const Instance& inst) {
    const SolveResult r = solve(inst);
    return std::holds_alternative<SolutionBox>(r) ? std::get<SolutionBox>(r).theta : NAN;
  };
  auto grid_near = [](const Instance& inst, std::vector<double> lo, std::vector<double> hi, double theta) {
    const OracleResult g = grid_minimize(inst, lo, hi, 0.05);
    return g.feasible() && *g.best_value >= theta - 1e-9 && *g.best_value <= theta + max_weight(inst) * 0.1;
  };

  ChebyshevInstance two = builders::chebyshev({{0, 0}, {4, 0}});
  two.caps = {10.0, 10.0};
  two.lower = {-10, -10};
  two.upper = {10, 10};
  check("two-point theta=2", theta_of(two) == 2.0 && grid_near(two, {-10, -10}, {10, 10}, 2.0));
  ChebyshevInstance bound = two;
  bound.upper = {1, 10};
  check("g=(1,10) theta=3", theta_of(bound) == 3.0 && grid_near(bound, {-10, -10}, {1, 10}, 3.0));

  const StripInstance line = builders::strip({{0, 0}, {4, 0}}, 0, 0);
  const SolveResult line_result = solve(line);
  bool unique = std::holds_alternative<SolutionBox>(line_result);
  if (unique) {
    const SolutionBox& box = std::get<SolutionBox>(line_result);
    unique = box.theta == 4.0;
    for (const auto& x : sample(box, 10, 0)) unique = unique && x == std::vector<double>{0, 0};
  }
  check("strip a=b=0 theta=4 at (0,0)", unique && grid_near(line, {-5, -5}, {5, 5}, 4.0));

  const TiltedStripInstance tilted{builders::strip({{0, 0}, {0, 4}}, 0, 0), 2};
  const SolveResult tilted_result = solve(tilted);
  bool at_point = std::holds_alternative<SolutionBox>(tilted_result);
  if (at_point) {
    const SolutionBox& box = std::get<SolutionBox>(tilted_result);
    at_point = box.theta == 3.0;
    for (const auto& x : sample(box, 10, 0)) {
      at_point = at_point && std::abs(x[0] - 1) <= 1e-12 && std::abs(x[1] - 2) <= 1e-12;
    }
  }
  check("tilted c=2 theta=3 at (1,2)", at_point && grid_near(tilted, {-5, -5}, {5, 5}, 3.0));

  std::string detail = "two-point 2, bound 3, strip line 4 at (0,0), tilted 3 at (1,2)";
  for (const auto& f : failed) detail += "; FAILED " + f;
  return {failed.empty(), detail};
}

// --- 7 -------------------------------------------------------------------

Verdict reduction_consistency() {
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto base = std::get<ChebyshevInstance>(
        generate_instance(Variant::chebyshev, 1 + seed % 3, 1 + (seed / 3) % 4, 5000 + seed));
    const SolveResult a = solve_particular(base);
    const SolveResult b = solve_scaled(ScaledChebyshevInstance{base, std::vector<double>(base.n, 1.0)});
    const auto* x = std::get_if<SolutionBox>(&a);
    const auto* y = std::get_if<SolutionBox>(&b);
    mismatches += !x || !y || x->theta != y->theta || x->generator != y->generator || x->lower != y->lower ||
                  x->upper != y->upper;
  }
  std::mt19937_64 rng(7);
  int isometry_failures = 0;
  for (int t = 0; t < 10'000; ++t) {
    const Point2 x{reference::dyadic(rng, -1e3, 1e3, 10), reference::dyadic(rng, -1e3, 1e3, 10)};
    const Point2 p{reference::dyadic(rng, -1e3, 1e3, 10), reference::dyadic(rng, -1e3, 1e3, 10)};
    const Point2 rx = rotate(x, Direction::forward), rp = rotate(p, Direction::forward);
    const double d1 = std::abs(x[0] - p[0]) + std::abs(x[1] - p[1]);
    isometry_failures += d1 != std::max(std::abs(rx[0] - rp[0]), std::abs(rx[1] - rp[1]));
  }
  return {mismatches == 0 && isometry_failures == 0,
          fmt("scaled(c=1) vs particular: 100 instances, %d differ bitwise; isometry: 10000 pairs, %d inexact",
              mismatches, isometry_failures)};
}

// --- 8 -------------------------------------------------------------------

// Breaks a feasible instance: even cases get a positive tropical cycle in
// B, odd cases get two disjoint cap balls.
ChebyshevInstance make_infeasible(ChebyshevInstance inst, std::uint64_t seed) {
  const std::size_t n = inst.n;
  if (seed % 2 == 0) {
    if (n == 1) {
      inst.constraints(0, 0) = v(0.25);
    } else {
      inst.constraints(0, 1) = v(1);
      inst.constraints(1, 0) = v(-0.75);
    }
    return inst;
  }
  if (inst.m() == 1) {
    inst.points.push_back(inst.points[0]);
    inst.weights.push_back(1);
    inst.addends.push_back(0);
    inst.caps.push_back(std::nullopt);
  }
  inst.points[1] = inst.points[0];
  inst.points[1][0] += 1.0;
  inst.caps[0] = 0.25;
  inst.caps[1] = 0.5;
  return inst;
}

Verdict certificates() {
  int disagreements = 0, infeasible = 0, engineered_feasible = 0;
  constexpr int kInstances = 200;
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const std::size_t n = 1 + seed % 3, m = 1 + (seed / 3) % 4;
    auto inst = std::get<ChebyshevInstance>(generate_instance(Variant::chebyshev, n, m, 9000 + seed));
    const bool engineer = seed < kInstances / 2;
    if (engineer) inst = make_infeasible(std::move(inst), seed);
    const bool certified = check_feasibility(inst).feasible();
    infeasible += !certified;
    engineered_feasible += engineer && certified;
    disagreements += certified != grid_feasible(inst, inst.lower, inst.upper, 0.05);
  }
  return {disagreements == 0 && engineered_feasible == 0,
          fmt("%d instances (%d certified infeasible, %d engineered yet feasible), %d disagreements with grid",
              kInstances, infeasible, engineered_feasible, disagreements)};
}

// --- 9 -------------------------------------------------------------------

ChebyshevInstance timing_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ChebyshevInstance inst;
  inst.n = n;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> p(n);
    for (double& x : p) x = reference::dyadic(rng, -4, 4);
    inst.points.push_back(std::move(p));
    inst.weights.push_back(reference::dyadic(rng, 0.5, 3));
    inst.addends.push_back(reference::dyadic(rng, -1, 1));
    inst.caps.push_back(reference::dyadic(rng, 20, 40));
  }
  inst.lower.assign(n, -50);
  inst.upper.assign(n, 50);
  inst.constraints = potential_matrix(rng, n, 0.3);
  return inst;
}

// Seconds per call of theta_from_closure, best of several batches.
double time_theta(std::size_t n, std::size_t m) {
  const ChebyshevInstance inst = timing_instance(n, m, 17 * n + m);
  const TropMatrix star = *trace_and_closure(inst.constraints).star;
  const BoundVectors bounds = assemble_bounds(inst, std::nullopt);
  volatile double sink = 0;
  std::size_t reps = 1;
  for (;;) {
    const auto start = Clock::now();
    for (std::size_t r = 0; r < reps; ++r) sink = sink + theta_from_closure(inst, star, bounds);
    if (seconds_since(start) > 0.02) break;
    reps *= 2;
  }
  double best = INFINITY;
  for (int batch = 0; batch < 5; ++batch) {
    const auto start = Clock::now();
    for (std::size_t r = 0; r < reps; ++r) sink = sink + theta_from_closure(inst, star, bounds);
    best = std::min(best, seconds_since(start) / static_cast<double>(reps));
  }
  return best;
}

double loglog_slope(const std::vector<double>& sizes, const std::vector<double>& times) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(sizes[i]), y = std::log(times[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Verdict theta_scaling() {
  // Quadratic growth with a timing-noise allowance.
  constexpr double kMaxSlope = 2.3;
  const std::vector<double> sizes{10, 20, 40, 80};
  std::vector<double> over_m, over_n;
  for (double s : sizes) over_m.push_back(time_theta(20, static_cast<std::size_t>(s)));
  for (double s : sizes) over_n.push_back(time_theta(static_cast<std::size_t>(s), 20));
  const double slope_m = loglog_slope(sizes, over_m);
  const double slope_n = loglog_slope(sizes, over_n);
  return {slope_m <= kMaxSlope && slope_n <= kMaxSlope,
          fmt("log-log slope in m (n=20) %.2f, in n (m=20) %.2f (limit %.1f); t(80,80 corner) m %.2e s, n %.2e s",
              slope_m, slope_n, kMaxSlope, over_m.back(), over_n.back())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"1 semiring axioms", semiring_axioms},
      {"2 greatest solution of Ax <= d", greatest_solution},
      {"3 closure correctness and speed", closure},
      {"4 Chebyshev solver vs grid oracle", solver_vs_oracle},
      {"5 attainment and feasibility replay", attainment},
      {"6 worked examples", worked_examples},
      {"7 reduction consistency", reduction_consistency},
      {"8 certificate equivalence", certificates},
      {"9 theta scaling", theta_scaling},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict verdict;
    try {
      verdict = run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    failed += !verdict.pass;
    std::printf("%s  [%s] %s\n", verdict.pass ? "PASS" : "FAIL", name, verdict.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
