// Command-line front end: solve, check, oracle, verify, gen.
//
// Exit codes: 0 success, 1 parse or validation error, 2 infeasible,
// 3 internal contract violation (including a failed verification).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropiloc/errors.hpp"
#include "tropiloc/generator.hpp"
#include "tropiloc/io.hpp"
#include "tropiloc/oracle.hpp"
#include "tropiloc/solution_set.hpp"

namespace {

using namespace tropiloc;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInfeasible = 2;
constexpr int kContract = 3;

Instance load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::vector<double> parse_point(const std::string& text, std::size_t n, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ValidationError(flag + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.size() != n) {
    throw ValidationError(flag + ": expected " + std::to_string(n) + " comma-separated values");
  }
  return out;
}

/// Bounding box of the instance's own bound constraints.
std::pair<std::vector<double>, std::vector<double>> default_window(const Instance& inst) {
  if (const auto* c = std::get_if<ChebyshevInstance>(&inst)) return {c->lower, c->upper};
  if (const auto* sc = std::get_if<ScaledChebyshevInstance>(&inst)) return {sc->base.lower, sc->base.upper};
  const StripInstance& s = std::holds_alternative<StripInstance>(inst)
                               ? std::get<StripInstance>(inst)
                               : std::get<TiltedStripInstance>(inst).base;
  return {{(s.lower[0] - s.upper[1]) / 2, (s.lower[0] + s.lower[1]) / 2},
          {(s.upper[0] - s.lower[1]) / 2, (s.upper[0] + s.upper[1]) / 2}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot write file");
  out << content;
}

int run_solve(const std::string& file, std::size_t samples, std::uint64_t seed, const std::string& format,
              const std::string& svg_path) {
  const Instance inst = load(file);
  const OutputFormat out = parse_format(format);
  const SolveResult result = solve(inst);
  if (const auto* bad = std::get_if<InfeasibleInstance>(&result)) {
    std::cout << emit_report(bad->report);
    return kInfeasible;
  }
  const auto& box = std::get<SolutionBox>(result);
  const EmitOptions options{samples, seed};
  if (!svg_path.empty()) write_file(svg_path, emit_solution(box, inst, OutputFormat::svg, options));
  std::cout << emit_solution(box, inst, out, options);
  return kOk;
}

int run_check(const std::string& file) {
  const FeasibilityReport report = check_feasibility(load(file));
  std::cout << emit_report(report);
  return report.feasible() ? kOk : kInfeasible;
}

int run_oracle(const std::string& file, const std::string& lo_text, const std::string& hi_text, double step,
               unsigned threads) {
  const Instance inst = load(file);
  auto [lo, hi] = default_window(inst);
  const std::size_t n = dimension(inst);
  if (!lo_text.empty()) lo = parse_point(lo_text, n, "--lo");
  if (!hi_text.empty()) hi = parse_point(hi_text, n, "--hi");
  OracleOptions options;
  options.threads = threads;
  const OracleResult result = grid_minimize(inst, lo, hi, step, options);
  std::cout << emit_report(result);
  return result.feasible() ? kOk : kInfeasible;
}

int run_verify(const std::string& file, std::size_t samples, std::uint64_t seed) {
  const Instance inst = load(file);
  const SolveResult result = solve(inst);
  if (const auto* bad = std::get_if<InfeasibleInstance>(&result)) {
    std::cout << emit_report(bad->report);
    return kInfeasible;
  }
  const VerificationReport report = verify(std::get<SolutionBox>(result), inst, samples, seed);
  std::cout << emit_report(report);
  return report.pass ? kOk : kContract;
}

int run_gen(const std::string& variant, std::size_t n, std::size_t m, std::uint64_t seed) {
  std::cout << emit_instance(generate_instance(parse_variant(variant), n, m, seed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained minimax location solver"};
  app.require_subcommand(1);

  std::string file;
  std::size_t samples = 10;
  std::uint64_t seed = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print its solution set");
  std::string format = "json";
  std::string svg_path;
  solve_cmd->add_option("file", file, "Instance document")->required();
  solve_cmd->add_option("--samples", samples, "Sampled members")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed, "Sampling seed");
  solve_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  solve_cmd->add_option("--svg", svg_path, "Also write an SVG plot to this path");

  auto* check_cmd = app.add_subcommand("check", "Evaluate the feasibility certificates");
  check_cmd->add_option("file", file, "Instance document")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force lattice search");
  std::string lo_text;
  std::string hi_text;
  double step = 0.05;
  unsigned threads = 0;
  oracle_cmd->add_option("file", file, "Instance document")->required();
  oracle_cmd->add_option("--lo", lo_text, "Lower corner, comma-separated (default: instance bounds)");
  oracle_cmd->add_option("--hi", hi_text, "Upper corner, comma-separated (default: instance bounds)");
  oracle_cmd->add_option("--step", step, "Lattice spacing")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

  auto* verify_cmd = app.add_subcommand("verify", "Solve, then replay sampled members");
  verify_cmd->add_option("file", file, "Instance document")->required();
  verify_cmd->add_option("--samples", samples, "Sampled members")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Sampling seed");

  auto* gen_cmd = app.add_subcommand("gen", "Print a random feasible instance");
  std::string variant = "chebyshev";
  std::size_t n = 2;
  std::size_t m = 3;
  gen_cmd->add_option("--variant", variant, "Instance variant");
  gen_cmd->add_option("--n", n, "Dimension (ignored by planar variants)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", m, "Number of points")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*solve_cmd) return run_solve(file, samples, seed, format, svg_path);
    if (*check_cmd) return run_check(file);
    if (*oracle_cmd) return run_oracle(file, lo_text, hi_text, step, threads);
    if (*verify_cmd) return run_verify(file, samples, seed);
    return run_gen(variant, n, m, seed);
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kContract;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kContract;
  }
}
