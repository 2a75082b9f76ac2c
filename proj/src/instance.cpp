#include "tropiloc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tropiloc/errors.hpp"

namespace tropiloc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const ChebyshevInstance* chebyshev_base(const Instance& inst) {
  if (auto* c = std::get_if<ChebyshevInstance>(&inst)) return c;
  if (auto* s = std::get_if<ScaledChebyshevInstance>(&inst)) return &s->base;
  return nullptr;
}

const StripInstance* strip_base(const Instance& inst) {
  if (auto* s = std::get_if<StripInstance>(&inst)) return s;
  if (auto* t = std::get_if<TiltedStripInstance>(&inst)) return &t->base;
  return nullptr;
}

void require_dimension(const Instance& inst, std::span<const double> x) {
  if (x.size() != dimension(inst)) {
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, instance needs " +
                         std::to_string(dimension(inst)));
  }
}

double chebyshev_distance(std::span<const double> x, std::span<const double> p) {
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - p[i]));
  return d;
}

double rectilinear_distance(std::span<const double> x, const Point2& p) {
  return std::abs(x[0] - p[0]) + std::abs(x[1] - p[1]);
}

}  // namespace

Variant variant_of(const Instance& inst) { return static_cast<Variant>(inst.index()); }

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::chebyshev: return "chebyshev";
    case Variant::chebyshev_scaled: return "chebyshev_scaled";
    case Variant::rectilinear_strip: return "rectilinear_strip";
    case Variant::rectilinear_tilted: return "rectilinear_tilted";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (Variant v : {Variant::chebyshev, Variant::chebyshev_scaled, Variant::rectilinear_strip,
                    Variant::rectilinear_tilted}) {
    if (to_string(v) == name) return v;
  }
  throw ValidationError("variant: unknown variant '" + std::string(name) + "'");
}

std::size_t dimension(const Instance& inst) {
  if (auto* c = chebyshev_base(inst)) return c->n;
  return 2;
}

std::size_t point_count(const Instance& inst) {
  if (auto* c = chebyshev_base(inst)) return c->m();
  return strip_base(inst)->m();
}

double max_weight(const Instance& inst) {
  const auto& w = chebyshev_base(inst) ? chebyshev_base(inst)->weights : strip_base(inst)->weights;
  return *std::max_element(w.begin(), w.end());
}

void validate(const Instance& inst) {
  std::visit([](const auto& i) { i.validate(); }, inst);
}

double objective_value(const Instance& inst, std::span<const double> x) {
  require_dimension(inst, x);
  double best = -INFINITY;
  if (auto* c = chebyshev_base(inst)) {
    for (std::size_t j = 0; j < c->m(); ++j) {
      best = std::max(best, c->weights[j] * chebyshev_distance(x, c->points[j]) + c->addends[j]);
    }
    return best;
  }
  const StripInstance* s = strip_base(inst);
  for (std::size_t j = 0; j < s->m(); ++j) {
    best = std::max(best, s->weights[j] * rectilinear_distance(x, s->points[j]) + s->addends[j]);
  }
  return best;
}

double constraint_violation(const Instance& inst, std::span<const double> x) {
  require_dimension(inst, x);
  double worst = 0.0;
  auto excess = [&worst](double lhs, double rhs) { worst = std::max(worst, lhs - rhs); };

  if (auto* c = chebyshev_base(inst)) {
    const auto* scaled = std::get_if<ScaledChebyshevInstance>(&inst);
    auto coef = [scaled](std::size_t i) { return scaled ? scaled->scale[i] : 1.0; };
    for (std::size_t j = 0; j < c->m(); ++j) {
      if (c->caps[j]) excess(chebyshev_distance(x, c->points[j]), *c->caps[j]);
    }
    for (std::size_t i = 0; i < c->n; ++i) {
      excess(c->lower[i], x[i]);
      excess(x[i], c->upper[i]);
      for (std::size_t k = 0; k < c->n; ++k) {
        const ExtendedScalar b = c->constraints(i, k);
        if (b.is_finite()) excess(b.value() + coef(k) * x[k], coef(i) * x[i]);
      }
    }
    return worst;
  }

  const StripInstance* s = strip_base(inst);
  for (std::size_t j = 0; j < s->m(); ++j) {
    if (s->caps[j]) excess(rectilinear_distance(x, s->points[j]), *s->caps[j]);
  }
  const double sum = x[0] + x[1];
  const double diff = x[1] - x[0];
  excess(s->lower[0], sum);
  excess(sum, s->upper[0]);
  excess(s->lower[1], diff);
  excess(diff, s->upper[1]);
  if (auto* t = std::get_if<TiltedStripInstance>(&inst)) {
    excess(s->a + x[1], t->c * x[0]);
    excess(t->c * x[0], s->b + x[1]);
  } else {
    excess(s->a, x[0]);
    excess(x[0], s->b);
  }
  return worst;
}

FeasibilityReport check_feasibility(const Instance& inst) {
  return std::visit([](const auto& i) { return tropiloc::check_feasibility(i); }, inst);
}

SolveResult solve(const Instance& inst) {
  return std::visit(overloaded{
                        [](const ChebyshevInstance& i) { return solve_particular(i); },
                        [](const ScaledChebyshevInstance& i) { return solve_scaled(i); },
                        [](const StripInstance& i) { return solve_strip(i); },
                        [](const TiltedStripInstance& i) { return solve_tilted(i); },
                    },
                    inst);
}

}  // namespace tropiloc
