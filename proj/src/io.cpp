#include "tropiloc/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tropiloc/errors.hpp"

namespace tropiloc {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Parsing

const json& field(const json& obj, const std::string& name, const std::string& path = "") {
  const std::string where = path.empty() ? name : path + "." + name;
  if (!obj.is_object()) throw ParseError((path.empty() ? "document" : path) + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(path + ": expected a finite number");
  return x;
}

std::size_t count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(path + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array(const json& v, const std::string& path, std::size_t expected) {
  if (!v.is_array()) throw ParseError(path + ": expected an array");
  if (v.size() != expected) {
    throw ParseError(path + ": expected " + std::to_string(expected) + " entries, found " +
                     std::to_string(v.size()));
  }
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<double> numbers(const json& v, const std::string& path, std::size_t expected) {
  array(v, path, expected);
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) out.push_back(number(v[i], at(path, i)));
  return out;
}

std::vector<std::optional<double>> parse_caps(const json& doc, std::size_t m) {
  std::vector<std::optional<double>> caps(m);
  auto it = doc.find("caps");
  if (it == doc.end() || it->is_null()) return caps;
  array(*it, "caps", m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(*it)[j].is_null()) caps[j] = number((*it)[j], at("caps", j));
  }
  return caps;
}

ChebyshevInstance parse_chebyshev(const json& doc) {
  ChebyshevInstance inst;
  inst.n = count(field(doc, "n"), "n");
  const std::size_t m = count(field(doc, "m"), "m");
  const json& points = array(field(doc, "points"), "points", m);
  for (std::size_t j = 0; j < m; ++j) inst.points.push_back(numbers(points[j], at("points", j), inst.n));
  inst.weights = numbers(field(doc, "weights"), "weights", m);
  inst.addends = numbers(field(doc, "addends"), "addends", m);
  inst.caps = parse_caps(doc, m);
  inst.lower = numbers(field(doc, "lower"), "lower", inst.n);
  inst.upper = numbers(field(doc, "upper"), "upper", inst.n);

  const json& b = array(field(doc, "B"), "B", inst.n);
  inst.constraints = TropMatrix(inst.n, inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) {
    array(b[i], at("B", i), inst.n);
    for (std::size_t k = 0; k < inst.n; ++k) {
      const json& entry = b[i][k];
      if (entry.is_null()) continue;
      inst.constraints(i, k) = ExtendedScalar(number(entry, at(at("B", i), k)));
    }
  }
  return inst;
}

StripInstance parse_strip(const json& doc) {
  StripInstance inst;
  if (doc.contains("n") && count(doc["n"], "n") != 2) throw ParseError("n: planar variants require n = 2");
  const std::size_t m = count(field(doc, "m"), "m");
  const json& points = array(field(doc, "points"), "points", m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto p = numbers(points[j], at("points", j), 2);
    inst.points.push_back({p[0], p[1]});
  }
  inst.weights = numbers(field(doc, "weights"), "weights", m);
  inst.addends = numbers(field(doc, "addends"), "addends", m);
  inst.caps = parse_caps(doc, m);
  const auto lower = numbers(field(doc, "lower"), "lower", 2);
  const auto upper = numbers(field(doc, "upper"), "upper", 2);
  inst.lower = {lower[0], lower[1]};
  inst.upper = {upper[0], upper[1]};
  const json& strip = field(doc, "strip");
  inst.a = number(field(strip, "a", "strip"), "strip.a");
  inst.b = number(field(strip, "b", "strip"), "strip.b");
  return inst;
}

// ---------------------------------------------------------------------------
// Emission

json scalar_json(ExtendedScalar x) { return x.is_bottom() ? json(nullptr) : json(x.value()); }

json vector_json(const TropVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_json(v[i]));
  return out;
}

json matrix_json(const TropMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(scalar_json(a(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json caps_json(const std::vector<std::optional<double>>& caps) {
  json out = json::array();
  for (const auto& c : caps) out.push_back(c ? json(*c) : json(nullptr));
  return out;
}

bool any_cap(const std::vector<std::optional<double>>& caps) {
  return std::any_of(caps.begin(), caps.end(), [](const auto& c) { return c.has_value(); });
}

json chebyshev_json(const ChebyshevInstance& inst) {
  json doc;
  doc["n"] = inst.n;
  doc["m"] = inst.m();
  doc["points"] = inst.points;
  doc["weights"] = inst.weights;
  doc["addends"] = inst.addends;
  if (any_cap(inst.caps)) doc["caps"] = caps_json(inst.caps);
  doc["lower"] = inst.lower;
  doc["upper"] = inst.upper;
  doc["B"] = matrix_json(inst.constraints);
  return doc;
}

json strip_json(const StripInstance& inst) {
  json doc;
  doc["n"] = 2;
  doc["m"] = inst.m();
  json points = json::array();
  for (const auto& p : inst.points) points.push_back({p[0], p[1]});
  doc["points"] = std::move(points);
  doc["weights"] = inst.weights;
  doc["addends"] = inst.addends;
  if (any_cap(inst.caps)) doc["caps"] = caps_json(inst.caps);
  doc["lower"] = {inst.lower[0], inst.lower[1]};
  doc["upper"] = {inst.upper[0], inst.upper[1]};
  doc["strip"] = {{"a", inst.a}, {"b", inst.b}};
  return doc;
}

std::string full_precision(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// SVG

// a1 x1 + a2 x2 <= rhs
struct HalfPlane {
  double a1, a2, rhs;
};

using Polygon = std::vector<Point2>;

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  const auto value = [&h](const Point2& p) { return h.a1 * p[0] + h.a2 * p[1] - h.rhs; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& cur = poly[i];
    const Point2& next = poly[(i + 1) % poly.size()];
    const double vc = value(cur);
    const double vn = value(next);
    if (vc <= 0) out.push_back(cur);
    if ((vc < 0 && vn > 0) || (vc > 0 && vn < 0)) {
      const double s = vc / (vc - vn);
      out.push_back({cur[0] + s * (next[0] - cur[0]), cur[1] + s * (next[1] - cur[1])});
    }
  }
  return out;
}

void chebyshev_cap_planes(std::vector<HalfPlane>& hs, const std::vector<double>& p, double d) {
  hs.push_back({1, 0, p[0] + d});
  hs.push_back({-1, 0, d - p[0]});
  hs.push_back({0, 1, p[1] + d});
  hs.push_back({0, -1, d - p[1]});
}

void rectilinear_cap_planes(std::vector<HalfPlane>& hs, const Point2& p, double d) {
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) hs.push_back({s1, s2, d + s1 * p[0] + s2 * p[1]});
  }
}

Polygon feasible_polygon(const Instance& inst) {
  std::vector<HalfPlane> hs;
  Polygon start;
  const auto* scaled = std::get_if<ScaledChebyshevInstance>(&inst);
  const ChebyshevInstance* c = scaled ? &scaled->base : std::get_if<ChebyshevInstance>(&inst);
  if (c) {
    start = {{c->lower[0], c->lower[1]},
             {c->upper[0], c->lower[1]},
             {c->upper[0], c->upper[1]},
             {c->lower[0], c->upper[1]}};
    for (std::size_t j = 0; j < c->m(); ++j) {
      if (c->caps[j]) chebyshev_cap_planes(hs, c->points[j], *c->caps[j]);
    }
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        const ExtendedScalar b = c->constraints(i, k);
        if (b.is_bottom() || i == k) continue;
        const double ci = scaled ? scaled->scale[i] : 1.0;
        const double ck = scaled ? scaled->scale[k] : 1.0;
        HalfPlane h{0, 0, -b.value()};
        (k == 0 ? h.a1 : h.a2) += ck;
        (i == 0 ? h.a1 : h.a2) -= ci;
        hs.push_back(h);
      }
    }
  } else {
    const StripInstance& s = std::holds_alternative<StripInstance>(inst)
                                 ? std::get<StripInstance>(inst)
                                 : std::get<TiltedStripInstance>(inst).base;
    const Point2 corners[] = {{s.lower[0], s.lower[1]},
                              {s.upper[0], s.lower[1]},
                              {s.upper[0], s.upper[1]},
                              {s.lower[0], s.upper[1]}};
    for (const auto& y : corners) start.push_back(rotate(y, Direction::inverse));
    for (std::size_t j = 0; j < s.m(); ++j) {
      if (s.caps[j]) rectilinear_cap_planes(hs, s.points[j], *s.caps[j]);
    }
    if (const auto* t = std::get_if<TiltedStripInstance>(&inst)) {
      hs.push_back({-t->c, 1, -s.a});
      hs.push_back({t->c, -1, s.b});
    } else {
      hs.push_back({-1, 0, -s.a});
      hs.push_back({1, 0, s.b});
    }
  }
  Polygon poly = start;
  for (const auto& h : hs) {
    if (poly.empty()) break;
    poly = clip(poly, h);
  }
  return poly;
}

std::string emit_svg(const SolutionBox& box, const Instance& inst,
                     const std::vector<std::vector<double>>& members) {
  if (dimension(inst) != 2) throw DomainError("svg: only planar instances can be drawn");

  std::vector<Point2> points;
  if (const auto* c = std::get_if<ChebyshevInstance>(&inst)) {
    for (const auto& p : c->points) points.push_back({p[0], p[1]});
  } else if (const auto* sc = std::get_if<ScaledChebyshevInstance>(&inst)) {
    for (const auto& p : sc->base.points) points.push_back({p[0], p[1]});
  } else if (const auto* s = std::get_if<StripInstance>(&inst)) {
    points = s->points;
  } else {
    points = std::get<TiltedStripInstance>(inst).base.points;
  }
  const Polygon region = feasible_polygon(inst);
  const std::vector<double> first = box.member(box.lower);
  const std::vector<double> last = box.member(box.upper);

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  auto extend = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& p : points) extend(p[0], p[1]);
  for (const auto& p : region) extend(p[0], p[1]);
  for (const auto& x : members) extend(x[0], x[1]);

  constexpr double kSize = 480;
  constexpr double kMargin = 20;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double unit = (kSize - 2 * kMargin) / span;
  auto sx = [&](double x) { return full_precision(kMargin + (x - xmin) * unit); };
  auto sy = [&](double y) { return full_precision(kSize - kMargin - (y - ymin) * unit); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "  <title>theta = " << full_precision(box.theta) << "</title>\n";
  if (!region.empty()) {
    os << "  <polygon class=\"feasible-region\" fill=\"#dde8f5\" stroke=\"#2a5d9f\" points=\"";
    for (std::size_t i = 0; i < region.size(); ++i) {
      os << (i ? " " : "") << sx(region[i][0]) << ',' << sy(region[i][1]);
    }
    os << "\"/>\n";
  }
  os << "  <line class=\"solution-segment\" stroke=\"#c0392b\" stroke-width=\"2\" x1=\"" << sx(first[0])
     << "\" y1=\"" << sy(first[1]) << "\" x2=\"" << sx(last[0]) << "\" y2=\"" << sy(last[1]) << "\"/>\n";
  for (const auto& x : members) {
    os << "  <circle class=\"solution\" r=\"2.5\" fill=\"#c0392b\" cx=\"" << sx(x[0]) << "\" cy=\""
       << sy(x[1]) << "\"/>\n";
  }
  for (const auto& p : points) {
    os << "  <circle class=\"point\" r=\"4\" fill=\"#222\" cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1])
       << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected an object");
  const json& tag = field(doc, "variant");
  if (!tag.is_string()) throw ParseError("variant: expected a string");

  Instance inst;
  switch (parse_variant(tag.get<std::string>())) {
    case Variant::chebyshev:
      inst = parse_chebyshev(doc);
      break;
    case Variant::chebyshev_scaled: {
      ScaledChebyshevInstance scaled{parse_chebyshev(doc), {}};
      scaled.scale = numbers(field(doc, "c"), "c", scaled.base.n);
      inst = std::move(scaled);
      break;
    }
    case Variant::rectilinear_strip:
      inst = parse_strip(doc);
      break;
    case Variant::rectilinear_tilted: {
      TiltedStripInstance tilted{parse_strip(doc), 0.0};
      tilted.c = number(field(field(doc, "strip"), "c", "strip"), "strip.c");
      inst = std::move(tilted);
      break;
    }
  }
  validate(inst);
  return inst;
}

std::string emit_instance(const Instance& inst) {
  json doc;
  if (const auto* c = std::get_if<ChebyshevInstance>(&inst)) {
    doc = chebyshev_json(*c);
  } else if (const auto* sc = std::get_if<ScaledChebyshevInstance>(&inst)) {
    doc = chebyshev_json(sc->base);
    doc["c"] = sc->scale;
  } else if (const auto* s = std::get_if<StripInstance>(&inst)) {
    doc = strip_json(*s);
  } else {
    const auto& t = std::get<TiltedStripInstance>(inst);
    doc = strip_json(t.base);
    doc["strip"]["c"] = t.c;
  }
  doc["variant"] = std::string(to_string(variant_of(inst)));
  return doc.dump(2) + "\n";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg") return OutputFormat::svg;
  throw ValidationError("format: expected json, csv or svg");
}

std::string emit_solution(const SolutionBox& box, const Instance& inst, OutputFormat format,
                          const EmitOptions& options) {
  if (format == OutputFormat::svg && dimension(inst) != 2) {
    throw DomainError("svg: only planar instances can be drawn");
  }
  const auto members = sample(box, std::max<std::size_t>(options.samples, 1), options.seed);

  switch (format) {
    case OutputFormat::json: {
      json doc;
      doc["variant"] = std::string(to_string(variant_of(inst)));
      doc["theta"] = box.theta;
      doc["generator"] = matrix_json(box.generator);
      doc["u_lower"] = vector_json(box.lower);
      doc["u_upper"] = vector_json(box.upper);
      doc["transform"] = {{"kind", std::string(to_string(box.transform.kind))},
                          {"factors", box.transform.factors}};
      json samples = json::array();
      for (const auto& x : members) samples.push_back({{"x", x}, {"objective", objective_value(inst, x)}});
      doc["samples"] = std::move(samples);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < box.dimension(); ++i) os << 'x' << (i + 1) << ',';
      os << "objective\n";
      for (const auto& x : members) {
        for (double v : x) os << full_precision(v) << ',';
        os << full_precision(objective_value(inst, x)) << '\n';
      }
      return os.str();
    }
    case OutputFormat::svg:
      return emit_svg(box, inst, members);
  }
  throw ContractViolation("emit_solution: unknown format");
}

std::string emit_report(const FeasibilityReport& report) {
  json doc;
  doc["feasible"] = report.feasible();
  doc["spectral_ok"] = report.spectral_ok;
  doc["trace"] = scalar_json(report.trace);
  doc["bounds_ok"] = report.bounds_ok;
  doc["bounds_value"] = report.bounds_value ? scalar_json(*report.bounds_value) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string emit_report(const VerificationReport& report) {
  json doc;
  doc["checked_count"] = report.checked_count;
  doc["max_objective_deviation"] = report.max_objective_deviation;
  doc["max_constraint_violation"] = report.max_constraint_violation;
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

std::string emit_report(const OracleResult& result) {
  json doc;
  doc["feasible"] = result.feasible();
  doc["best_value"] = result.best_value ? json(*result.best_value) : json(nullptr);
  doc["best_points"] = result.best_points;
  doc["grid_step"] = result.grid_step;
  doc["evaluated"] = result.evaluated;
  return doc.dump(2) + "\n";
}

}  // namespace tropiloc
