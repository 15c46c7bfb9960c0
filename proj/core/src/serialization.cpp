#include "umbra/serialization.hpp"

#include <string>

#include "umbra/errors.hpp"

namespace umbra {
namespace {

using nlohmann::json;

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rational_array_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

const json& require_field(const json& j, const char* field) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(field);
  if (it == j.end()) throw ParseError(std::string("missing field '") + field + "'");
  return *it;
}

Rational positive_spacing(const json& j) {
  Rational h = rational_from_json(require_field(j, "h"));
  if (sgn(h) <= 0) throw ParseError("field 'h' must be positive");
  return h;
}

}  // namespace

json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw ParseError("rationals must be \"p/q\" strings or integers, got " + j.dump());
}

json to_json(const UmbralSeries& f) {
  return json{{"h", to_string(f.h)}, {"zeta", rational_array(f.zeta)}};
}

json to_json(const LatticeFunction& u) {
  return json{{"h", to_string(u.h)}, {"values", rational_array(u.values)}};
}

json to_json(const SolutionSpace& space) {
  json basis = json::array();
  for (const auto& element : space.basis) basis.push_back(to_json(element));
  return json{{"dimension", space.dimension()},
              {"free_indices", space.free_indices},
              {"basis", std::move(basis)},
              {"diagnostics", space.diagnostics}};
}

json to_json(const IndicialData& data) {
  json roots = json::array();
  for (const auto& r : data.roots) {
    roots.push_back(json{{"value", to_string(r.value)}, {"multiplicity", r.multiplicity}});
  }
  return json{{"kind", to_string(data.kind)},
              {"discriminant", to_string(data.discriminant)},
              {"roots", std::move(roots)},
              {"integer_roots", data.integer_roots}};
}

json to_json(const IdentityReport& report) {
  json out{{"identity", report.name},
           {"statement", report.statement},
           {"n_max", report.n_max},
           {"samples", report.samples},
           {"checks", report.checks},
           {"passed", report.passed()},
           {"counterexample", nullptr}};
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    json c{{"n", ce.n}, {"lhs", to_string(ce.lhs)}, {"rhs", to_string(ce.rhs)}};
    if (ce.a) c["a"] = to_string(*ce.a);
    if (ce.b) c["b"] = to_string(*ce.b);
    out["counterexample"] = std::move(c);
  }
  return out;
}

json equation_table_json(const DiscreteEulerEquation& equation, std::size_t n_max) {
  json rows = json::array();
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = equation.coefficients(n);
    rows.push_back(json{{"n", n},
                        {"c_nm2", to_string(c.c_nm2)},
                        {"c_nm1", to_string(c.c_nm1)},
                        {"c_nn", to_string(c.c_nn)}});
  }
  return json{{"a", to_string(equation.problem().a)},
              {"b", to_string(equation.problem().b)},
              {"rows", std::move(rows)}};
}

UmbralSeries umbral_series_from_json(const json& j) {
  return UmbralSeries{rational_array_from_json(require_field(j, "zeta"), "zeta"), positive_spacing(j),
                      DeltaKind::forward};
}

LatticeFunction lattice_function_from_json(const json& j) {
  return LatticeFunction{rational_array_from_json(require_field(j, "values"), "values"),
                         positive_spacing(j)};
}

}  // namespace umbra
