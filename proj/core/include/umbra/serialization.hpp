#pragma once

#include <cstddef>
#include <nlohmann/json.hpp>

#include "umbra/euler.hpp"
#include "umbra/identities.hpp"
#include "umbra/rational.hpp"
#include "umbra/umbral.hpp"

// JSON forms of the library's values. Rationals are always strings in
// canonical "p/q" form, never numbers, so a round trip is exact.
//
//   UmbralSeries     {"h": "p/q", "zeta": ["p/q", ...]}
//   LatticeFunction  {"h": "p/q", "values": ["p/q", ...]}
//   SolutionSpace    {"dimension": d, "free_indices": [...], "basis": [LatticeFunction...],
//                     "diagnostics": ["...", ...]}
//   equation table   {"a": "p/q", "b": "p/q", "rows": [{"n", "c_nm2", "c_nm1", "c_nn"}...]}
//
// Readers throw ParseError on malformed input.
namespace umbra {

nlohmann::json rational_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UmbralSeries& f);
nlohmann::json to_json(const LatticeFunction& u);
nlohmann::json to_json(const SolutionSpace& space);
nlohmann::json to_json(const IndicialData& data);
nlohmann::json to_json(const IdentityReport& report);

// Coefficient rows n = 0..n_max of the discrete equation.
nlohmann::json equation_table_json(const DiscreteEulerEquation& equation, std::size_t n_max);

UmbralSeries umbral_series_from_json(const nlohmann::json& j);
LatticeFunction lattice_function_from_json(const nlohmann::json& j);

}  // namespace umbra
