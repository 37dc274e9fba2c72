#pragma once

// Curve files and element / ideal literals.
//
// Curve file (JSON):
//   {"p": 3, "m": 1, "label": "...",
//    "model": {"kind": "quadratic", "h": [], "f": [1, 1, 0, 1]}}
// Coefficients are lowest-first. An entry is either a packed integer
// in [0, q) or a list of base-p digits (lowest first).
//
// Literals: integers (mod p), x (alias T), y, g (primitive element of F_q),
// + - * / ^ and parentheses. An ideal literal is a comma-separated list of
// generators, optionally wrapped in parentheses: "(x, 2 + y)".

#include <string>
#include <vector>

#include "json.hpp"

#include "drinfeld/curve.hpp"
#include "drinfeld/ideal.hpp"

namespace drinfeld {

CurveSpec curve_spec_from_json(const nlohmann::json& j);
nlohmann::json curve_spec_to_json(const CurveSpec& spec);
CurveSpec load_curve_spec(const std::string& path);

FFElement parse_element(const CurveModel& m, const std::string& text);
std::vector<FFElement> parse_generators(const CurveModel& m, const std::string& text);
/// Throws ZeroIdeal for the zero ideal.
FracIdeal parse_ideal(const CurveModel& m, const std::string& text);
/// As parse_ideal, but the zero ideal is a ZeroModulus error.
FracIdeal parse_modulus(const CurveModel& m, const std::string& text);

}  // namespace drinfeld
