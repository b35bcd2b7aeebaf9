#pragma once

// Defining-graph files.
//
//   # comment
//   vertex a
//   edge a b 3 >        # a -> b;  '<' b -> a;  '?' wildcard (label 2);  '.' or nothing: undirected
//   rot a: b c d        # cyclic order of neighbours around a
//
// The JSON form mirrors the same fields:
//   {"vertices": ["a", ...],
//    "edges": [{"u": "a", "v": "b", "label": 3, "orientation": ">"}, ...],
//    "rotation": {"a": ["b", "c", "d"], ...}}

#include <string>
#include <string_view>

#include "json.hpp"

#include "artin/presentation.hpp"

namespace artin {

char orientation_marker(Orientation o);

// Throws ParseError with 1-based line and column.
DefiningGraph parse_gamma(std::string_view text);
DefiningGraph parse_gamma_json(const nlohmann::json& j);
// Text or JSON, decided by the first non-blank character.
DefiningGraph parse_gamma_any(std::string_view text);
DefiningGraph load_gamma(const std::string& path);

std::string write_gamma(const DefiningGraph& gamma);
nlohmann::json gamma_to_json(const DefiningGraph& gamma);

}  // namespace artin
