#pragma once

#include <string>

#include "chordatlas/diagram.hpp"
#include "chordatlas/map.hpp"
#include "chordatlas/poly.hpp"
#include "chordatlas/report.hpp"
#include "chordatlas/statistics.hpp"

namespace chordatlas {

// Diagram text form: "0-3 1-5 2-4". JSON form: {"pairs": [[0,3],[1,5],[2,4]]}.
std::string diagram_to_text(const Diagram& d);
std::string diagram_to_json(const Diagram& d);
// Points on a line, chords as arcs above it.
std::string diagram_to_dot(const Diagram& d);
Diagram parse_diagram(const std::string& text);

// JSON form: {"sigma": [...], "alpha": [...], "root": r}. Text form: cycle notation.
std::string map_to_json(const CombMap& m);
std::string map_to_text(const CombMap& m);
// Vertices as nodes with their rotation listed as ports; the dangling root is marked on its vertex.
std::string map_to_dot(const CombMap& m);
CombMap parse_map(const std::string& text);

enum class ObjectKind { Diagram, Map };
// JSON with "sigma" is a map; anything else is read as a diagram.
ObjectKind detect_kind(const std::string& text);

// format: json, dot or arcs-text
std::string export_diagram(const Diagram& d, const std::string& format);
std::string export_map(const CombMap& m, const std::string& format);

std::string profile_to_json(const StatProfile& p);
// {"variables": [...], "coefficients": {"[e1,e2,...]": "num/den"}}, variables sorted by name.
std::string poly_to_json(const Poly& p);
std::string report_to_json(const Report& r);

} // namespace chordatlas
