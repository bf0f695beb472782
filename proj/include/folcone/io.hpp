#pragma once

// Serialization edge: system files in, reports out. Machine-readable output
// is deterministic (same invocation, same bytes) and parses back to the
// exact in-memory value; rationals travel as "p/q" strings with bare
// integers when the denominator is 1.

#include <array>
#include <string>
#include <vector>

#include "folcone/foliation.hpp"
#include "folcone/orbit.hpp"

namespace folcone {

// ---- system files ------------------------------------------------------------

// Parses the JSON system format:
//   {"rank": 2, "letters": ["a","b"],
//    "transitions": [{"from":"a","to":"a","class":[1,0]}, ...]}
// Malformed JSON raises SyntaxError with line and column; a well-formed
// document with missing or mistyped fields raises SchemaError naming the
// field path (for example "transitions[1].class").
SystemDocument parse_system_text(const std::string& text, const std::string& origin = "input");

// Reads the file and parses it; the document name is the file stem.
SystemDocument parse_system_file(const std::string& path);

// ---- report rendering ----------------------------------------------------------

std::string render_json(const FoliationConeReport& report);
std::string render_json(const RayClassification& cls);
std::string render_json(const ConeFamilyReport& report);
std::string render_json(const ConvergenceReport& report);
std::string render_json(const DiskCheck& check, const FoliationConeReport& report);

FoliationConeReport parse_foliation_report(const std::string& text);
RayClassification parse_ray_classification(const std::string& text);
ConeFamilyReport parse_family_report(const std::string& text);
ConvergenceReport parse_convergence_report(const std::string& text);

std::string render_text(const FoliationConeReport& report);
std::string render_text(const RayClassification& cls);
std::string render_text(const ConeFamilyReport& report);
std::string render_text(const ConvergenceReport& report);
std::string render_text(const DiskCheck& check, const FoliationConeReport& report);

// ---- plane slices ---------------------------------------------------------------

// Intersection of a cone with the plane spanned by two independent vectors,
// described by the boundary ray directions in plane coordinates (s, t),
// ordered counterclockwise from the positive s-axis. The whole plane is the
// single sentinel row "all"; the zero cone has no rows.
struct SlicePlot {
    std::vector<std::array<std::string, 3>> rows; // kind, s, t
};

SlicePlot slice_plot_data(const Cone& cone, const QVec& v1, const QVec& v2);
std::string render_csv(const SlicePlot& plot);

} // namespace folcone
