#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hlx/diagram.hpp"
#include "hlx/geometry.hpp"
#include "hlx/kappa.hpp"
#include "hlx/piercing.hpp"

namespace hlx {

// Structured text documents, one object per file.  Numbers are decimal with
// round-trip precision.
//
//   hyperlink: { "loops": [ { "name": ..., "vertices": [[x0,x1,x2,x3], ...] } ] }
//   colored hyperlink: adds "colors": [ { "jplus": j, "jminus": j }, ... ]
//   surface: { "components": [ { "outer": [[x2,x3],...], "holes": [...] } ],
//              "normal_sign": +-1 }

nlohmann::json to_json(const Hyperlink& h);
nlohmann::json to_json(const ColoredHyperlink& h);
nlohmann::json to_json(const PlanarSurface& s);

Hyperlink hyperlink_from_json(const nlohmann::json& j);
ColoredHyperlink colored_hyperlink_from_json(const nlohmann::json& j);
PlanarSurface surface_from_json(const nlohmann::json& j);

// File helpers; throw DocumentError with a line/field diagnostic.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

Hyperlink read_hyperlink(const std::string& path);
ColoredHyperlink read_colored_hyperlink(const std::string& path);
PlanarSurface read_surface(const std::string& path);

// CSV tables.
void write_crossings_csv(std::ostream& os, const std::vector<Crossing>& crossings);
void write_piercings_csv(std::ostream& os, const std::vector<Piercing>& piercings);
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace hlx
