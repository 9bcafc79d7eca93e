#pragma once

#include <string>
#include <vector>

#include "hlx/geometry.hpp"

namespace hlx::examples {

// Curated input geometries used by the CLI `example` subcommand, the test
// suite and the convergence studies.  All loops carry small out-of-plane
// tilts so that every coordinate projection is an embedded link.

// Two valid, far-separated circles (spatial distance 5 between centres).
Hyperlink two_circles();

// A two-component hyperlink whose spatial projection is a Hopf link; the
// second loop sits at time 0.5.  Loop 0 is the matter loop, loop 1 geometric.
Hyperlink hopf_pair();
ColoredHyperlink hopf_matter();   // loop 0, colored (1/2, 1/2)
Hyperlink hopf_geometric();       // loop 1

// A rectangle-shaped loop at time -0.25 crossing the plane x1 = 0 once inside
// the disk surface and once far outside: one piercing, lk = +1.
ColoredHyperlink one_piercing();  // colored (1/2, 1/2)

// A circle at time -0.25 crossing the disk twice with opposite orientations:
// two piercings, lk = 0.
Hyperlink cancelling_piercings();

// Two rectangle loops piercing the disk once each, distinct colors
// (1/2, 1/2) and (1, 1/2).
ColoredHyperlink two_loop_colored();

// Disk of radius 2 (24-gon) in the x2-x3 plane, normal along +x1.
PlanarSurface disk_surface();

// Annulus (outer radius 4, hole radius 3): the circles above miss it.
PlanarSurface annulus_surface();

// Bundled example names accepted by write().
const std::vector<std::string>& names();

// Writes the named example's document files into `dir`; returns the paths.
std::vector<std::string> write(const std::string& name, const std::string& dir);

}  // namespace hlx::examples
