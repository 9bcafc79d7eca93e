#pragma once

#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// A transverse double point of two loops projected onto the plane Sigma_k.
//
// Sign conventions, with y the first curve and rho the second:
//   orientation = sign [y' x rho']_k   (k-th component of the spatial cross product)
//   height      = sign (y_k - rho_k)   (+1 when the first strand lies above)
//   time_lag    = sign (rho_0 - y_0)   (+1 when the second strand is later)
struct Crossing {
    int plane = 0;        // k in {1,2,3}
    double s = 0.0;       // parameter on the first loop
    double t = 0.0;       // parameter on the second loop
    Vec2 point;           // crossing location in Sigma_k coordinates
    int orientation = 0;  // +-1
    int height = 0;       // +-1
    int time_lag = 0;     // +-1

    int sign_product() const { return orientation * height * time_lag; }
};

// All transverse crossings of the two projected loops in plane k, sorted by
// (s, t).  Throws DegenerateDiagram when a crossing sits within eps_gen of a
// projected segment endpoint, when projected segments overlap, or when any
// sign magnitude falls below tolerance.  eps_gen <= 0 picks the scale default.
std::vector<Crossing> find_crossings(const PLLoop& a, const PLLoop& b, int plane,
                                     double eps_gen = 0.0);

// Hyperlinking number: the sum over the three projection planes of the
// per-crossing products orientation * height * time_lag.
int hyperlinking_number(const PLLoop& a, const PLLoop& b, double eps_gen = 0.0);

// Sum of hyperlinking_number(a, l) over the components of L.
int sk_loop_vs_hyperlink(const PLLoop& a, const Hyperlink& L, double eps_gen = 0.0);

// Smallest distance from any crossing point to a projected segment endpoint
// or to another crossing, over all three planes.  Used by perturbation
// stability tests; infinity when there are no crossings.
double crossing_clearance(const PLLoop& a, const PLLoop& b, double eps_gen = 0.0);

}  // namespace hlx
