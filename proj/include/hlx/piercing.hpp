#pragma once

#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// A transverse intersection of a spatially projected loop with the planar
// surface S (embedded at x0 = 0, x1 = 0).
//
//   orientation = sign(rho_1' * J_23)          (loop crosses along +-normal)
//   height      = +1 if rho_0 < 0 at the piercing, -1 if rho_0 > 0
//   epsilon     = orientation * height         (algebraic piercing number)
struct Piercing {
    int loop_index = 0;
    double s = 0.0;
    Vec2 point;           // (x2, x3) location in the surface plane
    int orientation = 0;  // +-1
    int height = 0;       // +-1

    int epsilon() const { return orientation * height; }
};

// Piercings of one loop through S, sorted by s.  Throws DegeneratePiercing
// when a plane crossing lands within eps_gen of a polygon boundary or a
// segment endpoint, when a segment lies in the plane x1 = 0, when the loop
// comes within eps_gen of {0} x S, or when rho_0 vanishes at a piercing.
std::vector<Piercing> find_piercings(const PLLoop& l, const PlanarSurface& S,
                                     double eps_gen = 0.0);

// Piercings of every component, loop_index set, sorted by (loop, s).
std::vector<Piercing> find_piercings(const Hyperlink& L, const PlanarSurface& S,
                                     double eps_gen = 0.0);

// lk(l, S): sum of algebraic piercing numbers.
int linking_number_surface(const PLLoop& l, const PlanarSurface& S, double eps_gen = 0.0);

int piercing_count(const PLLoop& l, const PlanarSurface& S, double eps_gen = 0.0);

// lk(L, S): component-wise sum.
int hyperlink_lk(const Hyperlink& L, const PlanarSurface& S, double eps_gen = 0.0);

// ---------------------------------------------------------------------------
// Surface partition by representation class
// ---------------------------------------------------------------------------
//
// The partition of S into class regions S_v is realised as an assignment of
// surface points to classes: a disk around each piercing belongs to the class
// of its loop, the remainder of S to class 0.  Disk radii default to half the
// minimum pairwise piercing distance, capped by the distance to the surface
// boundary; `scale` in (0,1] shrinks them uniformly (any admissible choice
// yields the same kappa -> infinity limit).
struct SurfacePartition {
    struct Disk {
        Vec2 center;
        double radius = 0.0;
        int class_index = 0;
    };
    std::vector<Disk> disks;
    int class_count = 1;

    int class_at(Vec2 p) const {
        for (const Disk& d : disks) {
            if ((p - d.center).norm2() <= d.radius * d.radius) return d.class_index;
        }
        return 0;
    }
};

SurfacePartition make_surface_partition(const std::vector<Piercing>& piercings,
                                        const std::vector<int>& loop_class,
                                        const PlanarSurface& S, int class_count,
                                        double scale = 1.0);

}  // namespace hlx
