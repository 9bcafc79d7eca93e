#pragma once

#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// A positively oriented triangle in the x2-x3 plane.
struct Triangle {
    Vec2 a, b, c;

    double area() const { return 0.5 * cross2(b - a, c - a); }
    Vec2 centroid() const { return (a + b + c) * (1.0 / 3.0); }
    double diameter() const;
    bool intersects_disk(Vec2 center, double radius) const;
};

// Ear-clipping triangulation of every surface component.  Holes are bridged
// into their outer ring first.  All returned triangles have positive area;
// the surface orientation enters downstream through normal_sign.
std::vector<Triangle> triangulate(const PlanarSurface& S);

// Split a triangle into four by edge midpoints.
std::array<Triangle, 4> subdivide(const Triangle& t);

}  // namespace hlx
