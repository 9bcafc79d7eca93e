#include "hlx/surface_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hlx {

double Triangle::diameter() const {
    return std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
}

bool Triangle::intersects_disk(Vec2 center, double radius) const {
    // Inside test or edge-distance test.
    auto side = [&](Vec2 p, Vec2 q) { return cross2(q - p, center - p); };
    if (side(a, b) >= 0 && side(b, c) >= 0 && side(c, a) >= 0) return true;
    auto edge_dist = [&](Vec2 p, Vec2 q) {
        const Vec2 d = q - p;
        const double l2 = d.norm2();
        const double t = l2 > 0 ? std::clamp((center - p).dot(d) / l2, 0.0, 1.0) : 0.0;
        return (center - (p + d * t)).norm();
    };
    return std::min({edge_dist(a, b), edge_dist(b, c), edge_dist(c, a)}) <= radius;
}

std::array<Triangle, 4> subdivide(const Triangle& t) {
    const Vec2 ab = (t.a + t.b) * 0.5;
    const Vec2 bc = (t.b + t.c) * 0.5;
    const Vec2 ca = (t.c + t.a) * 0.5;
    return {Triangle{t.a, ab, ca}, Triangle{ab, t.b, bc}, Triangle{ca, bc, t.c},
            Triangle{ab, bc, ca}};
}

namespace {

using Ring = PlanarSurface::Ring;

double ring_signed_area(const Ring& r) {
    double a = 0.0;
    for (size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        a += cross2(r[j], r[i]);
    }
    return 0.5 * a;
}

bool point_strictly_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double eps) {
    const double d1 = cross2(b - a, p - a);
    const double d2 = cross2(c - b, p - b);
    const double d3 = cross2(a - c, p - c);
    return d1 > eps && d2 > eps && d3 > eps;
}

bool segments_cross(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross2(q - p, r - p); };
    const double o1 = orient(a0, a1, b0);
    const double o2 = orient(a0, a1, b1);
    const double o3 = orient(b0, b1, a0);
    const double o4 = orient(b0, b1, a1);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0));
}

// Merge one hole into the ring by a double bridge at a mutually visible pair.
Ring merge_hole(const Ring& outer, const Ring& hole) {
    // Hole vertex with maximum x; candidates on the outer ring are tested for
    // unobstructed visibility against both rings.
    size_t hm = 0;
    for (size_t i = 1; i < hole.size(); ++i) {
        if (hole[i].x > hole[hm].x) hm = i;
    }
    const Vec2 m = hole[hm];

    auto visible = [&](Vec2 v) {
        for (size_t i = 0, j = outer.size() - 1; i < outer.size(); j = i++) {
            if (outer[j].x == v.x && outer[j].y == v.y) continue;
            if (outer[i].x == v.x && outer[i].y == v.y) continue;
            if (segments_cross(m, v, outer[j], outer[i])) return false;
        }
        for (size_t i = 0, j = hole.size() - 1; i < hole.size(); j = i++) {
            if (i == hm || j == hm) continue;
            if (segments_cross(m, v, hole[j], hole[i])) return false;
        }
        return true;
    };

    size_t best = outer.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < outer.size(); ++i) {
        if (outer[i].x < m.x) continue;  // bridge goes rightward
        const double d = (outer[i] - m).norm2();
        if (d < best_d && visible(outer[i])) {
            best = i;
            best_d = d;
        }
    }
    if (best == outer.size()) {
        // Fall back to the nearest visible vertex in any direction.
        for (size_t i = 0; i < outer.size(); ++i) {
            const double d = (outer[i] - m).norm2();
            if (d < best_d && visible(outer[i])) {
                best = i;
                best_d = d;
            }
        }
    }
    if (best == outer.size()) throw std::runtime_error("surface triangulation: hole bridge failed");

    Ring merged;
    merged.reserve(outer.size() + hole.size() + 2);
    for (size_t i = 0; i <= best; ++i) merged.push_back(outer[i]);
    for (size_t k = 0; k < hole.size(); ++k) {
        merged.push_back(hole[(hm + k) % hole.size()]);
    }
    merged.push_back(hole[hm]);
    for (size_t i = best; i < outer.size(); ++i) merged.push_back(outer[i]);
    return merged;
}

void ear_clip(Ring poly, std::vector<Triangle>& out) {
    const double scale = [&] {
        double s = 0.0;
        for (const Vec2& p : poly) s = std::max({s, std::abs(p.x), std::abs(p.y)});
        return std::max(s, 1.0);
    }();
    const double eps = 1e-12 * scale * scale;

    std::vector<size_t> idx(poly.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    size_t guard = 0;
    while (idx.size() > 3) {
        bool clipped = false;
        for (size_t k = 0; k < idx.size(); ++k) {
            const size_t ip = idx[(k + idx.size() - 1) % idx.size()];
            const size_t ic = idx[k];
            const size_t in = idx[(k + 1) % idx.size()];
            const Vec2 a = poly[ip], b = poly[ic], c = poly[in];
            const double conv = cross2(b - a, c - b);
            if (conv <= eps) continue;  // reflex or collinear
            bool ear = true;
            for (size_t other : idx) {
                if (other == ip || other == ic || other == in) continue;
                const Vec2 p = poly[other];
                // Bridge duplicates coincide with corners; skip those.
                if ((p - a).norm2() <= eps || (p - b).norm2() <= eps || (p - c).norm2() <= eps) {
                    continue;
                }
                if (point_strictly_in_triangle(p, a, b, c, -eps)) {
                    ear = false;
                    break;
                }
            }
            if (!ear) continue;
            if (cross2(b - a, c - a) > eps) out.push_back({a, b, c});
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
            clipped = true;
            break;
        }
        if (!clipped) {
            if (++guard > poly.size()) {
                throw std::runtime_error("surface triangulation: no ear found");
            }
            // Drop the flattest corner and keep going.
            size_t flat = 0;
            double best = std::numeric_limits<double>::infinity();
            for (size_t k = 0; k < idx.size(); ++k) {
                const Vec2 a = poly[idx[(k + idx.size() - 1) % idx.size()]];
                const Vec2 b = poly[idx[k]];
                const Vec2 c = poly[idx[(k + 1) % idx.size()]];
                const double area = std::abs(cross2(b - a, c - a));
                if (area < best) {
                    best = area;
                    flat = k;
                }
            }
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(flat));
        }
    }
    if (idx.size() == 3) {
        const Vec2 a = poly[idx[0]], b = poly[idx[1]], c = poly[idx[2]];
        if (cross2(b - a, c - a) > eps) out.push_back({a, b, c});
    }
}

}  // namespace

std::vector<Triangle> triangulate(const PlanarSurface& S) {
    std::vector<Triangle> out;
    for (const PlanarSurface::Component& comp : S.components) {
        Ring outer = comp.outer;
        if (ring_signed_area(outer) < 0.0) std::reverse(outer.begin(), outer.end());
        std::vector<Ring> holes = comp.holes;
        for (Ring& h : holes) {
            if (ring_signed_area(h) > 0.0) std::reverse(h.begin(), h.end());  // holes run CW
        }
        // Bridge holes right-to-left so earlier bridges cannot block later ones.
        std::sort(holes.begin(), holes.end(), [](const Ring& p, const Ring& q) {
            auto maxx = [](const Ring& r) {
                double m = -std::numeric_limits<double>::infinity();
                for (const Vec2& v : r) m = std::max(m, v.x);
                return m;
            };
            return maxx(p) > maxx(q);
        });
        for (const Ring& h : holes) outer = merge_hole(outer, h);
        ear_clip(std::move(outer), out);
    }
    return out;
}

}  // namespace hlx
