#include "hlx/piercing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hlx/errors.hpp"

namespace hlx {

namespace {

double scene_eps(const PLLoop& l, const PlanarSurface& S, double eps_gen) {
    if (eps_gen > 0.0) return eps_gen;
    auto [llo, lhi] = l.bounding_box();
    auto [slo, shi] = S.bounding_box();
    const double lo2 = std::min(llo.x2, slo.x);
    const double lo3 = std::min(llo.x3, slo.y);
    const double hi2 = std::max(lhi.x2, shi.x);
    const double hi3 = std::max(lhi.x3, shi.y);
    const double d0 = lhi.x0 - llo.x0;
    const double d1 = lhi.x1 - llo.x1;
    const double diam = std::sqrt(d0 * d0 + d1 * d1 + (hi2 - lo2) * (hi2 - lo2) +
                                  (hi3 - lo3) * (hi3 - lo3));
    return diam > 0.0 ? 1e-9 * diam : 1e-12;
}

[[noreturn]] void degenerate(int segment, const char* why, Vec2 where) {
    std::ostringstream os;
    os << "degenerate piercing (segment " << segment << "): " << why << " near (" << where.x
       << ", " << where.y << ")";
    throw DegeneratePiercing(os.str());
}

// Smallest value of x0^2 + x1^2 along the segment, with its minimiser.
double min_plane_distance2(const Point4& a, const Point4& b, double* tau_out) {
    const double dx0 = b.x0 - a.x0;
    const double dx1 = b.x1 - a.x1;
    const double denom = dx0 * dx0 + dx1 * dx1;
    double tau = 0.0;
    if (denom > 0.0) tau = std::clamp(-(a.x0 * dx0 + a.x1 * dx1) / denom, 0.0, 1.0);
    const double x0 = a.x0 + tau * dx0;
    const double x1 = a.x1 + tau * dx1;
    if (tau_out) *tau_out = tau;
    return x0 * x0 + x1 * x1;
}

}  // namespace

std::vector<Piercing> find_piercings(const PLLoop& l, const PlanarSurface& S, double eps_gen) {
    const double eps = scene_eps(l, S, eps_gen);
    S.check_structure(eps);

    // The loop must stay clear of {0} x S in R^4.
    for (int i = 0; i < l.segment_count(); ++i) {
        double tau = 0.0;
        const double d2 = min_plane_distance2(l.segment_a(i), l.segment_b(i), &tau);
        if (d2 <= eps * eps) {
            const Point4 p = l.segment_a(i) + (l.segment_b(i) - l.segment_a(i)) * tau;
            const Vec2 q{p.x2, p.x3};
            if (S.locate(q, eps) != PlanarSurface::Location::Outside) {
                degenerate(i, "loop touches {0} x S", q);
            }
        }
    }

    std::vector<Piercing> out;
    for (int i = 0; i < l.segment_count(); ++i) {
        const Point4 a = l.segment_a(i);
        const Point4 b = l.segment_b(i);
        const bool a_on = std::abs(a.x1) <= eps;
        const bool b_on = std::abs(b.x1) <= eps;
        if (a_on && b_on) degenerate(i, "segment lies in the plane x1 = 0", Vec2{a.x2, a.x3});
        if (a_on || b_on) {
            const Point4& p = a_on ? a : b;
            // Only an issue when the near-plane vertex is over the surface.
            if (S.locate(Vec2{p.x2, p.x3}, eps) != PlanarSurface::Location::Outside) {
                degenerate(i, "plane crossing at a segment endpoint", Vec2{p.x2, p.x3});
            }
            continue;
        }
        if ((a.x1 > 0.0) == (b.x1 > 0.0)) continue;  // no sign change

        const double tau = a.x1 / (a.x1 - b.x1);
        const Point4 p = a + (b - a) * tau;
        const Vec2 q{p.x2, p.x3};
        switch (S.locate(q, eps)) {
            case PlanarSurface::Location::Outside:
                continue;
            case PlanarSurface::Location::NearBoundary:
                degenerate(i, "plane crossing near the surface boundary", q);
            case PlanarSurface::Location::Inside:
                break;
        }

        Piercing pc;
        pc.s = l.segment_start(i) + tau * (l.segment_end(i) - l.segment_start(i));
        pc.point = q;
        if (std::abs(p.x0) <= eps) degenerate(i, "time coordinate vanishes at a piercing", q);
        pc.height = p.x0 < 0.0 ? +1 : -1;
        const Vec3 dir = (b - a).spatial();
        const double n = dir.norm();
        if (n <= eps || std::abs(dir.x) <= eps * std::max(1.0, n)) {
            degenerate(i, "tangential plane crossing", q);
        }
        pc.orientation = (dir.x > 0.0 ? +1 : -1) * S.normal_sign;
        out.push_back(pc);
    }
    std::sort(out.begin(), out.end(), [](const Piercing& x, const Piercing& y) { return x.s < y.s; });
    return out;
}

std::vector<Piercing> find_piercings(const Hyperlink& L, const PlanarSurface& S, double eps_gen) {
    std::vector<Piercing> out;
    for (int u = 0; u < L.size(); ++u) {
        auto per_loop = find_piercings(L.loops[static_cast<size_t>(u)], S, eps_gen);
        for (Piercing& p : per_loop) p.loop_index = u;
        out.insert(out.end(), per_loop.begin(), per_loop.end());
    }
    return out;
}

int linking_number_surface(const PLLoop& l, const PlanarSurface& S, double eps_gen) {
    int lk = 0;
    for (const Piercing& p : find_piercings(l, S, eps_gen)) lk += p.epsilon();
    return lk;
}

int piercing_count(const PLLoop& l, const PlanarSurface& S, double eps_gen) {
    return static_cast<int>(find_piercings(l, S, eps_gen).size());
}

int hyperlink_lk(const Hyperlink& L, const PlanarSurface& S, double eps_gen) {
    int lk = 0;
    for (const PLLoop& l : L.loops) lk += linking_number_surface(l, S, eps_gen);
    return lk;
}

SurfacePartition make_surface_partition(const std::vector<Piercing>& piercings,
                                        const std::vector<int>& loop_class,
                                        const PlanarSurface& S, int class_count,
                                        double scale) {
    SurfacePartition part;
    part.class_count = std::max(1, class_count);
    for (size_t i = 0; i < piercings.size(); ++i) {
        const Piercing& p = piercings[i];
        double radius = S.boundary_distance(p.point);
        for (size_t j = 0; j < piercings.size(); ++j) {
            if (j == i) continue;
            radius = std::min(radius, 0.5 * (piercings[j].point - p.point).norm());
        }
        SurfacePartition::Disk d;
        d.center = p.point;
        d.radius = radius * scale;
        d.class_index = loop_class[static_cast<size_t>(p.loop_index)];
        part.disks.push_back(d);
    }
    return part;
}

}  // namespace hlx
