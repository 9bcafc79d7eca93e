#include "hlx/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hlx/errors.hpp"

namespace hlx {

namespace {

double pair_diameter(const PLLoop& a, const PLLoop& b) {
    auto [alo, ahi] = a.bounding_box();
    auto [blo, bhi] = b.bounding_box();
    Point4 lo{std::min(alo.x0, blo.x0), std::min(alo.x1, blo.x1), std::min(alo.x2, blo.x2),
              std::min(alo.x3, blo.x3)};
    Point4 hi{std::max(ahi.x0, bhi.x0), std::max(ahi.x1, bhi.x1), std::max(ahi.x2, bhi.x2),
              std::max(ahi.x3, bhi.x3)};
    return (hi - lo).norm();
}

double pair_eps(const PLLoop& a, const PLLoop& b, double eps_gen) {
    if (eps_gen > 0.0) return eps_gen;
    const double diam = pair_diameter(a, b);
    return diam > 0.0 ? 1e-9 * diam : 1e-12;
}

[[noreturn]] void degenerate(int plane, int seg_a, int seg_b, const char* why, Vec2 where) {
    std::ostringstream os;
    os << "degenerate diagram in plane " << plane << " (segments " << seg_a << "," << seg_b
       << "): " << why << " near (" << where.x << ", " << where.y << ")";
    throw DegenerateDiagram(os.str());
}

// Spatial cross-product component [u x v]_k.
double cross_component(const Vec3& u, const Vec3& v, int k) {
    switch (k) {
        case 1: return u.y * v.z - u.z * v.y;
        case 2: return u.z * v.x - u.x * v.z;
        default: return u.x * v.y - u.y * v.x;
    }
}

int sign_or_degenerate(double value, double tol, int plane, int sa, int sb, const char* what,
                       Vec2 where) {
    if (std::abs(value) <= tol) degenerate(plane, sa, sb, what, where);
    return value > 0.0 ? +1 : -1;
}

}  // namespace

std::vector<Crossing> find_crossings(const PLLoop& a, const PLLoop& b, int plane,
                                     double eps_gen) {
    if (plane < 1 || plane > 3) throw std::invalid_argument("plane index must be 1, 2 or 3");
    const double eps = pair_eps(a, b, eps_gen);
    const double diam = pair_diameter(a, b);
    const double rel = diam > 0.0 ? eps / diam : eps;

    std::vector<Crossing> out;
    for (int i = 0; i < a.segment_count(); ++i) {
        const Point4 a0 = a.segment_a(i), a1 = a.segment_b(i);
        const Vec2 ha0 = a0.hat(plane), ha1 = a1.hat(plane);
        for (int j = 0; j < b.segment_count(); ++j) {
            const Point4 b0 = b.segment_a(j), b1 = b.segment_b(j);
            const Vec2 hb0 = b0.hat(plane), hb1 = b1.hat(plane);
            auto r = detail::intersect_segments_2d(ha0, ha1, hb0, hb1, eps);
            using S = detail::SegIntersect2::Status;
            switch (r.status) {
                case S::None:
                    continue;
                case S::CollinearOverlap:
                    degenerate(plane, i, j, "projected segments overlap", r.point);
                case S::Touch:
                case S::NearEndpoint:
                    degenerate(plane, i, j, "crossing at a projected segment endpoint", r.point);
                case S::Proper:
                    break;
            }

            Crossing c;
            c.plane = plane;
            c.s = a.segment_start(i) + r.u * (a.segment_end(i) - a.segment_start(i));
            c.t = b.segment_start(j) + r.v * (b.segment_end(j) - b.segment_start(j));
            c.point = r.point;

            // Signs come from the (constant) segment data, not interpolation.
            Vec3 da = (a1 - a0).spatial();
            Vec3 db = (b1 - b0).spatial();
            const double na = da.norm(), nb = db.norm();
            if (na <= eps || nb <= eps) degenerate(plane, i, j, "spatially collapsed segment", r.point);
            da = da * (1.0 / na);
            db = db * (1.0 / nb);
            c.orientation = sign_or_degenerate(cross_component(da, db, plane), rel, plane, i, j,
                                               "orientation sign below tolerance", r.point);

            const Point4 pa = a0 + (a1 - a0) * r.u;
            const Point4 pb = b0 + (b1 - b0) * r.v;
            c.height = sign_or_degenerate(pa.spatial_coord(plane) - pb.spatial_coord(plane), eps,
                                          plane, i, j, "height sign below tolerance", r.point);
            c.time_lag = sign_or_degenerate(pb.x0 - pa.x0, eps, plane, i, j,
                                            "time-lag sign below tolerance", r.point);
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        return x.s != y.s ? x.s < y.s : x.t < y.t;
    });
    return out;
}

int hyperlinking_number(const PLLoop& a, const PLLoop& b, double eps_gen) {
    int sk = 0;
    for (int plane = 1; plane <= 3; ++plane) {
        for (const Crossing& c : find_crossings(a, b, plane, eps_gen)) {
            sk += c.sign_product();
        }
    }
    return sk;
}

int sk_loop_vs_hyperlink(const PLLoop& a, const Hyperlink& L, double eps_gen) {
    int sk = 0;
    for (const PLLoop& l : L.loops) sk += hyperlinking_number(a, l, eps_gen);
    return sk;
}

double crossing_clearance(const PLLoop& a, const PLLoop& b, double eps_gen) {
    double clearance = std::numeric_limits<double>::infinity();
    for (int plane = 1; plane <= 3; ++plane) {
        const auto crossings = find_crossings(a, b, plane, eps_gen);
        for (size_t i = 0; i < crossings.size(); ++i) {
            const Crossing& c = crossings[i];
            // Distance to projected vertices of both loops.
            for (const Point4& p : a.vertices()) {
                clearance = std::min(clearance, (p.hat(plane) - c.point).norm());
            }
            for (const Point4& p : b.vertices()) {
                clearance = std::min(clearance, (p.hat(plane) - c.point).norm());
            }
            for (size_t j = i + 1; j < crossings.size(); ++j) {
                clearance = std::min(clearance, (crossings[j].point - c.point).norm());
            }
        }
    }
    return clearance;
}

}  // namespace hlx
