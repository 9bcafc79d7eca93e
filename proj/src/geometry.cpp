#include "hlx/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hlx {

// ---------------------------------------------------------------------------
// Spin
// ---------------------------------------------------------------------------

Spin Spin::from_double(double j) {
    if (!(j >= 0.0) || !std::isfinite(j)) {
        throw std::invalid_argument("spin must be a finite nonnegative half-integer");
    }
    const double twice = 2.0 * j;
    const double rounded = std::round(twice);
    if (std::abs(twice - rounded) > 1e-9) {
        throw std::invalid_argument("spin must be an integer multiple of 1/2");
    }
    return Spin(static_cast<int>(rounded));
}

// ---------------------------------------------------------------------------
// PLLoop
// ---------------------------------------------------------------------------

PLLoop::PLLoop(std::vector<Point4> vertices) : vertices_(std::move(vertices)) {
    const int n = vertex_count();
    if (n < 3) throw std::invalid_argument("a loop needs at least 3 vertices");
    for (const Point4& p : vertices_) {
        if (!std::isfinite(p.x0) || !std::isfinite(p.x1) || !std::isfinite(p.x2) ||
            !std::isfinite(p.x3)) {
            throw std::invalid_argument("loop vertex has a non-finite coordinate");
        }
    }
    cumulative_.resize(static_cast<size_t>(n) + 1);
    cumulative_[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const double len = (segment_b(i) - segment_a(i)).norm();
        if (len <= 0.0) throw std::invalid_argument("consecutive loop vertices coincide");
        cumulative_[static_cast<size_t>(i) + 1] = cumulative_[static_cast<size_t>(i)] + len;
    }
    total_length_ = cumulative_.back();
    for (double& c : cumulative_) c /= total_length_;
    cumulative_.back() = 1.0;
}

Point4 PLLoop::segment_velocity(int i) const {
    const double ds = segment_end(i) - segment_start(i);
    return (segment_b(i) - segment_a(i)) * (1.0 / ds);
}

int PLLoop::segment_of(double s) const {
    const int n = vertex_count();
    if (s <= 0.0) return 0;
    if (s >= 1.0) return n - 1;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    int idx = static_cast<int>(it - cumulative_.begin()) - 1;
    return std::clamp(idx, 0, n - 1);
}

Point4 PLLoop::point_at(double s) const {
    s = std::clamp(s, 0.0, 1.0);
    const int i = segment_of(s);
    const double s0 = segment_start(i);
    const double s1 = segment_end(i);
    const double alpha = (s - s0) / (s1 - s0);
    return segment_a(i) + (segment_b(i) - segment_a(i)) * alpha;
}

Point4 PLLoop::velocity_at(double s) const {
    s = std::clamp(s, 0.0, 1.0);
    if (s >= 1.0) s = 0.0;  // the loop closes; the outgoing segment at s=1 is segment 0
    int i = segment_of(s);
    // At a vertex parameter, return the outgoing (right) segment derivative.
    if (s == segment_end(i) && i + 1 < vertex_count()) i += 1;
    return segment_velocity(i);
}

PLLoop PLLoop::rotated(int offset) const {
    const int n = vertex_count();
    offset = ((offset % n) + n) % n;
    std::vector<Point4> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(vertices_[static_cast<size_t>((i + offset) % n)]);
    return PLLoop(std::move(v));
}

PLLoop PLLoop::reversed() const {
    const int n = vertex_count();
    std::vector<Point4> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(vertices_[0]);
    for (int i = n - 1; i >= 1; --i) v.push_back(vertices_[static_cast<size_t>(i)]);
    return PLLoop(std::move(v));
}

PLLoop PLLoop::translated(const Point4& d) const {
    std::vector<Point4> v = vertices_;
    for (Point4& p : v) p = p + d;
    return PLLoop(std::move(v));
}

std::pair<Point4, Point4> PLLoop::bounding_box() const {
    Point4 lo = vertices_[0], hi = vertices_[0];
    for (const Point4& p : vertices_) {
        lo.x0 = std::min(lo.x0, p.x0); hi.x0 = std::max(hi.x0, p.x0);
        lo.x1 = std::min(lo.x1, p.x1); hi.x1 = std::max(hi.x1, p.x1);
        lo.x2 = std::min(lo.x2, p.x2); hi.x2 = std::max(hi.x2, p.x2);
        lo.x3 = std::min(lo.x3, p.x3); hi.x3 = std::max(hi.x3, p.x3);
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// ColoredHyperlink
// ---------------------------------------------------------------------------

std::vector<ColoredHyperlink::ColorClass> ColoredHyperlink::color_classes() const {
    std::vector<ColorClass> classes;
    for (int u = 0; u < size(); ++u) {
        const SpinPair& c = colors[static_cast<size_t>(u)];
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const ColorClass& k) { return k.color == c; });
        if (it == classes.end()) {
            classes.push_back({c, {u}});
        } else {
            it->members.push_back(u);
        }
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Geometric primitives
// ---------------------------------------------------------------------------

namespace detail {

SegmentClosest closest_segment_segment(Vec3 a0, Vec3 a1, Vec3 b0, Vec3 b1) {
    // Ericson, Real-Time Collision Detection, 5.1.9.
    const Vec3 d1 = a1 - a0;
    const Vec3 d2 = b1 - b0;
    const Vec3 r = a0 - b0;
    const double A = d1.dot(d1);
    const double E = d2.dot(d2);
    const double F = d2.dot(r);
    double s = 0.0, t = 0.0;
    if (A <= 0.0 && E <= 0.0) {
        s = t = 0.0;
    } else if (A <= 0.0) {
        t = std::clamp(F / E, 0.0, 1.0);
    } else {
        const double C = d1.dot(r);
        if (E <= 0.0) {
            s = std::clamp(-C / A, 0.0, 1.0);
        } else {
            const double B = d1.dot(d2);
            const double denom = A * E - B * B;
            s = denom > 0.0 ? std::clamp((B * F - C * E) / denom, 0.0, 1.0) : 0.0;
            t = (B * s + F) / E;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-C / A, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((B - C) / A, 0.0, 1.0);
            }
        }
    }
    const Vec3 pa = a0 + d1 * s;
    const Vec3 pb = b0 + d2 * t;
    return {s, t, (pa - pb).norm()};
}

SegIntersect2 intersect_segments_2d(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps) {
    SegIntersect2 out;
    const Vec2 da = a1 - a0;
    const Vec2 db = b1 - b0;
    const Vec2 r = b0 - a0;
    const double la = da.norm();
    const double lb = db.norm();
    const double denom = cross2(da, db);

    if (std::abs(denom) <= eps * (la + lb)) {
        // Parallel.  Collinear if b's endpoints sit on a's line.
        const double off0 = la > 0.0 ? std::abs(cross2(da, r)) / la : r.norm();
        const double off1 = la > 0.0 ? std::abs(cross2(da, b1 - a0)) / la : (b1 - a0).norm();
        if (off0 > eps || off1 > eps) return out;  // parallel but apart
        // Overlap extent measured along a's direction.
        const Vec2 e = la > 0.0 ? da * (1.0 / la) : Vec2{1.0, 0.0};
        const double pb0 = (b0 - a0).dot(e);
        const double pb1 = (b1 - a0).dot(e);
        const double lo = std::max(0.0, std::min(pb0, pb1));
        const double hi = std::min(la, std::max(pb0, pb1));
        if (hi - lo > eps) {
            out.status = SegIntersect2::Status::CollinearOverlap;
            const double mid = 0.5 * (lo + hi);
            out.u = mid / la;
            out.v = (pb1 != pb0) ? (mid - pb0) / (pb1 - pb0) : 0.0;
            out.point = a0 + e * mid;
        } else if (hi - lo > -eps) {
            out.status = SegIntersect2::Status::Touch;
            out.point = a0 + e * std::clamp(0.5 * (lo + hi), 0.0, la);
        }
        return out;
    }

    const double u = cross2(r, db) / denom;
    const double v = cross2(r, da) / denom;
    const double mu = la > 0.0 ? eps / la : 0.0;
    const double mv = lb > 0.0 ? eps / lb : 0.0;
    if (u < -mu || u > 1.0 + mu || v < -mv || v > 1.0 + mv) return out;

    const Vec2 p = a0 + da * u;
    out.u = std::clamp(u, 0.0, 1.0);
    out.v = std::clamp(v, 0.0, 1.0);
    out.point = p;
    const bool near_end = (p - a0).norm() <= eps || (p - a1).norm() <= eps ||
                          (p - b0).norm() <= eps || (p - b1).norm() <= eps;
    out.status = near_end ? SegIntersect2::Status::NearEndpoint : SegIntersect2::Status::Proper;
    return out;
}

double point_segment_distance_2d(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double l2 = d.norm2();
    if (l2 <= 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(d) / l2, 0.0, 1.0);
    return (p - (a + d * t)).norm();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PlanarSurface
// ---------------------------------------------------------------------------

namespace {

bool point_in_ring(Vec2 p, const PlanarSurface::Ring& ring) {
    bool inside = false;
    const size_t n = ring.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = ring[j];
        const Vec2& b = ring[i];
        if ((b.y > p.y) != (a.y > p.y)) {
            const double xi = b.x + (p.y - b.y) / (a.y - b.y) * (a.x - b.x);
            if (p.x < xi) inside = !inside;
        }
    }
    return inside;
}

double ring_distance(Vec2 p, const PlanarSurface::Ring& ring) {
    double d = std::numeric_limits<double>::infinity();
    const size_t n = ring.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        d = std::min(d, detail::point_segment_distance_2d(p, ring[j], ring[i]));
    }
    return d;
}

void check_ring_simple(const PlanarSurface::Ring& ring, double eps, const char* what) {
    const int n = static_cast<int>(ring.size());
    if (n < 3) throw std::invalid_argument(std::string(what) + ": ring needs >= 3 vertices");
    for (int i = 0; i < n; ++i) {
        if ((ring[static_cast<size_t>((i + 1) % n)] - ring[static_cast<size_t>(i)]).norm() <= eps) {
            throw std::invalid_argument(std::string(what) + ": repeated ring vertex");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            auto r = detail::intersect_segments_2d(
                ring[static_cast<size_t>(i)], ring[static_cast<size_t>((i + 1) % n)],
                ring[static_cast<size_t>(j)], ring[static_cast<size_t>((j + 1) % n)], eps);
            if (r.status != detail::SegIntersect2::Status::None) {
                throw std::invalid_argument(std::string(what) + ": ring is not simple");
            }
        }
    }
}

}  // namespace

PlanarSurface::Location PlanarSurface::locate(Vec2 p, double eps) const {
    if (boundary_distance(p) <= eps) return Location::NearBoundary;
    int enclosing = 0;
    for (const Component& c : components) {
        if (point_in_ring(p, c.outer)) ++enclosing;
        for (const Ring& h : c.holes) {
            if (point_in_ring(p, h)) ++enclosing;
        }
    }
    return (enclosing % 2 == 1) ? Location::Inside : Location::Outside;
}

std::pair<Vec2, Vec2> PlanarSurface::bounding_box() const {
    Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Vec2 hi{-lo.x, -lo.y};
    for (const Component& c : components) {
        for (const Vec2& p : c.outer) {
            lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
        }
    }
    return {lo, hi};
}

double PlanarSurface::boundary_distance(Vec2 p) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Component& c : components) {
        d = std::min(d, ring_distance(p, c.outer));
        for (const Ring& h : c.holes) d = std::min(d, ring_distance(p, h));
    }
    return d;
}

void PlanarSurface::check_structure(double eps) const {
    if (components.empty()) throw std::invalid_argument("surface: no components");
    if (normal_sign != 1 && normal_sign != -1) {
        throw std::invalid_argument("surface: normal_sign must be +1 or -1");
    }
    for (const Component& c : components) {
        check_ring_simple(c.outer, eps, "surface outer");
        for (const Ring& h : c.holes) {
            check_ring_simple(h, eps, "surface hole");
            for (const Vec2& p : h) {
                if (!point_in_ring(p, c.outer) || ring_distance(p, c.outer) <= eps) {
                    throw std::invalid_argument("surface: hole not strictly inside its outer ring");
                }
            }
        }
        // Holes pairwise disjoint and not nested.
        for (size_t i = 0; i < c.holes.size(); ++i) {
            for (size_t j = i + 1; j < c.holes.size(); ++j) {
                if (point_in_ring(c.holes[i][0], c.holes[j]) ||
                    point_in_ring(c.holes[j][0], c.holes[i])) {
                    throw std::invalid_argument("surface: nested holes");
                }
                if (ring_distance(c.holes[i][0], c.holes[j]) <= eps) {
                    throw std::invalid_argument("surface: holes touch");
                }
            }
        }
    }
    for (size_t i = 0; i < components.size(); ++i) {
        for (size_t j = i + 1; j < components.size(); ++j) {
            if (point_in_ring(components[i].outer[0], components[j].outer) ||
                point_in_ring(components[j].outer[0], components[i].outer)) {
                throw std::invalid_argument("surface: components overlap");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

double default_eps(const Hyperlink& h) {
    if (h.loops.empty()) return 1e-12;
    Point4 lo = h.loops[0].vertex(0), hi = lo;
    for (const PLLoop& l : h.loops) {
        auto [a, b] = l.bounding_box();
        lo.x0 = std::min(lo.x0, a.x0); hi.x0 = std::max(hi.x0, b.x0);
        lo.x1 = std::min(lo.x1, a.x1); hi.x1 = std::max(hi.x1, b.x1);
        lo.x2 = std::min(lo.x2, a.x2); hi.x2 = std::max(hi.x2, b.x2);
        lo.x3 = std::min(lo.x3, a.x3); hi.x3 = std::max(hi.x3, b.x3);
    }
    const double diam = (hi - lo).norm();
    return diam > 0.0 ? 1e-9 * diam : 1e-12;
}

namespace {

bool adjacent_segments(int i, int j, int n) {
    return j == (i + 1) % n || i == (j + 1) % n;
}

// Parameter of local segment coordinate alpha within segment i of loop l.
double global_param(const PLLoop& l, int i, double alpha) {
    return l.segment_start(i) + alpha * (l.segment_end(i) - l.segment_start(i));
}

void check_condition_a(const Hyperlink& h, int la, int lb, double eps,
                       std::vector<Violation>& out) {
    const PLLoop& A = h.loops[static_cast<size_t>(la)];
    const PLLoop& B = h.loops[static_cast<size_t>(lb)];
    const bool same = la == lb;
    for (int i = 0; i < A.segment_count(); ++i) {
        const int j0 = same ? i + 1 : 0;
        for (int j = j0; j < B.segment_count(); ++j) {
            if (same && adjacent_segments(i, j, A.segment_count())) {
                // Adjacent segments share a vertex; they violate spatial
                // distinctness only if the projections double back.
                const Vec3 d1 = (A.segment_b(i) - A.segment_a(i)).spatial();
                const Vec3 d2 = (B.segment_b(j) - B.segment_a(j)).spatial();
                const bool corner_first = (j == (i + 1) % A.segment_count());
                const Vec3 dout = corner_first ? d2 : d1;
                const Vec3 din = corner_first ? d1 : d2;
                if (din.cross(dout).norm() <= eps * (din.norm() + dout.norm()) &&
                    din.dot(dout) < 0.0) {
                    Violation v;
                    v.kind = Violation::Kind::SpatialCoincidence;
                    v.loop_a = la; v.loop_b = lb;
                    v.s = global_param(A, i, corner_first ? 1.0 : 0.0);
                    v.t = global_param(B, j, corner_first ? 0.0 : 1.0);
                    v.witness_a = corner_first ? A.segment_b(i) : A.segment_a(i);
                    v.witness_b = v.witness_a;
                    v.detail = "adjacent segments double back spatially";
                    out.push_back(v);
                }
                continue;
            }
            auto c = detail::closest_segment_segment(
                A.segment_a(i).spatial(), A.segment_b(i).spatial(),
                B.segment_a(j).spatial(), B.segment_b(j).spatial());
            if (c.dist > eps) continue;
            const Point4 pa = A.segment_a(i) + (A.segment_b(i) - A.segment_a(i)) * c.u;
            const Point4 pb = B.segment_a(j) + (B.segment_b(j) - B.segment_a(j)) * c.v;
            Violation v;
            v.loop_a = la; v.loop_b = lb;
            v.s = global_param(A, i, c.u);
            v.t = global_param(B, j, c.v);
            v.witness_a = pa;
            v.witness_b = pb;
            if (same && (pa - pb).norm() <= eps) {
                v.kind = Violation::Kind::SelfIntersection;
                v.detail = "loop self-intersects in R^4";
            } else {
                v.kind = Violation::Kind::SpatialCoincidence;
                v.detail = "two points share all three spatial coordinates";
            }
            out.push_back(v);
        }
    }
}

void check_condition_b(const Hyperlink& h, int la, int lb, int plane, double eps,
                       std::vector<Violation>& out) {
    const PLLoop& A = h.loops[static_cast<size_t>(la)];
    const PLLoop& B = h.loops[static_cast<size_t>(lb)];
    const bool same = la == lb;

    auto report = [&](double s, double t, const Point4& pa, const Point4& pb) {
        // A coincidence pair counts only when the two points are genuinely
        // distinct in R^4 (a shared vertex is one point, not a pair).
        if ((pa - pb).norm() <= eps) return;
        if (std::abs(pa.x0 - pb.x0) > eps) return;
        Violation v;
        v.kind = Violation::Kind::PlaneCoincidence;
        v.loop_a = la; v.loop_b = lb;
        v.s = s; v.t = t;
        v.witness_a = pa; v.witness_b = pb;
        v.detail = "two spatial coordinates shared at equal time (plane " +
                   std::to_string(plane) + ")";
        out.push_back(v);
    };

    for (int i = 0; i < A.segment_count(); ++i) {
        const int j0 = same ? i + 1 : 0;
        for (int j = j0; j < B.segment_count(); ++j) {
            const Point4 a0 = A.segment_a(i), a1 = A.segment_b(i);
            const Point4 b0 = B.segment_a(j), b1 = B.segment_b(j);
            auto r = detail::intersect_segments_2d(a0.hat(plane), a1.hat(plane),
                                                   b0.hat(plane), b1.hat(plane), eps);
            using S = detail::SegIntersect2::Status;
            if (r.status == S::Proper || r.status == S::NearEndpoint || r.status == S::Touch) {
                const Point4 pa = a0 + (a1 - a0) * r.u;
                const Point4 pb = b0 + (b1 - b0) * r.v;
                report(global_param(A, i, r.u), global_param(B, j, r.v), pa, pb);
            } else if (r.status == S::CollinearOverlap) {
                // Points pair up along the overlap; time gap is affine there.
                // Candidates: overlap endpoints and the zero of the gap.
                const Vec2 ha0 = a0.hat(plane), ha1 = a1.hat(plane);
                const Vec2 hb0 = b0.hat(plane), hb1 = b1.hat(plane);
                const Vec2 da = ha1 - ha0;
                const double la2 = da.norm();
                const Vec2 e = da * (1.0 / la2);
                const double pb0 = (hb0 - ha0).dot(e);
                const double pb1 = (hb1 - ha0).dot(e);
                const double lo = std::max(0.0, std::min(pb0, pb1));
                const double hi = std::min(la2, std::max(pb0, pb1));
                auto at = [&](double xi, Point4& pa, Point4& pb, double& s, double& t) {
                    const double u = xi / la2;
                    const double v = (pb1 != pb0) ? (xi - pb0) / (pb1 - pb0) : 0.0;
                    pa = a0 + (a1 - a0) * u;
                    pb = b0 + (b1 - b0) * std::clamp(v, 0.0, 1.0);
                    s = global_param(A, i, u);
                    t = global_param(B, j, std::clamp(v, 0.0, 1.0));
                };
                Point4 pa, pb;
                double s, t;
                std::vector<double> candidates = {lo, hi, 0.5 * (lo + hi)};
                at(lo, pa, pb, s, t);
                const double g0 = pa.x0 - pb.x0;
                at(hi, pa, pb, s, t);
                const double g1 = pa.x0 - pb.x0;
                if ((g0 < 0) != (g1 < 0) && hi > lo) {
                    candidates.push_back(lo + (hi - lo) * (g0 / (g0 - g1)));
                }
                for (double xi : candidates) {
                    at(xi, pa, pb, s, t);
                    if ((pa - pb).norm() > eps && std::abs(pa.x0 - pb.x0) <= eps) {
                        report(s, t, pa, pb);
                        break;
                    }
                }
            }
        }
    }
}

}  // namespace

ValidationReport validate_timelike(const Hyperlink& h, double eps_gen) {
    const double eps = eps_gen > 0.0 ? eps_gen : default_eps(h);
    ValidationReport rep;

    // Spatially collapsed segments violate condition (a) outright.
    for (int l = 0; l < h.size(); ++l) {
        const PLLoop& loop = h.loops[static_cast<size_t>(l)];
        for (int i = 0; i < loop.segment_count(); ++i) {
            if ((loop.segment_b(i) - loop.segment_a(i)).spatial().norm() <= eps) {
                Violation v;
                v.kind = Violation::Kind::SpatialCoincidence;
                v.loop_a = v.loop_b = l;
                v.s = loop.segment_start(i);
                v.t = loop.segment_end(i);
                v.witness_a = loop.segment_a(i);
                v.witness_b = loop.segment_b(i);
                v.detail = "segment collapses under the spatial projection";
                rep.violations.push_back(v);
            }
        }
    }

    for (int la = 0; la < h.size(); ++la) {
        for (int lb = la; lb < h.size(); ++lb) {
            check_condition_a(h, la, lb, eps, rep.violations);
            for (int plane = 1; plane <= 3; ++plane) {
                check_condition_b(h, la, lb, plane, eps, rep.violations);
            }
        }
    }
    return rep;
}

std::vector<std::vector<Vec3>> project(const Hyperlink& h, int axis) {
    std::vector<std::vector<Vec3>> out;
    out.reserve(h.loops.size());
    for (const PLLoop& l : h.loops) {
        std::vector<Vec3> poly;
        poly.reserve(static_cast<size_t>(l.vertex_count()));
        for (const Point4& p : l.vertices()) {
            const std::array<double, 4> c{p.x0, p.x1, p.x2, p.x3};
            Vec3 q;
            int k = 0;
            double* dst[3] = {&q.x, &q.y, &q.z};
            for (int a = 0; a < 4; ++a) {
                if (a == axis) continue;
                *dst[k++] = c[static_cast<size_t>(a)];
            }
            poly.push_back(q);
        }
        out.push_back(std::move(poly));
    }
    return out;
}

}  // namespace hlx
