#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hlx {

// ---------------------------------------------------------------------------
// Small vector types
// ---------------------------------------------------------------------------

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double c) const { return {x * c, y * c}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {x * c, y * c, z * c}; }
    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 cross(Vec3 o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

// A point of R^4 = R (time) x R^3 (space).
struct Point4 {
    double x0 = 0.0;  // time
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    Vec3 spatial() const { return {x1, x2, x3}; }

    // Spatial coordinate pair complementary to axis k (k in {1,2,3}):
    // k=1 -> (x2,x3), k=2 -> (x1,x3), k=3 -> (x1,x2).
    Vec2 hat(int k) const {
        switch (k) {
            case 1: return {x2, x3};
            case 2: return {x1, x3};
            default: return {x1, x2};
        }
    }

    double spatial_coord(int k) const { return k == 1 ? x1 : (k == 2 ? x2 : x3); }

    Point4 operator+(const Point4& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    Point4 operator-(const Point4& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    Point4 operator*(double c) const { return {x0 * c, x1 * c, x2 * c, x3 * c}; }
    double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm2()); }
};

// ---------------------------------------------------------------------------
// Spins
// ---------------------------------------------------------------------------

// A nonnegative half-integer spin, stored as 2j to keep arithmetic exact.
struct Spin {
    int twice = 0;

    Spin() = default;
    explicit Spin(int twice_j) : twice(twice_j) {}

    static Spin from_double(double j);  // throws std::invalid_argument unless 2j is a nonneg integer

    double value() const { return 0.5 * twice; }
    int dim() const { return twice + 1; }       // 2j+1
    double casimir() const {                    // j(j+1)
        const double j = value();
        return j * (j + 1.0);
    }
    bool operator==(const Spin& o) const { return twice == o.twice; }
};

struct SpinPair {
    Spin jplus;
    Spin jminus;
    bool operator==(const SpinPair& o) const { return jplus == o.jplus && jminus == o.jminus; }
};

// ---------------------------------------------------------------------------
// Loops and hyperlinks
// ---------------------------------------------------------------------------

// An oriented closed piecewise-linear curve in R^4.  The parameter domain is
// [0,1], proportional to R^4 arc length; vertex i sits at parameter
// param_of_vertex(i) and the last vertex connects back to the first.
class PLLoop {
public:
    PLLoop() = default;
    explicit PLLoop(std::vector<Point4> vertices);  // throws on <3 or repeated consecutive vertices

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int segment_count() const { return vertex_count(); }
    const Point4& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const std::vector<Point4>& vertices() const { return vertices_; }

    double total_length() const { return total_length_; }

    // Parameter of vertex i (param_of_vertex(0) == 0; vertex n wraps to 1).
    double param_of_vertex(int i) const { return cumulative_[static_cast<size_t>(i)]; }
    // Half-open parameter range [s0,s1) covered by segment i.
    double segment_start(int i) const { return cumulative_[static_cast<size_t>(i)]; }
    double segment_end(int i) const { return cumulative_[static_cast<size_t>(i) + 1]; }
    Point4 segment_a(int i) const { return vertices_[static_cast<size_t>(i)]; }
    Point4 segment_b(int i) const { return vertices_[static_cast<size_t>((i + 1) % vertex_count())]; }

    // Constant d/ds derivative on segment i (parameter measured on [0,1]).
    Point4 segment_velocity(int i) const;

    // Index of the segment containing parameter s in [0,1] (s==1 wraps to last).
    int segment_of(double s) const;

    Point4 point_at(double s) const;
    // Right-continuous derivative at s (at a vertex the outgoing segment wins).
    Point4 velocity_at(double s) const;

    // New loop with the same orientation starting at vertex `offset`.
    PLLoop rotated(int offset) const;
    // New loop traversed in the opposite direction.
    PLLoop reversed() const;
    // Rigid translation.
    PLLoop translated(const Point4& d) const;

    // Axis-aligned bounding box corner points of the R^4 vertex set.
    std::pair<Point4, Point4> bounding_box() const;

private:
    std::vector<Point4> vertices_;
    std::vector<double> cumulative_;  // size n+1, cumulative_[0]=0, cumulative_[n]=1
    double total_length_ = 0.0;
};

struct Hyperlink {
    std::vector<PLLoop> loops;
    std::vector<std::string> labels;  // optional; empty or one per loop

    int size() const { return static_cast<int>(loops.size()); }
};

// A hyperlink with a representation pair (j+, j-) attached to each loop.
struct ColoredHyperlink {
    Hyperlink base;
    std::vector<SpinPair> colors;  // one per loop

    int size() const { return base.size(); }

    // Distinct colors in first-appearance order together with the member
    // loop indices carrying each color.
    struct ColorClass {
        SpinPair color;
        std::vector<int> members;
    };
    std::vector<ColorClass> color_classes() const;
};

// ---------------------------------------------------------------------------
// Planar surfaces
// ---------------------------------------------------------------------------

// An oriented polygonal region of the x2-x3 plane, embedded in R^4 at
// x0 = 0, x1 = 0.  Multiple components, each an outer boundary plus holes.
// normal_sign gives the orientation of the surface normal along +x1.
struct PlanarSurface {
    using Ring = std::vector<Vec2>;  // polygon boundary, >= 3 vertices
    struct Component {
        Ring outer;
        std::vector<Ring> holes;
    };

    std::vector<Component> components;
    int normal_sign = +1;

    enum class Location { Outside, Inside, NearBoundary };

    // Even-odd containment over all rings; NearBoundary when within eps of an edge.
    Location locate(Vec2 p, double eps) const;

    std::pair<Vec2, Vec2> bounding_box() const;
    double boundary_distance(Vec2 p) const;

    // Structural checks: simple rings, holes inside outers, disjoint components.
    // Throws std::invalid_argument with a description on failure.
    void check_structure(double eps) const;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
    enum class Kind {
        SpatialCoincidence,    // two points with equal spatial coordinates (condition a)
        SelfIntersection,      // R^4 self-intersection of one loop
        PlaneCoincidence,      // two spatial coords shared and |x0 - y0| <= eps (condition b)
        DegenerateProjection,  // overlapping projected segments; diagram would be ambiguous
    };
    Kind kind;
    int loop_a = -1, loop_b = -1;
    double s = 0.0, t = 0.0;    // parameter locations of the witness pair
    Point4 witness_a, witness_b;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Scale-relative default tolerance: 1e-9 times the R^4 bounding-box diameter.
double default_eps(const Hyperlink& h);

// Checks the two time-likeness conditions on a hyperlink:
//  (a) distinct points have distinct spatial projections (verified exactly on
//      all segment pairs via closest-point minimisation);
//  (b) points sharing two spatial coordinates are separated in time (verified
//      at every projected-diagram coincidence, including self-crossings).
ValidationReport validate_timelike(const Hyperlink& h, double eps_gen = 0.0);

// Drop coordinate `axis` (0..3) from every vertex; returns one 3-d polyline
// per loop, orientation preserved, remaining coordinates in index order.
std::vector<std::vector<Vec3>> project(const Hyperlink& h, int axis);

// ---------------------------------------------------------------------------
// Low-level geometric primitives (shared with the diagram/piercing modules)
// ---------------------------------------------------------------------------
namespace detail {

// Closest pair of parameters between 3-d segments a0+u*(a1-a0), b0+v*(b1-b0).
struct SegmentClosest {
    double u = 0.0, v = 0.0;
    double dist = 0.0;
};
SegmentClosest closest_segment_segment(Vec3 a0, Vec3 a1, Vec3 b0, Vec3 b1);

// Transverse interior intersection of 2-d segments, if any.
struct SegIntersect2 {
    enum class Status { None, Proper, NearEndpoint, CollinearOverlap, Touch };
    Status status = Status::None;
    double u = 0.0, v = 0.0;  // local parameters in [0,1]
    Vec2 point;
};
SegIntersect2 intersect_segments_2d(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double eps);

double point_segment_distance_2d(Vec2 p, Vec2 a, Vec2 b);

}  // namespace detail

}  // namespace hlx
