#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hlx/examples.hpp"
#include "hlx/geometry.hpp"
#include "oracles.hpp"

using namespace hlx;

namespace {

PLLoop unit_square() {
    return PLLoop({{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0}});
}

bool has_kind(const ValidationReport& r, Violation::Kind k) {
    for (const auto& v : r.violations) {
        if (v.kind == k) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("loop construction rejects bad input") {
    CHECK_THROWS_AS(PLLoop({{0, 0, 0, 0}, {0, 1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PLLoop({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("loop_point endpoints and arc-length midpoints") {
    const PLLoop sq = unit_square();
    CHECK((sq.point_at(0.0) - sq.vertex(0)).norm() == doctest::Approx(0.0));
    CHECK((sq.point_at(1.0) - sq.vertex(0)).norm() == doctest::Approx(0.0));
    // Arc-length parametrisation: s = 1/2 lands on the diagonally opposite corner.
    CHECK((sq.point_at(0.5) - sq.vertex(2)).norm() == doctest::Approx(0.0));

    const PLLoop tri({{0, 0, 0, 0}, {0, 2, 0, 0}, {0, 2, 2, 0}});
    // Equal first two edges: s at (first edge length / total) hits vertex 1.
    const double s1 = 2.0 / (4.0 + std::sqrt(8.0));
    CHECK((tri.point_at(s1) - tri.vertex(1)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("unit square: s=0.125 is the first edge midpoint, speed is 4x edge") {
    const PLLoop sq = unit_square();
    const Point4 p = sq.point_at(0.125);
    CHECK(p.x1 == doctest::Approx(0.5));
    CHECK(p.x2 == doctest::Approx(0.0));
    const Point4 v = sq.velocity_at(0.125);
    CHECK(v.norm() == doctest::Approx(4.0));  // total length over unit parameter
    // Right-continuous at vertices: outgoing segment direction.
    const Point4 v0 = sq.velocity_at(0.25);
    CHECK(v0.x2 == doctest::Approx(4.0));
    CHECK(v0.x1 == doctest::Approx(0.0));
}

TEST_CASE("loop_point is Lipschitz with constant total_length") {
    const Hyperlink h = examples::hopf_pair();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const PLLoop& l : h.loops) {
        for (int trial = 0; trial < 200; ++trial) {
            const double s = u(rng), t = u(rng);
            const double lhs = (l.point_at(s) - l.point_at(t)).norm();
            CHECK(lhs <= l.total_length() * std::abs(s - t) + 1e-12);
        }
    }
}

TEST_CASE("project drops the requested axis and round-trips") {
    Hyperlink h;
    h.loops.push_back(PLLoop({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}}));
    const auto p0 = project(h, 0);
    CHECK(p0[0][0].x == doctest::Approx(2.0));
    CHECK(p0[0][0].y == doctest::Approx(3.0));
    CHECK(p0[0][0].z == doctest::Approx(4.0));
    const auto p1 = project(h, 1);
    CHECK(p1[0][1].x == doctest::Approx(5.0));  // x0 kept in front
    CHECK(p1[0][1].y == doctest::Approx(7.0));
    CHECK(p1[0][1].z == doctest::Approx(8.0));

    // Re-lifting with the dropped coordinate restores the input.
    for (int axis = 0; axis <= 3; ++axis) {
        const auto proj = project(h, axis);
        for (int i = 0; i < h.loops[0].vertex_count(); ++i) {
            const Point4 orig = h.loops[0].vertex(i);
            const std::array<double, 4> c{orig.x0, orig.x1, orig.x2, orig.x3};
            const Vec3& q = proj[0][static_cast<size_t>(i)];
            const std::array<double, 3> qc{q.x, q.y, q.z};
            int k = 0;
            for (int a = 0; a < 4; ++a) {
                const double lifted = (a == axis) ? c[static_cast<size_t>(a)]
                                                  : qc[static_cast<size_t>(k++)];
                CHECK(lifted == c[static_cast<size_t>(a)]);
            }
        }
    }
}

TEST_CASE("two far-apart circles validate") {
    CHECK(validate_timelike(examples::two_circles()).valid());
}

TEST_CASE("a loop and its time-shifted spatial copy are invalid") {
    Hyperlink h = examples::two_circles();
    h.loops = {h.loops[0], h.loops[0].translated({1.0, 0, 0, 0})};
    const auto rep = validate_timelike(h);
    CHECK_FALSE(rep.valid());
    CHECK(has_kind(rep, Violation::Kind::SpatialCoincidence));
}

TEST_CASE("spatially tangent circles are invalid with a located witness") {
    // Mirrored tilts make two polygon vertices coincide spatially at
    // (1, 0, 0.08); the loops sit at different times so only condition (a)
    // trips, exactly at the tangency.
    std::vector<Point4> a, b;
    for (int m = 0; m < 16; ++m) {
        const double th = 2.0 * M_PI * m / 16;
        a.push_back({0.0, std::cos(th), std::sin(th), 0.08 * (std::cos(th) + std::sin(th))});
        const double ph = 2.0 * M_PI * (m + 8- 0.0) / 16;  // vertex 8 lands at angle pi
        b.push_back({0.7, 2.0 + std::cos(ph), std::sin(ph), -0.08 * (std::cos(ph) + std::sin(ph))});
    }
    Hyperlink h;
    h.loops = {PLLoop(a), PLLoop(b)};
    const auto rep = validate_timelike(h, 1e-9);
    CHECK_FALSE(rep.valid());
    REQUIRE(has_kind(rep, Violation::Kind::SpatialCoincidence));
    bool witness_at_touch = false;
    for (const auto& v : rep.violations) {
        if (v.kind == Violation::Kind::SpatialCoincidence &&
            (v.witness_a.spatial() - Vec3{1.0, 0.0, 0.08}).norm() < 1e-6) {
            witness_at_touch = true;
        }
    }
    CHECK(witness_at_touch);
}

TEST_CASE("a planar constant-time circle fails condition (b)") {
    // Untilted: the projection dropping x2 collapses to a doubled segment, so
    // mirror points share two spatial coordinates at equal time.
    std::vector<Point4> v;
    for (int m = 0; m < 16; ++m) {
        const double th = 2.0 * M_PI * (m + 0.35) / 16;
        v.push_back({0.0, std::cos(th), std::sin(th), 0.0});
    }
    Hyperlink h;
    h.loops.emplace_back(std::move(v));
    const auto rep = validate_timelike(h);
    CHECK_FALSE(rep.valid());
    CHECK(has_kind(rep, Violation::Kind::PlaneCoincidence));
}

TEST_CASE("cyclic vertex rotation preserves the validation verdict") {
    Hyperlink h = examples::hopf_pair();
    CHECK(validate_timelike(h).valid());
    h.loops[0] = h.loops[0].rotated(5);
    h.loops[1] = h.loops[1].rotated(11);
    CHECK(validate_timelike(h).valid());
}

TEST_CASE("pi_0 of a valid time-like hyperlink is an embedded link") {
    const Hyperlink h = examples::hopf_pair();
    REQUIRE(validate_timelike(h).valid());
    for (size_t la = 0; la < h.loops.size(); ++la) {
        for (size_t lb = la; lb < h.loops.size(); ++lb) {
            const PLLoop& A = h.loops[la];
            const PLLoop& B = h.loops[lb];
            for (int i = 0; i < A.segment_count(); ++i) {
                for (int j = 0; j < B.segment_count(); ++j) {
                    if (la == lb) {
                        const int n = A.segment_count();
                        if (i == j || j == (i + 1) % n || i == (j + 1) % n) continue;
                    }
                    const auto c = detail::closest_segment_segment(
                        A.segment_a(i).spatial(), A.segment_b(i).spatial(),
                        B.segment_a(j).spatial(), B.segment_b(j).spatial());
                    CHECK(c.dist > 1e-6);
                }
            }
        }
    }
}

TEST_CASE("default tolerance scales with the model") {
    const double eps = default_eps(examples::two_circles());
    CHECK(eps > 0.0);
    CHECK(eps < 1e-7);
}

TEST_CASE("color classes group loops by representation") {
    const ColoredHyperlink two = examples::two_loop_colored();
    const auto classes = two.color_classes();
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].members == std::vector<int>{0});
    CHECK(classes[1].members == std::vector<int>{1});

    ColoredHyperlink same = two;
    same.colors[1] = same.colors[0];
    CHECK(same.color_classes().size() == 1);
    CHECK(same.color_classes()[0].members == std::vector<int>{0, 1});
}

TEST_CASE("spin parsing") {
    CHECK(Spin::from_double(0.5).twice == 1);
    CHECK(Spin::from_double(2.0).dim() == 5);
    CHECK_THROWS_AS(Spin::from_double(0.3), std::invalid_argument);
    CHECK_THROWS_AS(Spin::from_double(-0.5), std::invalid_argument);
}
