#include <doctest.h>

#include <stdexcept>

#include "hlx/errors.hpp"
#include "hlx/examples.hpp"
#include "hlx/piercing.hpp"
#include "hlx/surface_mesh.hpp"

using namespace hlx;

TEST_CASE("a loop on one side of the plane has no piercings") {
    const PLLoop l({{-0.2, 1, 0, 0}, {-0.2, 2, 0, 0.1}, {-0.2, 2, 1, 0.2}, {-0.2, 1, 1, 0.15}});
    CHECK(find_piercings(l, examples::disk_surface()).empty());
    CHECK(piercing_count(l, examples::disk_surface()) == 0);
    CHECK(linking_number_surface(l, examples::disk_surface()) == 0);
}

TEST_CASE("cancelling circle: two piercings, opposite orientations, lk = 0") {
    const Hyperlink h = examples::cancelling_piercings();
    const auto piercings = find_piercings(h.loops[0], examples::disk_surface());
    REQUIRE(piercings.size() == 2);
    CHECK(piercings[0].orientation == -piercings[1].orientation);
    CHECK(piercings[0].height == +1);
    CHECK(piercings[1].height == +1);
    CHECK(linking_number_surface(h.loops[0], examples::disk_surface()) == 0);
    CHECK(piercing_count(h.loops[0], examples::disk_surface()) == 2);
}

TEST_CASE("the same circle misses the annulus") {
    const Hyperlink h = examples::cancelling_piercings();
    CHECK(piercing_count(h.loops[0], examples::annulus_surface()) == 0);
    CHECK(linking_number_surface(h.loops[0], examples::annulus_surface()) == 0);
}

TEST_CASE("single piercing: count 1, lk +1, sign table") {
    const PLLoop l = examples::one_piercing().base.loops[0];
    const PlanarSurface disk = examples::disk_surface();
    const auto piercings = find_piercings(l, disk);
    REQUIRE(piercings.size() == 1);
    CHECK(piercings[0].orientation == +1);  // crosses along +x1, normal_sign +1
    CHECK(piercings[0].height == +1);       // sits at time -0.25
    CHECK(linking_number_surface(l, disk) == +1);

    SUBCASE("reversing the loop negates lk, count unchanged") {
        CHECK(linking_number_surface(l.reversed(), disk) == -1);
        CHECK(piercing_count(l.reversed(), disk) == 1);
    }
    SUBCASE("flipping the surface normal negates lk") {
        PlanarSurface flipped = disk;
        flipped.normal_sign = -1;
        CHECK(linking_number_surface(l, flipped) == -1);
    }
    SUBCASE("time translation without crossing x0 = 0 preserves everything") {
        const auto moved = find_piercings(l.translated({-3.0, 0, 0, 0}), disk);
        REQUIRE(moved.size() == 1);
        CHECK(moved[0].orientation == piercings[0].orientation);
        CHECK(moved[0].height == piercings[0].height);
    }
    SUBCASE("crossing x0 = 0 flips every height sign") {
        const auto moved = find_piercings(l.translated({+1.0, 0, 0, 0}), disk);
        REQUIRE(moved.size() == 1);
        CHECK(moved[0].height == -piercings[0].height);
        CHECK(linking_number_surface(l.translated({+1.0, 0, 0, 0}), disk) == -1);
    }
}

TEST_CASE("cyclic rotation changes neither lk nor the count") {
    const PlanarSurface disk = examples::disk_surface();
    const PLLoop circle = examples::cancelling_piercings().loops[0];
    CHECK(linking_number_surface(circle.rotated(7), disk) ==
          linking_number_surface(circle, disk));
    CHECK(piercing_count(circle.rotated(7), disk) == piercing_count(circle, disk));
}

TEST_CASE("|lk| is bounded by the piercing count") {
    const PlanarSurface disk = examples::disk_surface();
    const Hyperlink canc = examples::cancelling_piercings();
    CHECK(std::abs(linking_number_surface(canc.loops[0], disk)) <=
          piercing_count(canc.loops[0], disk));
    const PLLoop one = examples::one_piercing().base.loops[0];
    CHECK(std::abs(linking_number_surface(one, disk)) == piercing_count(one, disk));
}

TEST_CASE("hyperlink lk sums over components") {
    const PlanarSurface disk = examples::disk_surface();
    Hyperlink two;
    const Hyperlink canc = examples::cancelling_piercings();
    two.loops = {canc.loops[0], canc.loops[0].translated({-0.1, 0, 0.35, 0.2})};
    REQUIRE(validate_timelike(two).valid());
    CHECK(hyperlink_lk(two, disk) == 0);
    const auto all = find_piercings(two, disk);
    CHECK(all.size() == 4);
    CHECK(all[0].loop_index == 0);
    CHECK(all[3].loop_index == 1);
}

TEST_CASE("degenerate geometry is rejected with witnesses") {
    const PlanarSurface disk = examples::disk_surface();
    SUBCASE("plane crossing near the polygon boundary") {
        // Crosses x1 = 0 at (x2, x3) ~ (1.96, 0.05): inside, but within the
        // explicit 0.05 tolerance of the 24-gon rim.
        const PLLoop l({{-0.2, -1, 1.96, 0}, {-0.2, 1, 1.96, 0.1}, {-0.2, 1, 6, 0.3},
                        {-0.2, -1, 6, 0.2}});
        CHECK_THROWS_AS(find_piercings(l, disk, 0.05), DegeneratePiercing);
    }
    SUBCASE("segment lying in the plane x1 = 0") {
        const PLLoop l({{-0.2, 0, 0, 0}, {-0.2, 0, 1, 0.1}, {-0.2, 1, 1, 0.3},
                        {-0.2, 1, 0, 0.2}});
        CHECK_THROWS_AS(find_piercings(l, disk), DegeneratePiercing);
    }
    SUBCASE("vanishing time coordinate at a piercing") {
        const PLLoop l({{0.0, -1, 0, 0}, {0.0, 1, 0, 0.05}, {0.0, 1, 5, 0.15},
                        {0.0, -1, 5, 0.10}});
        CHECK_THROWS_AS(find_piercings(l, disk), DegeneratePiercing);
    }
}

TEST_CASE("partition disks follow the half-distance rule") {
    const ColoredHyperlink two = examples::two_loop_colored();
    const PlanarSurface disk = examples::disk_surface();
    const auto piercings = find_piercings(two.base, disk);
    REQUIRE(piercings.size() == 2);
    const auto part = make_surface_partition(piercings, {0, 1}, disk, 2, 1.0);
    REQUIRE(part.disks.size() == 2);
    const double gap = (piercings[0].point - piercings[1].point).norm();
    for (const auto& d : part.disks) {
        CHECK(d.radius <= 0.5 * gap + 1e-12);
        CHECK(d.radius <= disk.boundary_distance(d.center) + 1e-12);
        CHECK(d.radius > 0.0);
    }
    CHECK(part.class_at(piercings[0].point) == 0);
    CHECK(part.class_at(piercings[1].point) == 1);
    CHECK(part.class_at(Vec2{1.8, -1.8}) == 0);  // remainder goes to the first class

    const auto half = make_surface_partition(piercings, {0, 1}, disk, 2, 0.5);
    CHECK(half.disks[0].radius == doctest::Approx(0.5 * part.disks[0].radius));
}

TEST_CASE("triangulation covers the surface area") {
    const PlanarSurface disk = examples::disk_surface();
    double area = 0.0;
    for (const Triangle& t : triangulate(disk)) {
        CHECK(t.area() > 0.0);
        area += t.area();
    }
    // 24-gon of radius 2: area = 0.5 n r^2 sin(2 pi / n).
    CHECK(area == doctest::Approx(0.5 * 24 * 4.0 * std::sin(2.0 * M_PI / 24)).epsilon(1e-12));

    const PlanarSurface ann = examples::annulus_surface();
    double ann_area = 0.0;
    for (const Triangle& t : triangulate(ann)) {
        CHECK(t.area() > 0.0);
        ann_area += t.area();
    }
    const double outer = 0.5 * 32 * 16.0 * std::sin(2.0 * M_PI / 32);
    const double hole = 0.5 * 24 * 9.0 * std::sin(2.0 * M_PI / 24);
    CHECK(ann_area == doctest::Approx(outer - hole).epsilon(1e-9));
}

TEST_CASE("surface structural checks") {
    PlanarSurface bad = examples::disk_surface();
    bad.normal_sign = 2;
    CHECK_THROWS_AS(bad.check_structure(1e-9), std::invalid_argument);

    PlanarSurface nested = examples::annulus_surface();
    // A hole outside the outer ring is rejected.
    PlanarSurface::Ring far_ring;
    for (int m = 0; m < 8; ++m) {
        const double th = 2.0 * M_PI * m / 8;
        far_ring.push_back({10.0 + std::cos(th), std::sin(th)});
    }
    nested.components[0].holes.push_back(far_ring);
    CHECK_THROWS_AS(nested.check_structure(1e-9), std::invalid_argument);
}
