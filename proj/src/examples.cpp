#include "hlx/examples.hpp"

#include <cmath>
#include <stdexcept>

#include "hlx/documents.hpp"

#include <nlohmann/json.hpp>

namespace hlx::examples {

namespace {

constexpr double kTau = 6.28318530717958647692;

// Regular N-gon of radius r in the spatial plane spanned by axes (i, j),
// with a tilt eps*r*(cos + sin) on the remaining spatial axis so that all
// three coordinate-pair projections stay embedded.
PLLoop tilted_circle(Point4 center, double r, int axis_i, int axis_j, double tilt,
                     double phase, int n) {
    const int axis_k = 6 - axis_i - axis_j;  // spatial axes are {1,2,3}
    std::vector<Point4> v;
    v.reserve(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        const double th = kTau * (m + phase) / n;
        std::array<double, 4> p{center.x0, center.x1, center.x2, center.x3};
        p[static_cast<size_t>(axis_i)] += r * std::cos(th);
        p[static_cast<size_t>(axis_j)] += r * std::sin(th);
        p[static_cast<size_t>(axis_k)] += tilt * r * (std::cos(th) + std::sin(th));
        v.push_back({p[0], p[1], p[2], p[3]});
    }
    return PLLoop(std::move(v));
}

PlanarSurface::Ring circle_ring(double r, int n, double phase) {
    PlanarSurface::Ring ring;
    for (int m = 0; m < n; ++m) {
        const double th = kTau * (m + phase) / n;
        ring.push_back({r * std::cos(th), r * std::sin(th)});
    }
    return ring;
}

PLLoop piercing_rectangle(double time, double x2_offset, double x3_offset) {
    return PLLoop({{time, -1.0, x2_offset + 0.0, x3_offset + 0.00},
                   {time, 1.0, x2_offset + 0.0, x3_offset + 0.05},
                   {time, 1.0, x2_offset + 5.0, x3_offset + 0.15},
                   {time, -1.0, x2_offset + 5.0, x3_offset + 0.10}});
}

}  // namespace

Hyperlink two_circles() {
    Hyperlink h;
    const double d = 5.0 / std::sqrt(3.0);
    h.loops.push_back(tilted_circle({0, 0, 0, 0}, 1.0, 1, 2, 0.08, 0.35, 16));
    h.loops.push_back(tilted_circle({0, d, d, d}, 1.0, 1, 2, -0.06, 0.15, 16));
    h.labels = {"a", "b"};
    return h;
}

Hyperlink hopf_pair() {
    Hyperlink h;
    // Loop 0 rings the x1-x2 plane; loop 1 threads it through the origin,
    // offset to time 0.5.
    h.loops.push_back(tilted_circle({0.0, 0, 0, 0}, 1.0, 1, 2, 0.08, 0.35, 16));
    h.loops.push_back(tilted_circle({0.5, 0, 1, 0}, 1.0, 2, 3, 0.06, 0.15, 16));
    h.labels = {"matter", "geometric"};
    return h;
}

ColoredHyperlink hopf_matter() {
    const Hyperlink pair = hopf_pair();
    ColoredHyperlink m;
    m.base.loops = {pair.loops[0]};
    m.base.labels = {"matter"};
    m.colors = {{Spin(1), Spin(1)}};
    return m;
}

Hyperlink hopf_geometric() {
    const Hyperlink pair = hopf_pair();
    Hyperlink g;
    g.loops = {pair.loops[1]};
    g.labels = {"geometric"};
    return g;
}

ColoredHyperlink one_piercing() {
    ColoredHyperlink m;
    m.base.loops = {piercing_rectangle(-0.25, 0.0, 0.0)};
    m.base.labels = {"probe"};
    m.colors = {{Spin(1), Spin(1)}};
    return m;
}

Hyperlink cancelling_piercings() {
    Hyperlink h;
    h.loops.push_back(tilted_circle({-0.25, 0, 0, 0}, 1.0, 1, 2, 0.07, 0.30, 16));
    h.labels = {"circle"};
    return h;
}

ColoredHyperlink two_loop_colored() {
    ColoredHyperlink m;
    m.base.loops = {piercing_rectangle(-0.25, 0.0, 0.0), piercing_rectangle(-0.30, -1.0, 0.30)};
    m.base.labels = {"probe-a", "probe-b"};
    m.colors = {{Spin(1), Spin(1)}, {Spin(2), Spin(1)}};
    return m;
}

PlanarSurface disk_surface() {
    PlanarSurface s;
    s.components.push_back({circle_ring(2.0, 24, 0.5), {}});
    s.normal_sign = +1;
    return s;
}

PlanarSurface annulus_surface() {
    PlanarSurface s;
    PlanarSurface::Component c;
    c.outer = circle_ring(4.0, 32, 0.5);
    c.holes.push_back(circle_ring(3.0, 24, 0.25));
    s.components.push_back(std::move(c));
    s.normal_sign = +1;
    return s;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"two-circles", "hopf-pair", "one-piercing",
                                               "cancelling-piercings", "two-loop-colored"};
    return n;
}

std::vector<std::string> write(const std::string& name, const std::string& dir) {
    const std::string base = dir.empty() ? std::string(".") : dir;
    auto path = [&](const char* file) { return base + "/" + name + "-" + file; };
    std::vector<std::string> written;
    auto emit = [&](const char* file, const nlohmann::json& j) {
        const std::string p = path(file);
        write_json_file(p, j);
        written.push_back(p);
    };

    if (name == "two-circles") {
        emit("hyperlink.json", to_json(two_circles()));
    } else if (name == "hopf-pair") {
        emit("hyperlink.json", to_json(hopf_pair()));
        emit("matter.json", to_json(hopf_matter()));
        emit("geometric.json", to_json(hopf_geometric()));
    } else if (name == "one-piercing") {
        emit("matter.json", to_json(one_piercing()));
        emit("surface.json", to_json(disk_surface()));
    } else if (name == "cancelling-piercings") {
        emit("hyperlink.json", to_json(cancelling_piercings()));
        emit("surface.json", to_json(disk_surface()));
        emit("annulus.json", to_json(annulus_surface()));
    } else if (name == "two-loop-colored") {
        emit("matter.json", to_json(two_loop_colored()));
        emit("surface.json", to_json(disk_surface()));
    } else {
        throw std::invalid_argument("unknown example '" + name + "'");
    }
    return written;
}

}  // namespace hlx::examples
