#include "hlx/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hlx {

std::vector<GLNode> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::vector<GLNode> nodes(static_cast<size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[static_cast<size_t>(i)] = {-x, w};
        nodes[static_cast<size_t>(n - 1 - i)] = {x, w};
    }
    return nodes;
}

std::vector<ParamCell> build_loop_mesh(const PLLoop& loop,
                                       const std::vector<double>& refine_centers,
                                       double window_halfwidth, int refinement_factor) {
    std::vector<double> cuts;
    for (int i = 0; i <= loop.vertex_count(); ++i) {
        cuts.push_back(i < loop.vertex_count() ? loop.param_of_vertex(i) : 1.0);
    }
    const int sub = std::max(1, refinement_factor);
    auto add_window = [&](double lo, double hi) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, 1.0);
        if (hi - lo <= 0.0) return;
        for (int k = 0; k <= sub; ++k) {
            cuts.push_back(lo + (hi - lo) * k / sub);
        }
    };
    for (double c : refine_centers) {
        const double lo = c - window_halfwidth;
        const double hi = c + window_halfwidth;
        add_window(lo, hi);
        if (lo < 0.0) add_window(lo + 1.0, 1.0);  // windows wrap around s = 0
        if (hi > 1.0) add_window(0.0, hi - 1.0);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-13; }),
               cuts.end());
    if (cuts.front() > 0.0) cuts.insert(cuts.begin(), 0.0);
    if (cuts.back() < 1.0) cuts.push_back(1.0);

    std::vector<ParamCell> mesh;
    mesh.reserve(cuts.size());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] > 1e-13) mesh.push_back({cuts[i], cuts[i + 1]});
    }
    return mesh;
}

LoopNodes loop_quadrature_nodes(const PLLoop& loop, const std::vector<ParamCell>& mesh,
                                int points_per_cell) {
    const auto rule = gauss_legendre(std::max(2, points_per_cell));
    LoopNodes out;
    out.s.reserve(mesh.size() * rule.size());
    for (const ParamCell& cell : mesh) {
        const double mid = 0.5 * (cell.s0 + cell.s1);
        const double half = 0.5 * (cell.s1 - cell.s0);
        const int seg = loop.segment_of(mid);
        const Point4 a = loop.segment_a(seg);
        const Point4 vel = loop.segment_velocity(seg);
        const double seg0 = loop.segment_start(seg);
        for (const GLNode& g : rule) {
            const double s = mid + half * g.x;
            out.s.push_back(s);
            out.w.push_back(half * g.w);
            out.pos.push_back(a + vel * (s - seg0));
            out.vel.push_back(vel.spatial());
            out.vel0.push_back(vel.x0);
        }
    }
    return out;
}

const std::vector<BarycentricNode>& triangle_rule_7() {
    static const std::vector<BarycentricNode> rule = [] {
        const double s15 = std::sqrt(15.0);
        const double a = (6.0 - s15) / 21.0;
        const double b = (6.0 + s15) / 21.0;
        const double wa = (155.0 - s15) / 1200.0;
        const double wb = (155.0 + s15) / 1200.0;
        std::vector<BarycentricNode> r;
        r.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0});
        r.push_back({a, a, 1.0 - 2.0 * a, wa});
        r.push_back({a, 1.0 - 2.0 * a, a, wa});
        r.push_back({1.0 - 2.0 * a, a, a, wa});
        r.push_back({b, b, 1.0 - 2.0 * b, wb});
        r.push_back({b, 1.0 - 2.0 * b, b, wb});
        r.push_back({1.0 - 2.0 * b, b, b, wb});
        return r;
    }();
    return rule;
}

namespace {
std::atomic<int> g_workers{0};

int detect_workers() {
    if (const char* env = std::getenv("HLX_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}
}  // namespace

int worker_count() {
    int w = g_workers.load(std::memory_order_relaxed);
    if (w <= 0) {
        w = detect_workers();
        g_workers.store(w, std::memory_order_relaxed);
    }
    return w;
}

void set_worker_count(int n) {
    g_workers.store(n > 0 ? n : detect_workers(), std::memory_order_relaxed);
}

}  // namespace hlx
