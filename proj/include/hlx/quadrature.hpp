#pragma once

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

struct GLNode {
    double x;  // abscissa on [-1, 1]
    double w;
};

// Nodes and weights of the n-point Gauss-Legendre rule (Newton on P_n).
std::vector<GLNode> gauss_legendre(int n);

// ---------------------------------------------------------------------------
// Loop parameter meshes
// ---------------------------------------------------------------------------

// A partition of the loop parameter domain [0,1] into cells, each contained
// in one linear segment.  Refinement windows around given parameters are split
// into `refinement_factor` subcells, so the fixed per-cell rule concentrates
// nodes there.
struct ParamCell {
    double s0 = 0.0, s1 = 0.0;
};

std::vector<ParamCell> build_loop_mesh(const PLLoop& loop,
                                       const std::vector<double>& refine_centers,
                                       double window_halfwidth, int refinement_factor);

// Quadrature nodes along a loop: positions, spatial/time velocities, weights.
struct LoopNodes {
    std::vector<double> s;
    std::vector<double> w;
    std::vector<Point4> pos;
    std::vector<Vec3> vel;     // spatial d/ds
    std::vector<double> vel0;  // time d/ds

    size_t size() const { return s.size(); }
};

LoopNodes loop_quadrature_nodes(const PLLoop& loop, const std::vector<ParamCell>& mesh,
                                int points_per_cell);

// ---------------------------------------------------------------------------
// Triangle rule (degree 5, 7 points)
// ---------------------------------------------------------------------------

struct BarycentricNode {
    double a, b, c;
    double w;  // relative to unit total area
};

const std::vector<BarycentricNode>& triangle_rule_7();

// ---------------------------------------------------------------------------
// Deterministic parallel reduction
// ---------------------------------------------------------------------------

// Worker count from HLX_WORKERS (default: hardware concurrency).
int worker_count();
void set_worker_count(int n);  // n <= 0 restores the default

// Runs f(i) for i in [0,n), chunked across workers.  Each index writes only
// its own slots, so results are independent of the thread count.
template <typename F>
void parallel_for(size_t n, F&& f) {
    const int workers = worker_count();
    if (workers <= 1 || n < 32) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const size_t chunk =
        (n + static_cast<size_t>(workers) * 4 - 1) / (static_cast<size_t>(workers) * 4);
    std::vector<std::future<void>> jobs;
    for (size_t begin = 0; begin < n; begin += chunk) {
        const size_t end = std::min(n, begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&f, begin, end] {
            for (size_t i = begin; i < end; ++i) f(i);
        }));
    }
    for (auto& j : jobs) j.get();
}

// Evaluates f(i) for i in [0,n) possibly in parallel, then sums the stored
// results in index order, so the value is independent of the thread count.
template <typename T, typename F>
T parallel_sum(size_t n, F&& f) {
    std::vector<T> partial(n);
    parallel_for(n, [&](size_t i) { partial[i] = f(i); });
    T total{};
    for (size_t i = 0; i < n; ++i) total += partial[i];
    return total;
}

}  // namespace hlx
