#include "hlx/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hlx/diagram.hpp"
#include "hlx/piercing.hpp"
#include "hlx/quadrature.hpp"
#include "hlx/representation.hpp"
#include "hlx/surface_mesh.hpp"

namespace hlx {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);

double cross_component(const Vec3& u, const Vec3& v, int k) {
    switch (k) {
        case 1: return u.y * v.z - u.z * v.y;
        case 2: return u.z * v.x - u.x * v.z;
        default: return u.x * v.y - u.y * v.x;
    }
}

LoopNodes make_nodes(const PLLoop& loop, const std::vector<double>& centers,
                     const QuadratureConfig& cfg) {
    const double hw = (cfg.refinement_radius / cfg.kappa) / loop.total_length();
    const auto mesh = build_loop_mesh(loop, centers, hw, cfg.refinement_factor);
    return loop_quadrature_nodes(loop, mesh, cfg.base_points_per_segment);
}

// Surface quadrature nodes: triangulate, subdivide to a coarse target, then
// refine triangles near the given points down to a fraction of 1/kappa.
struct SurfaceNodes {
    std::vector<Vec2> pos;
    std::vector<double> w;  // positive area weights; orientation applied by callers
};

SurfaceNodes make_surface_nodes(const PlanarSurface& S, const std::vector<Vec2>& refine_points,
                                const QuadratureConfig& cfg) {
    auto [lo, hi] = S.bounding_box();
    const double diam = (hi - lo).norm();
    const double coarse = std::max(diam / 8.0, 1e-12);
    const double disk = cfg.refinement_radius / cfg.kappa;
    const double fine = 4.0 * std::sqrt(2.0) / (cfg.kappa * std::max(1, cfg.refinement_factor));

    std::vector<Triangle> work = triangulate(S);
    std::vector<Triangle> done;
    while (!work.empty()) {
        Triangle t = work.back();
        work.pop_back();
        bool split = t.diameter() > coarse;
        if (!split && t.diameter() > fine) {
            for (const Vec2& p : refine_points) {
                if (t.intersects_disk(p, disk)) {
                    split = true;
                    break;
                }
            }
        }
        if (split) {
            for (const Triangle& c : subdivide(t)) work.push_back(c);
        } else {
            done.push_back(t);
        }
    }

    const auto& rule = triangle_rule_7();
    SurfaceNodes out;
    out.pos.reserve(done.size() * rule.size());
    for (const Triangle& t : done) {
        const double area = t.area();
        for (const BarycentricNode& n : rule) {
            out.pos.push_back(t.a * n.a + t.b * n.b + t.c * n.c);
            out.w.push_back(area * n.w);
        }
    }
    return out;
}

// Inner loop kernel of the surface integrals:
//   sqrt(2 pi) sum_i w_i y_1'(s_i) exp(-kappa^2 |y_i - sigma|^2 / 8) erf(-c1 y_0(s_i))
// evaluated at the surface point sigma = (0, p.x, p.y); charge factors are
// applied by callers.
double loop_surface_kernel(const LoopNodes& nodes, Vec2 p, double kappa) {
    const double c1 = kappa / (2.0 * std::sqrt(2.0));
    const double g = kappa * kappa / 8.0;
    double acc = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const Point4& y = nodes.pos[i];
        const double dx = y.x1;
        const double dy = y.x2 - p.x;
        const double dz = y.x3 - p.y;
        const double e = g * (dx * dx + dy * dy + dz * dz);
        if (e > 700.0) continue;
        acc += nodes.w[i] * nodes.vel[i].x * std::exp(-e) * std::erf(-c1 * y.x0);
    }
    return kSqrt2Pi * acc;
}

std::vector<double> crossing_params(const PLLoop& a, const PLLoop& b, double eps, bool first) {
    std::vector<double> out;
    for (int plane = 1; plane <= 3; ++plane) {
        for (const Crossing& c : find_crossings(a, b, plane, eps)) {
            out.push_back(first ? c.s : c.t);
        }
    }
    return out;
}

double sk_quadrature(const PLLoop& a, const PLLoop& b, const QuadratureConfig& cfg) {
    const auto sa = crossing_params(a, b, cfg.eps_gen, true);
    const auto sb = crossing_params(a, b, cfg.eps_gen, false);
    const LoopNodes na = make_nodes(a, sa, cfg);
    const LoopNodes nb = make_nodes(b, sb, cfg);

    const double kappa = cfg.kappa;
    const double c1 = kappa / (2.0 * std::sqrt(2.0));
    const double g = kappa * kappa / 8.0;
    const double prefactor = kappa * kappa / (8.0 * kPi);

    const double total = parallel_sum<double>(na.size(), [&](size_t i) {
        const Point4& pa = na.pos[i];
        const Vec3& va = na.vel[i];
        const double wa = na.w[i];
        double acc = 0.0;
        for (size_t j = 0; j < nb.size(); ++j) {
            const Point4& pb = nb.pos[j];
            const Vec3& vb = nb.vel[j];
            // Gaussian factors per projection plane k: hat_k drops coordinate k.
            const double d1 = pa.x1 - pb.x1;
            const double d2 = pa.x2 - pb.x2;
            const double d3 = pa.x3 - pb.x3;
            const double q1 = g * (d2 * d2 + d3 * d3);
            const double q2 = g * (d1 * d1 + d3 * d3);
            const double q3 = g * (d1 * d1 + d2 * d2);
            if (q1 > 700.0 && q2 > 700.0 && q3 > 700.0) continue;
            double sum_k = 0.0;
            if (q1 <= 700.0) {
                sum_k += std::exp(-q1) * std::erf(c1 * d1) * cross_component(va, vb, 1);
            }
            if (q2 <= 700.0) {
                sum_k += std::exp(-q2) * std::erf(c1 * d2) * cross_component(va, vb, 2);
            }
            if (q3 <= 700.0) {
                sum_k += std::exp(-q3) * std::erf(c1 * d3) * cross_component(va, vb, 3);
            }
            acc += nb.w[j] * sum_k * std::erf(c1 * (pb.x0 - pa.x0));
        }
        return wa * acc;
    });
    return prefactor * total;
}

// Shared surface-integral core for lk (signed) and the |.| count variant.
double surface_quadrature(const PLLoop& l, const PlanarSurface& S, const QuadratureConfig& cfg,
                          bool absolute) {
    const auto piercings = find_piercings(l, S, cfg.eps_gen);
    std::vector<double> sparams;
    std::vector<Vec2> points;
    for (const Piercing& p : piercings) {
        sparams.push_back(p.s);
        points.push_back(p.point);
    }
    const LoopNodes nodes = make_nodes(l, sparams, cfg);
    const SurfaceNodes surf = make_surface_nodes(S, points, cfg);

    const double kappa = cfg.kappa;
    const double total = parallel_sum<double>(surf.pos.size(), [&](size_t i) {
        const double k = loop_surface_kernel(nodes, surf.pos[i], kappa);
        return surf.w[i] * (absolute ? std::abs(k) : k);
    });
    const double prefactor = kappa * kappa * kappa / (32.0 * kPi * kPi);
    return S.normal_sign * prefactor * total;
}

double with_node_doubling(const std::function<double(const QuadratureConfig&)>& eval,
                          const QuadratureConfig& cfg, double* delta) {
    const double base = eval(cfg);
    if (delta) {
        QuadratureConfig fine = cfg;
        fine.base_points_per_segment *= 2;
        const double refined = eval(fine);
        const double scale = std::max({std::abs(base), std::abs(refined), 1e-12});
        *delta = std::abs(refined - base) / scale;
    }
    return base;
}

}  // namespace

double kernel_inner_1d_signed(double kappa, double x, double y) {
    return std::erf(kappa * (y - x) / (2.0 * std::sqrt(2.0)));
}

double gaussian_inner_2d(double kappa, Vec2 p, Vec2 q) {
    return std::exp(-kappa * kappa * (p - q).norm2() / 8.0);
}

double sk_finite_kappa(const PLLoop& a, const PLLoop& b, const QuadratureConfig& cfg,
                       double* node_doubling_delta) {
    return with_node_doubling([&](const QuadratureConfig& c) { return sk_quadrature(a, b, c); },
                              cfg, node_doubling_delta);
}

double lk_finite_kappa(const PLLoop& l, const PlanarSurface& S, const QuadratureConfig& cfg,
                       double* node_doubling_delta) {
    return with_node_doubling(
        [&](const QuadratureConfig& c) { return surface_quadrature(l, S, c, false); }, cfg,
        node_doubling_delta);
}

double piercing_count_finite_kappa(const PLLoop& l, const PlanarSurface& S,
                                   const QuadratureConfig& cfg, double* node_doubling_delta) {
    return with_node_doubling(
        [&](const QuadratureConfig& c) { return surface_quadrature(l, S, c, true); }, cfg,
        node_doubling_delta);
}

std::complex<double> holonomy_factor_finite_kappa(double q, const ColoredHyperlink& M, int u,
                                                  const Hyperlink& G, Side side,
                                                  const QuadratureConfig& cfg) {
    double integral = 0.0;
    for (const PLLoop& g : G.loops) {
        integral += sk_finite_kappa(M.base.loops[static_cast<size_t>(u)], g, cfg);
    }
    const SpinPair& color = M.colors[static_cast<size_t>(u)];
    const double arg = kPi * q * integral;
    return side == Side::Plus ? trace_exp_E(color.jplus, -arg)
                              : trace_exp_E(color.jminus, arg);
}

std::complex<double> area_finite_kappa(double q, const ColoredHyperlink& M, const Hyperlink& G,
                                       const PlanarSurface& S, const QuadratureConfig& cfg) {
    const int n = M.size();
    const auto classes = M.color_classes();
    std::vector<int> loop_class(static_cast<size_t>(n), 0);
    for (size_t v = 0; v < classes.size(); ++v) {
        for (int u : classes[v].members) loop_class[static_cast<size_t>(u)] = static_cast<int>(v);
    }

    const auto piercings = find_piercings(M.base, S, cfg.eps_gen);
    const SurfacePartition partition = make_surface_partition(
        piercings, loop_class, S, static_cast<int>(classes.size()), cfg.partition_scale);

    std::vector<Vec2> points;
    std::vector<std::vector<double>> sparams(static_cast<size_t>(n));
    for (const Piercing& p : piercings) {
        points.push_back(p.point);
        sparams[static_cast<size_t>(p.loop_index)].push_back(p.s);
    }

    std::vector<LoopNodes> nodes;
    nodes.reserve(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        nodes.push_back(make_nodes(M.base.loops[static_cast<size_t>(u)],
                                   sparams[static_cast<size_t>(u)], cfg));
    }
    const SurfaceNodes surf = make_surface_nodes(S, points, cfg);

    // Per class v: integral over the class region of |sum_{u in Gamma_v} K_u|.
    const double kappa = cfg.kappa;
    std::vector<double> class_integral(classes.size(), 0.0);
    {
        std::vector<std::vector<double>> partial(classes.size());
        for (auto& p : partial) p.assign(surf.pos.size(), 0.0);
        parallel_for(surf.pos.size(), [&](size_t i) {
            const Vec2 p = surf.pos[i];
            const size_t v = static_cast<size_t>(partition.class_at(p));
            double k = 0.0;
            for (int u : classes[v].members) {
                k += loop_surface_kernel(nodes[static_cast<size_t>(u)], p, kappa);
            }
            partial[v][i] = surf.w[i] * std::abs(k);
        });
        for (size_t v = 0; v < classes.size(); ++v) {
            double acc = 0.0;
            for (double x : partial[v]) acc += x;
            class_integral[v] = acc;
        }
    }

    // breve(kappa)^3 = (kappa / (2 sqrt(4 pi)))^3; q enters inside the |.|.
    const double bk3 = std::pow(kappa / (2.0 * std::sqrt(4.0 * kPi)), 3);
    double bracket_plus = 0.0, bracket_minus = 0.0;
    for (size_t v = 0; v < classes.size(); ++v) {
        const double base = bk3 * std::abs(q) * S.normal_sign * class_integral[v];
        bracket_plus += base * std::sqrt(classes[v].color.jplus.casimir());
        bracket_minus += base * std::sqrt(classes[v].color.jminus.casimir());
    }

    const double inv_n = 1.0 / n;
    const std::complex<double> root_plus = std::pow(std::complex<double>(bracket_plus, 0.0), inv_n);
    const std::complex<double> root_minus =
        std::pow(std::complex<double>(0.0, 1.0) * bracket_minus, inv_n);

    std::complex<double> prod = 1.0;
    for (int u = 0; u < n; ++u) {
        const std::complex<double> tr_plus =
            holonomy_factor_finite_kappa(q, M, u, G, Side::Plus, cfg);
        const std::complex<double> tr_minus =
            holonomy_factor_finite_kappa(q, M, u, G, Side::Minus, cfg);
        prod *= root_plus * tr_plus + root_minus * tr_minus;
    }
    return prod;
}

std::vector<ConvergenceRow> convergence_study(
    const std::function<std::complex<double>(const QuadratureConfig&)>& estimator,
    std::complex<double> reference, const std::vector<double>& kappas, QuadratureConfig base) {
    std::vector<ConvergenceRow> rows;
    std::vector<double> schedule = kappas;
    std::sort(schedule.begin(), schedule.end());
    for (double kappa : schedule) {
        QuadratureConfig cfg = base;
        cfg.kappa = kappa;
        ConvergenceRow row;
        row.kappa = kappa;
        row.estimate = estimator(cfg);
        row.reference = reference;
        row.abs_error = std::abs(row.estimate - reference);
        row.rel_error = std::abs(reference) > 0.0
                            ? row.abs_error / std::abs(reference)
                            : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hlx
