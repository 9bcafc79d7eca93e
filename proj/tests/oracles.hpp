#pragma once

// Independent test oracles.  These deliberately re-derive results through
// different code paths than the library: orientation-predicate segment
// intersection for crossings, adaptive Simpson quadrature for the kernel
// inner products.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "hlx/geometry.hpp"

namespace oracle {

// --- brute-force crossing enumeration ---------------------------------------

struct BruteCrossing {
    int seg_a = 0, seg_b = 0;
    double s = 0.0, t = 0.0;
    int orientation = 0, height = 0, time_lag = 0;
};

inline double orient2(hlx::Vec2 p, hlx::Vec2 q, hlx::Vec2 r) {
    return hlx::cross2(q - p, r - p);
}

inline double cross_k(const hlx::Vec3& u, const hlx::Vec3& v, int k) {
    if (k == 1) return u.y * v.z - u.z * v.y;
    if (k == 2) return u.z * v.x - u.x * v.z;
    return u.x * v.y - u.y * v.x;
}

// Every transverse interior intersection of the projected segment pairs,
// classified by the sign definitions evaluated from scratch.
inline std::vector<BruteCrossing> brute_crossings(const hlx::PLLoop& a, const hlx::PLLoop& b,
                                                  int plane) {
    std::vector<BruteCrossing> out;
    for (int i = 0; i < a.segment_count(); ++i) {
        const hlx::Point4 a0 = a.segment_a(i), a1 = a.segment_b(i);
        const hlx::Vec2 p0 = a0.hat(plane), p1 = a1.hat(plane);
        for (int j = 0; j < b.segment_count(); ++j) {
            const hlx::Point4 b0 = b.segment_a(j), b1 = b.segment_b(j);
            const hlx::Vec2 q0 = b0.hat(plane), q1 = b1.hat(plane);
            const double oq0 = orient2(p0, p1, q0);
            const double oq1 = orient2(p0, p1, q1);
            const double op0 = orient2(q0, q1, p0);
            const double op1 = orient2(q0, q1, p1);
            if (!((oq0 > 0) != (oq1 > 0) && (op0 > 0) != (op1 > 0))) continue;
            const double v = oq0 / (oq0 - oq1);
            const double u = op0 / (op0 - op1);
            BruteCrossing c;
            c.seg_a = i;
            c.seg_b = j;
            c.s = a.segment_start(i) + u * (a.segment_end(i) - a.segment_start(i));
            c.t = b.segment_start(j) + v * (b.segment_end(j) - b.segment_start(j));
            const hlx::Point4 pa = a0 + (a1 - a0) * u;
            const hlx::Point4 pb = b0 + (b1 - b0) * v;
            const hlx::Vec3 da = (a1 - a0).spatial();
            const hlx::Vec3 db = (b1 - b0).spatial();
            c.orientation = cross_k(da, db, plane) > 0 ? 1 : -1;
            c.height = pa.spatial_coord(plane) > pb.spatial_coord(plane) ? 1 : -1;
            c.time_lag = pb.x0 > pa.x0 ? 1 : -1;
            out.push_back(c);
        }
    }
    return out;
}

inline int brute_sk(const hlx::PLLoop& a, const hlx::PLLoop& b) {
    int sk = 0;
    for (int plane = 1; plane <= 3; ++plane) {
        for (const BruteCrossing& c : brute_crossings(a, b, plane)) {
            sk += c.orientation * c.height * c.time_lag;
        }
    }
    return sk;
}

// --- adaptive Simpson --------------------------------------------------------

// `force` levels of unconditional subdivision guard against narrow peaks
// slipping between the first samples.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth,
                           int force) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || (force <= 0 && std::abs(left + right - whole) <= 15.0 * tol)) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, force - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, force - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int force = 4) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48, force);
}

// --- kernel inner products by quadrature --------------------------------------

// The 1-d Gaussian q_kappa^x and its signed antiderivative, integrated
// numerically; returns (kappa/sqrt(2 pi)) <d^-1 q^x, q^y>.  Integration is
// confined to the kernel supports (the tails beyond 14/kappa are below 1e-16).
inline double kernel_1d_quadrature(double kappa, double x, double y, double tol = 1e-11) {
    const double w = 14.0 / kappa;
    auto q = [kappa](double c) {
        return [kappa, c](double t) {
            return std::sqrt(kappa) / std::pow(2.0 * M_PI, 0.25) *
                   std::exp(-kappa * kappa * (t - c) * (t - c) / 4.0);
        };
    };
    const auto qx = q(x);
    const auto qy = q(y);
    const double full = adaptive_simpson(qx, x - w, x + w, tol * 0.01);
    auto anti = [&](double t) {
        double lower;
        if (t <= x - w) {
            lower = 0.0;
        } else if (t >= x + w) {
            lower = full;
        } else {
            lower = adaptive_simpson(qx, x - w, t, tol * 0.01);
        }
        return lower - 0.5 * full;
    };
    const double outer = adaptive_simpson([&](double t) { return anti(t) * qy(t); }, y - w,
                                          y + w, tol);
    return kappa / std::sqrt(2.0 * M_PI) * outer;
}

// <p_kappa^p, p_kappa^q> for 2-d Gaussians; separable into two axis factors,
// each concentrated around the midpoint of the two centres.
inline double kernel_2d_quadrature(double kappa, hlx::Vec2 p, hlx::Vec2 q, double tol = 1e-12) {
    auto axis = [&](double x, double y) {
        const double m = 0.5 * (x + y);
        const double w = 14.0 / kappa + 0.5 * std::abs(x - y);
        return adaptive_simpson(
            [&](double z) {
                return std::exp(-kappa * kappa * ((z - x) * (z - x) + (z - y) * (z - y)) / 4.0);
            },
            m - w, m + w, tol);
    };
    const double c = kappa / std::sqrt(2.0 * M_PI);
    return c * c * axis(p.x, q.x) * axis(p.y, q.y);
}

// --- randomized fixtures -------------------------------------------------------

// Perturbs every vertex coordinate uniformly by +-magnitude.
inline hlx::Hyperlink perturb(const hlx::Hyperlink& h, double magnitude, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-magnitude, magnitude);
    hlx::Hyperlink out;
    out.labels = h.labels;
    for (const hlx::PLLoop& l : h.loops) {
        std::vector<hlx::Point4> v = l.vertices();
        for (hlx::Point4& p : v) {
            p.x0 += u(rng);
            p.x1 += u(rng);
            p.x2 += u(rng);
            p.x3 += u(rng);
        }
        out.loops.emplace_back(std::move(v));
    }
    return out;
}

}  // namespace oracle
