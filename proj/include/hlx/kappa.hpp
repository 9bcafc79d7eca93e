#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// Quadrature parameters for the finite-kappa Gaussian-kernel integrals.
// Refinement windows of radius refinement_radius/kappa are placed around the
// combinatorially detected crossings and piercings, where the kernels
// concentrate, and split into refinement_factor subcells.
struct QuadratureConfig {
    double kappa = 16.0;
    int base_points_per_segment = 8;  // Gauss-Legendre nodes per cell per axis
    double refinement_radius = 6.0;   // in units of 1/kappa
    int refinement_factor = 4;
    double partition_scale = 1.0;     // scales the per-class disk radii
    double eps_gen = 0.0;             // tolerance for the combinatorial passes
};

struct ConvergenceRow {
    double kappa = 0.0;
    std::complex<double> estimate;
    std::complex<double> reference;
    double abs_error = 0.0;
    double rel_error = 0.0;  // NaN when the reference vanishes
};

enum class Side { Plus, Minus };

// --- closed-form kernel inner products -------------------------------------

// (kappa/sqrt(2 pi)) <d0^-1 q_kappa^x, q_kappa^y> = erf(kappa (y-x) / (2 sqrt 2));
// tends to sign(y - x) as kappa grows.
double kernel_inner_1d_signed(double kappa, double x, double y);

// <p_kappa^p, p_kappa^q> = exp(-kappa^2 |p-q|^2 / 8) for 2-d Gaussians.
double gaussian_inner_2d(double kappa, Vec2 p, Vec2 q);

// --- finite-kappa integrals --------------------------------------------------

// (kappa^3 / 16 pi^2) int over [0,1]^2 of eps^{ijk} <p^y, p^rho>_k y_i' rho_j';
// converges to the hyperlinking number sk(a, b).  When `node_doubling_delta`
// is given, the integral is re-evaluated with doubled base nodes and the
// relative difference stored (a diagnostic, not an error).
double sk_finite_kappa(const PLLoop& a, const PLLoop& b, const QuadratureConfig& cfg,
                       double* node_doubling_delta = nullptr);

// (kappa^3 / 32 pi^2) int <kappa d0^-1 p^y, p^sigma> y_1' J_23; converges to lk(l, S).
double lk_finite_kappa(const PLLoop& l, const PlanarSurface& S, const QuadratureConfig& cfg,
                       double* node_doubling_delta = nullptr);

// Same integral with the absolute value inside the surface integral, the form
// used by the area prefactors; converges to the piercing count |P(l, S)|.
double piercing_count_finite_kappa(const PLLoop& l, const PlanarSurface& S,
                                   const QuadratureConfig& cfg,
                                   double* node_doubling_delta = nullptr);

// Trace of the finite-kappa holonomy factor W_kappa^+- of matter loop u against
// the geometric hyperlink G; converges to Tr exp[-+ pi i q sk(u, G) E^+-].
std::complex<double> holonomy_factor_finite_kappa(double q, const ColoredHyperlink& M, int u,
                                                  const Hyperlink& G, Side side,
                                                  const QuadratureConfig& cfg);

// The full finite-kappa area expression: per representation class v, the
// |.|-integral over the class region S_v weighted by sqrt(xi) and the scaled
// prefactor (kappa / (2 sqrt(4 pi)))^3, raised to 1/n, times the holonomy
// traces.  Converges to area_operator's closed form.
std::complex<double> area_finite_kappa(double q, const ColoredHyperlink& M, const Hyperlink& G,
                                       const PlanarSurface& S, const QuadratureConfig& cfg);

// --- convergence harness ------------------------------------------------------

// One row per kappa, errors against the combinatorial reference.
std::vector<ConvergenceRow> convergence_study(
    const std::function<std::complex<double>(const QuadratureConfig&)>& estimator,
    std::complex<double> reference, const std::vector<double>& kappas,
    QuadratureConfig base);

}  // namespace hlx
