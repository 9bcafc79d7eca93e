#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hlx/geometry.hpp"

namespace hlx {

// Result of the quantized area operator acting on the Wilson loop observable.
//
// With n matter loops, piercing counts |P_u| and Casimir values xi_u^+-:
//   c+- = sum_u |P_u| sqrt(xi_u^+-)
//   plus_term_u  = (c+)^(1/n)   * Tr_{rho_u^+} exp[-pi i q sk_u E+]
//   minus_term_u = (i c-)^(1/n) * Tr_{rho_u^-} exp[+pi i q sk_u E-]
//   value = (|q| sqrt(pi) / 2) * prod_u (plus_term_u + minus_term_u)
// The n-th root of i c- takes the principal branch.
struct AreaResult {
    std::complex<double> value;
    struct LoopTerm {
        int loop = 0;
        std::complex<double> plus_term;
        std::complex<double> minus_term;
    };
    std::vector<LoopTerm> per_loop_terms;
    std::pair<double, double> piercing_sums{0.0, 0.0};  // (c+, c-)
    std::vector<int> sk_values;                         // sk(matter loop, G)
    std::vector<int> piercing_counts;
    bool surface_empty = false;
};

// Wilson loop observable of the colored hyperlink chi(M, G):
//   Z = prod_u ( Tr_{rho_u^+} exp[+pi i q sk_u E+] + Tr_{rho_u^-} exp[-pi i q sk_u E-] ),
// sk_u = sk(matter loop u, G).  Real-valued for real q.
std::complex<double> wilson_loop(double q, const ColoredHyperlink& M, const Hyperlink& G,
                                 double eps_gen = 0.0);

// Quantized area of S evaluated on the Wilson loop observable.  An empty
// surface (std::nullopt) reduces exactly to wilson_loop (A_empty == 1).
AreaResult area_operator(double q, const ColoredHyperlink& M, const Hyperlink& G,
                         const std::optional<PlanarSurface>& S, double eps_gen = 0.0);

}  // namespace hlx
