#include "hlx/observables.hpp"

#include <cmath>

#include "hlx/diagram.hpp"
#include "hlx/piercing.hpp"
#include "hlx/representation.hpp"

namespace hlx {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> sk_per_matter_loop(const ColoredHyperlink& M, const Hyperlink& G,
                                    double eps_gen) {
    std::vector<int> sk;
    sk.reserve(static_cast<size_t>(M.size()));
    for (const PLLoop& l : M.base.loops) sk.push_back(sk_loop_vs_hyperlink(l, G, eps_gen));
    return sk;
}

}  // namespace

std::complex<double> wilson_loop(double q, const ColoredHyperlink& M, const Hyperlink& G,
                                 double eps_gen) {
    const std::vector<int> sk = sk_per_matter_loop(M, G, eps_gen);
    std::complex<double> z = 1.0;
    for (int u = 0; u < M.size(); ++u) {
        const SpinPair& color = M.colors[static_cast<size_t>(u)];
        const double arg = kPi * q * sk[static_cast<size_t>(u)];
        z *= trace_exp_E(color.jplus, arg) + trace_exp_E(color.jminus, -arg);
    }
    return z;
}

AreaResult area_operator(double q, const ColoredHyperlink& M, const Hyperlink& G,
                         const std::optional<PlanarSurface>& S, double eps_gen) {
    AreaResult res;
    res.sk_values = sk_per_matter_loop(M, G, eps_gen);

    if (!S.has_value()) {
        res.surface_empty = true;
        res.value = wilson_loop(q, M, G, eps_gen);
        res.piercing_counts.assign(static_cast<size_t>(M.size()), 0);
        return res;
    }

    const int n = M.size();
    double cplus = 0.0, cminus = 0.0;
    for (int u = 0; u < n; ++u) {
        const int count = piercing_count(M.base.loops[static_cast<size_t>(u)], *S, eps_gen);
        res.piercing_counts.push_back(count);
        const SpinPair& color = M.colors[static_cast<size_t>(u)];
        cplus += count * std::sqrt(color.jplus.casimir());
        cminus += count * std::sqrt(color.jminus.casimir());
    }
    res.piercing_sums = {cplus, cminus};

    const double inv_n = 1.0 / n;
    const double root_plus = std::pow(cplus, inv_n);
    // Principal branch: (i c-)^(1/n) = c-^(1/n) exp(i pi / (2n)) for c- >= 0.
    const std::complex<double> root_minus =
        std::pow(cminus, inv_n) * std::exp(std::complex<double>(0.0, 0.5 * kPi * inv_n));

    std::complex<double> prod = 1.0;
    for (int u = 0; u < n; ++u) {
        const SpinPair& color = M.colors[static_cast<size_t>(u)];
        const double arg = kPi * q * res.sk_values[static_cast<size_t>(u)];
        AreaResult::LoopTerm term;
        term.loop = u;
        term.plus_term = root_plus * trace_exp_E(color.jplus, -arg);
        term.minus_term = root_minus * trace_exp_E(color.jminus, arg);
        prod *= term.plus_term + term.minus_term;
        res.per_loop_terms.push_back(term);
    }
    res.value = 0.5 * std::abs(q) * std::sqrt(kPi) * prod;
    return res;
}

}  // namespace hlx
