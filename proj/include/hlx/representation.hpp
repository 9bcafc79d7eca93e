#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "hlx/geometry.hpp"

namespace hlx {

// Irreducible spin-j representation of su(2) in the basis
//
//   e1 = 1/2 [[0, 1], [-1, 0]],  e2 = 1/2 [[0, i], [i, 0]],  e3 = 1/2 [[i, 0], [0, -i]]
//
// (the j = 1/2 generators), i.e. [e1,e2] = e3 and cyclic.  All generators are
// skew-Hermitian and satisfy the Casimir identity sum_i rho(e_i)^2 = -j(j+1) I.
struct SpinRep {
    Spin j;
    int dim = 1;
    std::array<Eigen::MatrixXcd, 3> generators;  // rho(e1), rho(e2), rho(e3)

    // rho(E) with E = e1 + e2 + e3; skew-Hermitian with eigenvalues i*sqrt(3)*m.
    Eigen::MatrixXcd sum_generator() const { return generators[0] + generators[1] + generators[2]; }
};

// Standard ladder construction mapped onto the basis above.
SpinRep make_spin_rep(Spin j);

inline double casimir(Spin j) { return j.casimir(); }

// Tr exp[a * rho(E)] through the closed form sum_{m=-j}^{j} exp(i a sqrt(3) m).
// E = e1 + e2 + e3 generates a rotation of angle sqrt(3) about (1,1,1)/sqrt(3),
// so rho(E) has eigenvalues i sqrt(3) m.
std::complex<double> trace_exp_E(Spin j, std::complex<double> a);

}  // namespace hlx
