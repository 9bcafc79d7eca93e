#include "hlx/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace hlx {

namespace {

// Hermitian angular momentum matrices J_x, J_y, J_z with [J_x, J_y] = i J_z,
// basis |j, j>, |j, j-1>, ..., |j, -j>.
std::array<Eigen::MatrixXcd, 3> angular_momentum(Spin j) {
    const int dim = j.dim();
    const double jj = j.value();
    Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const double m = jj - r;  // row r holds |j, m>
        jz(r, r) = m;
        if (r + 1 < dim) {
            const double mlow = m - 1.0;
            jplus(r, r + 1) = std::sqrt(jj * (jj + 1.0) - mlow * (mlow + 1.0));
        }
    }
    const Eigen::MatrixXcd jminus = jplus.adjoint();
    const std::complex<double> I(0.0, 1.0);
    Eigen::MatrixXcd jx = 0.5 * (jplus + jminus);
    Eigen::MatrixXcd jy = (jplus - jminus) / (2.0 * I);
    return {jx, jy, jz};
}

}  // namespace

SpinRep make_spin_rep(Spin j) {
    if (j.twice < 0) throw std::invalid_argument("spin must be nonnegative");
    SpinRep rep;
    rep.j = j;
    rep.dim = j.dim();
    const auto J = angular_momentum(j);
    const std::complex<double> I(0.0, 1.0);
    // At j = 1/2:  i J_y = e1,  i J_x = e2,  i J_z = e3.
    rep.generators[0] = I * J[1];
    rep.generators[1] = I * J[0];
    rep.generators[2] = I * J[2];
    return rep;
}

std::complex<double> trace_exp_E(Spin j, std::complex<double> a) {
    static const double sqrt3 = std::sqrt(3.0);
    const std::complex<double> I(0.0, 1.0);
    std::complex<double> sum = 0.0;
    for (int k = 0; k < j.dim(); ++k) {
        const double m = -j.value() + k;
        sum += std::exp(I * (sqrt3 * m) * a);
    }
    return sum;
}

}  // namespace hlx
