#include <doctest.h>

#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "hlx/representation.hpp"

using namespace hlx;

namespace {
const std::complex<double> I(0.0, 1.0);
}

TEST_CASE("j = 1/2 reproduces the defining 2x2 basis matrices") {
    const SpinRep rep = make_spin_rep(Spin(1));
    Eigen::MatrixXcd e1(2, 2), e2(2, 2), e3(2, 2);
    e1 << 0.0, 0.5, -0.5, 0.0;
    e2 << 0.0, 0.5 * I, 0.5 * I, 0.0;
    e3 << 0.5 * I, 0.0, 0.0, -0.5 * I;
    CHECK((rep.generators[0] - e1).norm() < 1e-15);
    CHECK((rep.generators[1] - e2).norm() < 1e-15);
    CHECK((rep.generators[2] - e3).norm() < 1e-15);
}

TEST_CASE("j = 0 is the trivial representation") {
    const SpinRep rep = make_spin_rep(Spin(0));
    CHECK(rep.dim == 1);
    for (const auto& g : rep.generators) CHECK(g.norm() == 0.0);
    CHECK(trace_exp_E(Spin(0), 3.7).real() == doctest::Approx(1.0));
}

TEST_CASE("commutation relations, Casimir identity, skew-Hermiticity") {
    for (int twice : {0, 1, 2, 3, 4, 6, 8}) {
        const Spin j(twice);
        const SpinRep rep = make_spin_rep(j);
        const auto& g = rep.generators;
        CHECK((g[0] * g[1] - g[1] * g[0] - g[2]).norm() < 1e-12);
        CHECK((g[1] * g[2] - g[2] * g[1] - g[0]).norm() < 1e-12);
        CHECK((g[2] * g[0] - g[0] * g[2] - g[1]).norm() < 1e-12);
        const Eigen::MatrixXcd casimir_defect =
            g[0] * g[0] + g[1] * g[1] + g[2] * g[2] +
            j.casimir() * Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
        CHECK(casimir_defect.norm() < 1e-12 * rep.dim);
        for (const auto& gen : g) CHECK((gen + gen.adjoint()).norm() < 1e-14);
    }
}

TEST_CASE("casimir values") {
    CHECK(casimir(Spin(0)) == doctest::Approx(0.0));
    CHECK(casimir(Spin(1)) == doctest::Approx(0.75));
    CHECK(casimir(Spin(3)) == doctest::Approx(3.75));
    CHECK(casimir(Spin(2)) == doctest::Approx(2.0));
}

TEST_CASE("trace at a = 0 is the dimension") {
    for (int twice : {0, 1, 2, 5, 8}) {
        CHECK(trace_exp_E(Spin(twice), 0.0).real() == doctest::Approx(twice + 1));
        CHECK(trace_exp_E(Spin(twice), 0.0).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("j = 1/2 closed form is 2 cos(sqrt(3) a / 2)") {
    for (double a : {0.1, 0.9, 2.5, -4.0, 11.0}) {
        const auto t = trace_exp_E(Spin(1), a);
        CHECK(t.real() == doctest::Approx(2.0 * std::cos(std::sqrt(3.0) * a / 2.0)));
        CHECK(t.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("closed-form trace agrees with the dense matrix exponential") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Spin j(static_cast<int>(rng() % 9));  // up to j = 4
        const SpinRep rep = make_spin_rep(j);
        const std::complex<double> a(u(rng), u(rng));
        const std::complex<double> closed = trace_exp_E(j, a);
        const Eigen::MatrixXcd m = a * rep.sum_generator();
        const std::complex<double> dense = m.exp().trace();
        CHECK(std::abs(closed - dense) <= 1e-10 * std::max(1.0, std::abs(dense)));
    }
}

TEST_CASE("real arguments give real, even traces") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Spin j(static_cast<int>(rng() % 9));
        const double a = u(rng);
        const auto plus = trace_exp_E(j, a);
        const auto minus = trace_exp_E(j, -a);
        CHECK(plus.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(plus.real() == doctest::Approx(minus.real()));
    }
}

TEST_CASE("trace periodicity in the real argument") {
    // Every term e^{i sqrt3 m a} has 2m integral, so 4 pi / sqrt3 is a period
    // for integer spins and 8 pi / sqrt3 covers the half-integer ones too.
    const double period_int = 4.0 * M_PI / std::sqrt(3.0);
    for (int twice : {2, 4, 6}) {
        for (double a : {0.3, 1.7}) {
            CHECK(trace_exp_E(Spin(twice), a + period_int).real() ==
                  doctest::Approx(trace_exp_E(Spin(twice), a).real()));
        }
    }
    const double period_half = 8.0 * M_PI / std::sqrt(3.0);
    for (int twice : {1, 3, 5}) {
        for (double a : {0.3, 1.7}) {
            CHECK(trace_exp_E(Spin(twice), a + period_half).real() ==
                  doctest::Approx(trace_exp_E(Spin(twice), a).real()));
        }
    }
}

TEST_CASE("Tr rho(e^{iE}) >= 1 for every listed spin") {
    for (int twice : {0, 1, 2, 3, 4, 5, 6, 7, 8}) {
        const auto t = trace_exp_E(Spin(twice), I);
        CHECK(t.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(t.real() >= 1.0);
    }
}
