#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "schatten_lab/linalg.hpp"

using namespace schatten_lab;
using Catch::Approx;

namespace {
MatC diag2(double a, double b) {
    MatC m = MatC::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}
}  // namespace

TEST_CASE("eigh on fixed matrices") {
    SECTION("diagonal") {
        auto sd = eigh(HermitianMatrix(diag2(1.0, 4.0)));
        REQUIRE(sd.eigenvalues(0) == Approx(4.0));
        REQUIRE(sd.eigenvalues(1) == Approx(1.0));
    }
    SECTION("identity") {
        auto sd = eigh(HermitianMatrix(MatC::Identity(3, 3)));
        for (int i = 0; i < 3; ++i) REQUIRE(sd.eigenvalues(i) == Approx(1.0));
    }
    SECTION("off-diagonal flip") {
        MatC m(2, 2);
        m << 0, 1, 1, 0;
        auto sd = eigh(HermitianMatrix(m));
        REQUIRE(sd.eigenvalues(0) == Approx(1.0));
        REQUIRE(sd.eigenvalues(1) == Approx(-1.0));
    }
}

TEST_CASE("eigh reconstruction and orthonormality on random samples") {
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(derive_seed(77, i) % 5);
        HermitianMatrix x = random_hermitian(n, derive_seed(1234, i));
        auto sd = eigh(x);
        MatC recon = sd.eigenvectors * sd.eigenvalues.asDiagonal() * sd.eigenvectors.adjoint();
        REQUIRE((recon - x.mat()).norm() <= 1e-9 * (1.0 + x.mat().norm()));
        REQUIRE((sd.eigenvectors.adjoint() * sd.eigenvectors - MatC::Identity(n, n)).norm() <=
                1e-9);
        for (int k = 0; k + 1 < n; ++k)
            REQUIRE(sd.eigenvalues(k) >= sd.eigenvalues(k + 1));
    }
}

TEST_CASE("svd_vals basics") {
    VecR s = svd_vals(diag2(-3.0, 2.0));
    REQUIRE(s(0) == Approx(3.0));
    REQUIRE(s(1) == Approx(2.0));

    MatC u = haar_unitary(4, 9);
    VecR su = svd_vals(u);
    for (int i = 0; i < 4; ++i) REQUIRE(su(i) == Approx(1.0).margin(1e-10));

    MatC x = diag2(1.0, 4.0) * haar_unitary(2, 5);
    VecR sx = svd_vals(x);
    REQUIRE(sx(0) == Approx(4.0));
    REQUIRE(sx(1) == Approx(1.0));
}

TEST_CASE("svd unitary invariance") {
    for (int i = 0; i < 25; ++i) {
        const int n = 3;
        Rng rng(derive_seed(31, i));
        MatC x = ginibre(n, rng);
        MatC u = haar_unitary(n, derive_seed(32, i));
        MatC v = haar_unitary(n, derive_seed(33, i));
        VecR s0 = svd_vals(x);
        VecR s1 = svd_vals(MatC(u * x * v));
        REQUIRE((s0 - s1).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + s0(0)));
    }
}

TEST_CASE("spectral matrix powers") {
    SECTION("diagonal square root") {
        auto r = matrix_power_spectral(HermitianMatrix(diag2(1.0, 4.0)), 0.5);
        REQUIRE(r.mat()(0, 0).real() == Approx(1.0));
        REQUIRE(r.mat()(1, 1).real() == Approx(2.0));
    }
    SECTION("identity exponent") {
        HermitianMatrix x = random_psd(3, 17);
        auto r = matrix_power_spectral(x, 1.0);
        REQUIRE((r.mat() - x.mat()).norm() <= 1e-10 * (1.0 + x.mat().norm()));
    }
    SECTION("scalar reciprocal") {
        MatC m(1, 1);
        m(0, 0) = 2.0;
        auto r = matrix_power_spectral(HermitianMatrix(m), -1.0);
        REQUIRE(r.mat()(0, 0).real() == Approx(0.5));
    }
    SECTION("domain error on non-positive input") {
        REQUIRE_THROWS_AS(matrix_power_spectral(HermitianMatrix(diag2(1.0, -1.0)), 0.5),
                          std::domain_error);
        REQUIRE_THROWS_AS(matrix_power_spectral(HermitianMatrix(diag2(1.0, 0.0)), -1.0),
                          std::domain_error);
    }
}

TEST_CASE("quadrature calibration against closed forms") {
    const auto& q = default_quadrature();
    // oracle for s = 1/2: integral of t^(-1/2)/(1+t) over (0,inf) is pi
    const double pi = 3.14159265358979323846;
    REQUIRE(calibrate_power_constant(0.5, q) == Approx(1.0 / pi).epsilon(1e-9));
    for (double s : {0.5, 0.25, 0.75, -0.5, -0.25, -1.5, -2.5, 1.5, 1.25}) {
        REQUIRE(calibrate_power_constant(s, q) ==
                Approx(power_constant_closed_form(s)).epsilon(1e-8));
    }
}

TEST_CASE("scalar kernel homogeneity fixes the below-minus-one exponent") {
    const auto& q = default_quadrature();
    auto homogeneity_residual = [&](double s, double x, bool literal) {
        double cal = 0.0, val = 0.0;
        for (int i = 0; i < q.nodes; ++i) {
            const double t = q.t[i];
            const double k1 = literal ? power_kernel_scalar_literal_variant(t, 1.0, s)
                                      : power_kernel_scalar(t, 1.0, s);
            const double kx = literal ? power_kernel_scalar_literal_variant(t, x, s)
                                      : power_kernel_scalar(t, x, s);
            cal += q.w[i] * k1;
            val += q.w[i] * kx;
        }
        return std::abs(val / cal - std::pow(x, s)) / std::pow(x, s);
    };
    // corrected kernel: homogeneous for every s < -1
    REQUIRE(homogeneity_residual(-1.7, 2.0, false) < 1e-8);
    REQUIRE(homogeneity_residual(-2.3, 2.0, false) < 1e-8);
    REQUIRE(homogeneity_residual(-1.5, 2.0, false) < 1e-8);
    // literal exponent variant: exact only at half-integers
    REQUIRE(homogeneity_residual(-1.5, 2.0, true) < 1e-8);
    REQUIRE(homogeneity_residual(-1.7, 2.0, true) > 1e-3);
    REQUIRE(homogeneity_residual(-2.3, 2.0, true) > 1e-3);
}

TEST_CASE("matrix power via quadrature matches the spectral route") {
    const auto& q = default_quadrature();
    SECTION("fixed diagonal examples") {
        {
            auto viaq = matrix_power_integral(HermitianMatrix(diag2(1.0, 4.0)), 0.5, q);
            auto vias = matrix_power_spectral(HermitianMatrix(diag2(1.0, 4.0)), 0.5);
            REQUIRE((viaq.mat() - vias.mat()).norm() <= 1e-8);
        }
        {
            auto viaq = matrix_power_integral(HermitianMatrix(diag2(2.0, 5.0)), -1.5, q);
            auto vias = matrix_power_spectral(HermitianMatrix(diag2(2.0, 5.0)), -1.5);
            REQUIRE((viaq.mat() - vias.mat()).norm() <= 1e-8 * vias.mat().norm());
        }
        {
            MatC one(1, 1);
            one(0, 0) = 1.0;
            auto viaq = matrix_power_integral(HermitianMatrix(one), 0.5, q);
            REQUIRE(viaq.mat()(0, 0).real() == Approx(1.0).epsilon(1e-10));
        }
    }
    SECTION("random PD matrices across every branch") {
        const double s_values[] = {0.5, 0.25, -0.5, -1.5, -2.5, 1.5};
        for (int i = 0; i < 100; ++i) {
            const int n = 2 + static_cast<int>(derive_seed(5, i) % 5);
            HermitianMatrix x = random_psd(n, derive_seed(400, i));
            HermitianMatrix xs(MatC(x.mat() + 0.05 * MatC::Identity(n, n)));
            for (double s : s_values) {
                auto viaq = matrix_power_integral(xs, s, q);
                auto vias = matrix_power_spectral(xs, s);
                REQUIRE((viaq.mat() - vias.mat()).norm() <=
                        1e-6 * vias.mat().norm());
            }
        }
    }
    SECTION("unsupported exponents") {
        REQUIRE_THROWS_AS(matrix_power_integral(HermitianMatrix(diag2(1.0, 2.0)), -2.0, q),
                          std::domain_error);
        REQUIRE_THROWS_AS(matrix_power_integral(HermitianMatrix(diag2(1.0, 2.0)), 2.5, q),
                          std::domain_error);
        REQUIRE_THROWS_AS(matrix_power_integral(HermitianMatrix(diag2(1.0, -2.0)), 0.5, q),
                          std::domain_error);
    }
}

TEST_CASE("geometric mean") {
    SECTION("idempotent on equal arguments") {
        HermitianMatrix a(diag2(4.0, 1.0));
        auto g = geometric_mean0(a, a);
        REQUIRE((g.mat() - a.mat()).norm() <= 1e-10);
    }
    SECTION("commuting diagonal entrywise") {
        auto g = geometric_mean0(HermitianMatrix(diag2(4.0, 1.0)), HermitianMatrix(diag2(1.0, 4.0)));
        REQUIRE(g.mat()(0, 0).real() == Approx(2.0));
        REQUIRE(g.mat()(1, 1).real() == Approx(2.0));
    }
    SECTION("identity left factor gives the square root") {
        HermitianMatrix b(MatC(random_psd(3, 91).mat() + 0.1 * MatC::Identity(3, 3)));
        auto g = geometric_mean0(HermitianMatrix(MatC::Identity(3, 3)), b);
        auto r = matrix_power_spectral(b, 0.5);
        REQUIRE((g.mat() - r.mat()).norm() <= 1e-9 * (1.0 + r.mat().norm()));
    }
    SECTION("symmetric in its arguments") {
        for (int i = 0; i < 20; ++i) {
            HermitianMatrix a(MatC(random_psd(3, derive_seed(51, i)).mat() +
                                   0.05 * MatC::Identity(3, 3)));
            HermitianMatrix b(MatC(random_psd(3, derive_seed(52, i)).mat() +
                                   0.05 * MatC::Identity(3, 3)));
            REQUIRE((geometric_mean0(a, b).mat() - geometric_mean0(b, a).mat()).norm() <= 1e-9);
        }
    }
    SECTION("rejects indefinite input") {
        REQUIRE_THROWS_AS(
            geometric_mean0(HermitianMatrix(diag2(1.0, -1.0)), HermitianMatrix(diag2(1.0, 1.0))),
            std::domain_error);
    }
}

TEST_CASE("random samplers") {
    SECTION("psd pair is positive by construction") {
        for (int i = 0; i < 30; ++i) {
            auto [c, d] = random_psd_pair(3, derive_seed(8, i));
            Eigen::SelfAdjointEigenSolver<MatC> p(MatC(c.mat() + d.mat()));
            Eigen::SelfAdjointEigenSolver<MatC> q(MatC(c.mat() - d.mat()));
            REQUIRE(p.eigenvalues().minCoeff() >= -1e-12);
            REQUIRE(q.eigenvalues().minCoeff() >= -1e-12);
        }
    }
    SECTION("haar unitary is unitary") {
        MatC u = haar_unitary(3, 77);
        REQUIRE((u * u.adjoint() - MatC::Identity(3, 3)).norm() <= 1e-9);
    }
    SECTION("same seed, same draw") {
        REQUIRE((random_hermitian(4, 123).mat() - random_hermitian(4, 123).mat()).norm() == 0.0);
        MatC u1 = haar_unitary(4, 5), u2 = haar_unitary(4, 5);
        REQUIRE((u1 - u2).norm() == 0.0);
    }
    SECTION("input validation") {
        REQUIRE_THROWS_AS(random_psd(0, 1), std::invalid_argument);
    }
}

TEST_CASE("hermitian certificate") {
    MatC bad(2, 2);
    bad << 1.0, cxd(0.0, 1e-6), cxd(0.0, 1e-6), 1.0;  // not conjugate-symmetric
    REQUIRE_THROWS_AS(HermitianMatrix(bad), std::invalid_argument);
    MatC rect(2, 3);
    rect.setZero();
    REQUIRE_THROWS_AS(svd_vals(rect), std::invalid_argument);
}

TEST_CASE("quadrature scheme invariants") {
    const auto& q = default_quadrature();
    REQUIRE(q.nodes == 512);
    REQUIRE(q.t.size() == 512);
    for (int i = 0; i < q.nodes; ++i) {
        REQUIRE(q.w[i] > 0.0);
        REQUIRE(q.t[i] > 0.0);
        if (i > 0) REQUIRE(q.t[i] > q.t[i - 1]);
    }
    REQUIRE_THROWS_AS(make_quadrature(1), std::invalid_argument);
}
