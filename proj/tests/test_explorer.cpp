#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "schatten_lab/explorer.hpp"

using namespace schatten_lab;
using Catch::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;

double lam_of(const HermitianMatrix& m, int which) {
    VecR lam = eigh(m).eigenvalues;
    return lam(which - 1);
}
}  // namespace

TEST_CASE("2x2 construction, hand-verified instance") {
    // lamA = (2,0), lamB = (1,-1), target eigenvalue 2 of A+B:
    // tr B = 0, det B = -1, det(A+B) = 0, tr(A+B) = 2
    TwoByTwoSpec spec{{2.0, 0.0}, {1.0, -1.0}, 2.0, 1};
    HermitianMatrix b = construct_2x2(spec);
    REQUIRE(b.mat()(0, 0).real() == Approx(-0.5).epsilon(1e-12));
    REQUIRE(b.mat()(1, 1).real() == Approx(0.5).epsilon(1e-12));
    REQUIRE(b.mat()(0, 1).real() == Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    VecR lam_b = eigh(b).eigenvalues;
    REQUIRE(lam_b(0) == Approx(1.0).margin(1e-9));
    REQUIRE(lam_b(1) == Approx(-1.0).margin(1e-9));

    MatC a = MatC::Zero(2, 2);
    a(0, 0) = 2.0;
    HermitianMatrix sum(MatC(a + b.mat()));
    REQUIRE(lam_of(sum, 1) == Approx(2.0).margin(1e-9));
    REQUIRE(lam_of(sum, 2) == Approx(0.0).margin(1e-9));
}

TEST_CASE("2x2 construction at the boundary targets") {
    SECTION("top corner: aligned diagonal") {
        TwoByTwoSpec spec{{2.0, 0.0}, {1.0, -1.0}, 3.0, 1};
        HermitianMatrix b = construct_2x2(spec);
        REQUIRE(std::abs(b.mat()(0, 1)) <= 1e-9);
        REQUIRE(b.mat()(0, 0).real() == Approx(1.0).margin(1e-9));
        REQUIRE(b.mat()(1, 1).real() == Approx(-1.0).margin(1e-9));
    }
    SECTION("cross-sum boundary: anti-aligned diagonal") {
        TwoByTwoSpec spec{{3.0, 0.0}, {1.0, -1.0}, 3.0 + (-1.0), 1};
        HermitianMatrix b = construct_2x2(spec);
        REQUIRE(std::abs(b.mat()(0, 1)) <= 1e-7);
        REQUIRE(b.mat()(0, 0).real() == Approx(-1.0).margin(1e-7));
        REQUIRE(b.mat()(1, 1).real() == Approx(1.0).margin(1e-7));
    }
}

TEST_CASE("2x2 construction rejects bad specs") {
    // target strictly between the two cross sums
    REQUIRE_THROWS_AS(construct_2x2(TwoByTwoSpec{{3.0, 0.0}, {1.0, -1.0}, 1.5, 1}),
                      std::domain_error);
    // target outside the majorization window
    REQUIRE_THROWS_AS(construct_2x2(TwoByTwoSpec{{2.0, 0.0}, {1.0, -1.0}, 3.5, 1}),
                      std::domain_error);
    // degenerate spectra
    REQUIRE_THROWS_AS(construct_2x2(TwoByTwoSpec{{1.0, 1.0}, {1.0, -1.0}, 1.0, 1}),
                      std::invalid_argument);
    // eigenvalue index inconsistent with the target
    REQUIRE_THROWS_AS(construct_2x2(TwoByTwoSpec{{2.0, 0.0}, {1.0, -1.0}, 2.0, 2}),
                      std::domain_error);
}

TEST_CASE("random admissible specs reproduce spectrum and target") {
    int built = 0;
    for (int i = 0; i < 520 && built < 500; ++i) {
        Rng rng(derive_seed(400, i));
        auto draw = [&]() {
            double u = rng.uniform(-8.0, 8.0), v = rng.uniform(-8.0, 8.0);
            if (std::abs(u - v) < 0.05) u += 0.1;
            return std::array<double, 2>{std::max(u, v), std::min(u, v)};
        };
        auto la = draw(), lb = draw();
        // rotation parametrization guarantees an admissible target
        const double t = rng.uniform(0.0, kPi);
        Eigen::Matrix2d a = Eigen::Vector2d(la[0], la[1]).asDiagonal();
        Eigen::Matrix2d b0 = Eigen::Vector2d(lb[0], lb[1]).asDiagonal();
        Eigen::Matrix2d r = rotation2(t);
        Eigen::Matrix2d bt = r * b0 * r.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(a + bt);
        const int which = rng.uniform() < 0.5 ? 1 : 2;
        const double target = which == 1 ? es.eigenvalues()(1) : es.eigenvalues()(0);

        TwoByTwoSpec spec{la, lb, target, which};
        try {
            spec.validate();
        } catch (const std::exception&) {
            continue;  // boundary round-off, skip
        }
        HermitianMatrix b = construct_2x2(spec);
        ++built;

        VecR lam_b = eigh(b).eigenvalues;
        REQUIRE(lam_b(0) == Approx(lb[0]).margin(1e-9));
        REQUIRE(lam_b(1) == Approx(lb[1]).margin(1e-9));
        MatC am = a.cast<cxd>();
        HermitianMatrix sum(MatC(am + b.mat()));
        REQUIRE(lam_of(sum, which) == Approx(target).margin(1e-9));

        // characteristic polynomial consistency
        REQUIRE(b.mat().trace().real() == Approx(lb[0] + lb[1]).margin(1e-9));
        const double det = (b.mat()(0, 0) * b.mat()(1, 1) - b.mat()(0, 1) * b.mat()(1, 0)).real();
        REQUIRE(det == Approx(lb[0] * lb[1]).margin(1e-9 * (1.0 + std::abs(lb[0] * lb[1]))));

        // uniqueness of |x2|: the rotation solution realizes the same target,
        // so its off-diagonal magnitude must match the constructed one
        REQUIRE(std::abs(b.mat()(0, 1)) == Approx(std::abs(bt(0, 1))).margin(1e-7));
    }
    REQUIRE(built == 500);
}

TEST_CASE("rotation sweep") {
    SECTION("row count and t range") {
        auto recs = rotation_sweep({2.0, 1.0}, {1.0, -1.0}, 0.5, 2);
        REQUIRE(recs.size() == 2);
        REQUIRE(recs.front().t == Approx(0.0));
        REQUIRE(recs.back().t == Approx(kPi));
    }
    SECTION("zero spectrum gives a constant zero gap") {
        auto recs = rotation_sweep({2.0, 1.0}, {0.0, 0.0}, 0.5, 25);
        for (const auto& r : recs) REQUIRE(std::abs(r.gap) <= 1e-12);
    }
    SECTION("endpoints agree with the commuting vector gap") {
        const std::array<double, 2> la{-3.0, -5.5}, lb{3.4, -5.6};
        for (double s : {0.25, 0.5, 0.75}) {
            auto recs = rotation_sweep(la, lb, s, 11);
            VecR va(2), vb(2), sum(2), dif(2);
            va << la[0], la[1];
            vb << lb[0], lb[1];
            sum << la[0] + lb[0], la[1] + lb[1];
            dif << la[0] - lb[0], la[1] - lb[1];
            const double na = vector_s(va, s), nb = vector_s(vb, s);
            const double commuting = vector_s_power(sum, s) + vector_s_power(dif, s) -
                                     std::pow(na + nb, s) - std::pow(std::abs(na - nb), s);
            REQUIRE(recs.front().gap == Approx(commuting).margin(1e-9));
            REQUIRE(recs.back().gap == Approx(commuting).margin(1e-9));
        }
    }
    SECTION("reference spectra change sign and the crossing is localized") {
        const std::array<double, 2> la{-3.0, -5.5}, lb{3.4, -5.6};
        for (double s : {0.25, 0.5, 0.75}) {
            auto recs = rotation_sweep(la, lb, s, 721);
            double lo = 1e300, hi = -1e300;
            for (const auto& r : recs) {
                if (r.singular) continue;
                lo = std::min(lo, r.gap);
                hi = std::max(hi, r.gap);
            }
            REQUIRE(lo < -1e-6);
            REQUIRE(hi > 1e-6);
            auto cross = locate_sign_change(la, lb, s);
            REQUIRE(cross.has_value());
            REQUIRE(cross->t_hi - cross->t_lo <= 1e-6);
            REQUIRE(cross->gap_lo * cross->gap_hi <= 0.0);
        }
    }
    SECTION("thread count does not change the records") {
        auto a = rotation_sweep({1.0, -2.0}, {0.5, -0.25}, 0.5, 101, 1);
        auto b = rotation_sweep({1.0, -2.0}, {0.5, -0.25}, 0.5, 101, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].t == b[i].t);
            REQUIRE(a[i].gap == b[i].gap);
        }
    }
}

TEST_CASE("counterexample search") {
    SECTION("empty exponent list yields no records") {
        REQUIRE(counterexample_search({}, 10, 1).empty());
    }
    SECTION("reference spectra are found as violations") {
        std::vector<std::pair<std::array<double, 2>, std::array<double, 2>>> preset = {
            {{-3.0, -5.5}, {3.4, -5.6}}};
        auto found = counterexample_search({0.25, 0.5, 0.75}, 0, 1, preset);
        REQUIRE(found.size() >= 1);
    }
    SECTION("violations re-verify from their stored parameters") {
        auto found = counterexample_search({0.5}, 40, 2024);
        for (const auto& v : found) {
            const double g = cex_gap(v.lam_a, v.lam_b, v.s, v.t);
            const double directed = v.s > 0.0 ? g : -g;
            REQUIRE(directed == Approx(v.gap).epsilon(1e-12));
            REQUIRE(directed > 0.0);
        }
    }
    SECTION("restricting to positive pairs silences every violation") {
        CexSearchOptions opts;
        opts.require_psd_pair = true;
        auto found = counterexample_search({0.5, 0.25}, 60, 7, {}, opts);
        REQUIRE(found.empty());
    }
    SECTION("deterministic for a fixed seed") {
        auto a = counterexample_search({0.5}, 25, 99);
        auto b = counterexample_search({0.5}, 25, 99);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].t == b[i].t);
            REQUIRE(a[i].gap == b[i].gap);
            REQUIRE(a[i].lam_a == b[i].lam_a);
        }
    }
}
