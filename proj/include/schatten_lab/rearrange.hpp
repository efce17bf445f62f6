#pragma once
//
// schatten_lab -- rearrange : singular-value rearrangement inequality
// evaluators with their admissibility predicates.
//
// Opposed pairing (cross):   ||C+D||_s^s + ||C-D||_s^s  vs
//                            ||s_up(C)+s_down(D)||_s^s + ||s_up(C)-s_down(D)||_s^s
// Aligned pairing:           ||s_up(C)+s_up(D)||_s^s + ||s_up(C)-s_up(D)||_s^s
//

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "schatten_lab/linalg.hpp"
#include "schatten_lab/random.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/schatten.hpp"

namespace schatten_lab {

// C >= |D| >= 0 and sigma_min(C) >= sigma_max(D).
inline bool svr1_admissible(const HermitianMatrix& c, const HermitianMatrix& d,
                            double tol = 1e-12) {
    if (c.dim() != d.dim()) throw std::invalid_argument("svr1_admissible: dim mismatch");
    VecR sc = svd_vals(c.mat()), sd = svd_vals(d.mat());
    if (sc(sc.size() - 1) < sd(0) - tol) return false;
    SpectralData dd = eigh(d);
    VecR abs_lam = dd.eigenvalues.cwiseAbs();
    MatC abs_d = dd.eigenvectors * abs_lam.asDiagonal() * dd.eigenvectors.adjoint();
    Eigen::SelfAdjointEigenSolver<MatC> es(MatC(c.mat() - abs_d));
    return es.eigenvalues().minCoeff() >= -tol;
}

// C >= D >= 0.
inline bool svr2_admissible(const HermitianMatrix& c, const HermitianMatrix& d,
                            double tol = 1e-12) {
    if (c.dim() != d.dim()) throw std::invalid_argument("svr2_admissible: dim mismatch");
    Eigen::SelfAdjointEigenSolver<MatC> d_es(d.mat());
    if (d_es.eigenvalues().minCoeff() < -tol) return false;
    Eigen::SelfAdjointEigenSolver<MatC> cd_es(MatC(c.mat() - d.mat()));
    return cd_es.eigenvalues().minCoeff() >= -tol;
}

namespace detail {

struct SvrSides {
    double matrix_side = 0.0;
    double vector_side = 0.0;
    bool vector_defined = true;
};

inline SvrSides svr_sides(const HermitianMatrix& c, const HermitianMatrix& d, double s,
                          bool opposed) {
    SvrSides out;
    out.matrix_side = schatten_s_power(MatC(c.mat() + d.mat()), s) +
                      schatten_s_power(MatC(c.mat() - d.mat()), s);
    VecR su_c = svd_vals_ascending(c.mat());
    VecR sd_d = svd_vals(d.mat());
    VecR d_side = opposed ? sd_d : VecR(sd_d.reverse());
    VecR sum = su_c + d_side, dif = su_c - d_side;
    if (s < 0.0) {
        for (int i = 0; i < dif.size(); ++i)
            if (std::abs(dif(i)) <= 1e-10 || std::abs(sum(i)) <= 1e-10) {
                out.vector_defined = false;
                return out;
            }
    }
    out.vector_side = vector_s_power(sum, s) + vector_s_power(dif, s);
    return out;
}

}  // namespace detail

// Matrix side vs opposed pairing: >= for 0 < s < 1, <= for s < 0.
inline GapReport svr1_gap(const HermitianMatrix& c, const HermitianMatrix& d, double s,
                          double tol = default_tols().gap) {
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm) throw std::invalid_argument("svr1_gap: s < 1 required");
    bool asserted = svr1_admissible(c, d);
    if (s < 0.0) {
        Eigen::SelfAdjointEigenSolver<MatC> p(MatC(c.mat() + d.mat())), q(MatC(c.mat() - d.mat()));
        if (p.eigenvalues().minCoeff() <= 1e-10 || q.eigenvalues().minCoeff() <= 1e-10)
            throw std::domain_error("svr1_gap: C +- D must be positive definite for s < 0");
    }
    auto sides = detail::svr_sides(c, d, s, /*opposed=*/true);
    if (!sides.vector_defined)
        throw std::domain_error("svr1_gap: vector side singular for s < 0");
    const Direction dir = s > 0.0 ? Direction::GreaterEq : Direction::LessEq;
    const double scale = std::max(1.0, std::abs(sides.vector_side));
    return make_gap_report(sides.matrix_side, sides.vector_side, dir, tol * scale,
                           "svr1 s=" + std::to_string(s), asserted);
}

// Matrix side vs aligned pairing: <= for 0 < s < 1, >= for s < 0.
inline GapReport svr2_gap(const HermitianMatrix& c, const HermitianMatrix& d, double s,
                          double tol = default_tols().gap) {
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm) throw std::invalid_argument("svr2_gap: s < 1 required");
    bool asserted = svr2_admissible(c, d);
    if (s < 0.0) {
        Eigen::SelfAdjointEigenSolver<MatC> p(MatC(c.mat() + d.mat())), q(MatC(c.mat() - d.mat()));
        if (p.eigenvalues().minCoeff() <= 1e-10 || q.eigenvalues().minCoeff() <= 1e-10)
            throw std::domain_error("svr2_gap: C +- D must be positive definite for s < 0");
    }
    auto sides = detail::svr_sides(c, d, s, /*opposed=*/false);
    if (!sides.vector_defined)
        throw std::domain_error("svr2_gap: vector side singular for s < 0");
    const Direction dir = s > 0.0 ? Direction::LessEq : Direction::GreaterEq;
    const double scale = std::max(1.0, std::abs(sides.vector_side));
    return make_gap_report(sides.matrix_side, sides.vector_side, dir, tol * scale,
                           "svr2 s=" + std::to_string(s), asserted);
}

// Necessity probe: unitary D (so both pairings coincide) with C > I. The
// aligned-direction inequality then fails strictly on generic draws, showing
// the positivity condition on D cannot be dropped.
struct SvrViolationRecord {
    int trial = -1;
    double s = 0.0;
    double matrix_side = 0.0;
    double vector_side = 0.0;
    double excess = 0.0;  // matrix_side - vector_side > 0
};

inline std::vector<SvrViolationRecord> svr_necessity_probe(std::uint64_t seed, int trials,
                                                           int dim = 2, double s = 0.5,
                                                           double tol = 1e-9) {
    if (trials < 0) throw std::invalid_argument("svr_necessity_probe: trials >= 0 required");
    std::vector<SvrViolationRecord> out;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t sd = derive_seed(seed, static_cast<std::uint64_t>(i));
        MatC u = haar_unitary(dim, sd);
        Rng rng(splitmix64(sd));
        MatC base = ginibre(dim, rng);
        MatC cm = (base * base.adjoint()) / double(dim) +
                  (1.0 + rng.uniform(0.05, 0.5)) * MatC::Identity(dim, dim);
        HermitianMatrix c(cm, 1e-9);

        const double matrix_side =
            schatten_s_power(MatC(c.mat() + u), s) + schatten_s_power(MatC(c.mat() - u), s);
        VecR su_c = svd_vals_ascending(c.mat());
        VecR ones = VecR::Ones(dim);
        const double vector_side =
            vector_s_power(su_c + ones, s) + vector_s_power(su_c - ones, s);
        // degenerate equality (e.g. C, D commuting with aligned spectra) is
        // excluded from the strictness count
        if (matrix_side > vector_side + tol * std::max(1.0, vector_side)) {
            out.push_back({i, s, matrix_side, vector_side, matrix_side - vector_side});
        }
    }
    return out;
}

}  // namespace schatten_lab
