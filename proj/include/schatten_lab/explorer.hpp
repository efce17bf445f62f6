#pragma once
//
// schatten_lab -- explorer : 2x2 constructive solver for a Hermitian matrix
// with prescribed spectrum and one prescribed eigenvalue of A + B, uniform
// rotation sweeps of the Hanner-type gap, and randomized counterexample
// search outside the positive-pair domain.
//

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schatten_lab/config.hpp"
#include "schatten_lab/linalg.hpp"
#include "schatten_lab/random.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/schatten.hpp"

namespace schatten_lab {

// Target data for the 2x2 construction. Eigenvalue pairs are descending;
// `which` selects which eigenvalue of A + B must equal `target`.
struct TwoByTwoSpec {
    std::array<double, 2> lam_a{};  // descending, distinct
    std::array<double, 2> lam_b{};  // descending, distinct
    double target = 0.0;
    int which = 1;  // 1 or 2

    void validate(double tol = 1e-12) const {
        if (which != 1 && which != 2)
            throw std::invalid_argument("TwoByTwoSpec: which must be 1 or 2");
        if (!(lam_a[0] > lam_a[1]) || !(lam_b[0] > lam_b[1]))
            throw std::invalid_argument("TwoByTwoSpec: spectra must be distinct and descending");
        if (target < lam_a[1] + lam_b[1] - tol || target > lam_a[0] + lam_b[0] + tol)
            throw std::domain_error("TwoByTwoSpec: target outside [l2(A)+l2(B), l1(A)+l1(B)]");
        const double cross1 = lam_a[0] + lam_b[1], cross2 = lam_a[1] + lam_b[0];
        const bool above = target >= cross1 - tol && target >= cross2 - tol;
        const bool below = target <= cross1 + tol && target <= cross2 + tol;
        if (!above && !below)
            throw std::domain_error("TwoByTwoSpec: target strictly between the cross sums");
        const double tr = lam_a[0] + lam_a[1] + lam_b[0] + lam_b[1];
        if (which == 1 && target < tr / 2.0 - tol)
            throw std::domain_error("TwoByTwoSpec: target too small to be the top eigenvalue");
        if (which == 2 && target > tr / 2.0 + tol)
            throw std::domain_error("TwoByTwoSpec: target too large to be the bottom eigenvalue");
    }
};

// Closed-form solution: with A = diag(lam_a), B = [[x1, x2],[x2, x3]] is fixed
// by tr B, det B and det(A + B - target) = 0; |x2|^2 comes from the quartic
// product of target offsets, and the phase is fixed real nonnegative (every
// norm quantity downstream depends on |x2| only).
inline HermitianMatrix construct_2x2(const TwoByTwoSpec& spec, double tol = 1e-10) {
    spec.validate();
    const double a1 = spec.lam_a[0], a2 = spec.lam_a[1];
    const double b1 = spec.lam_b[0], b2 = spec.lam_b[1];
    const double mu = spec.target;

    const double x1 = ((b1 + b2) * (a1 - mu) + (a1 - mu) * (a2 - mu) + b1 * b2) / (a1 - a2);
    const double x3 = (b1 + b2) - x1;

    const double quartic = (a1 + b1 - mu) * (a2 + b2 - mu) * (a1 + b2 - mu) * (a2 + b1 - mu);
    double x2_sq = -quartic / ((a1 - a2) * (a1 - a2));
    const double scale = std::max({1.0, a1 * a1, b1 * b1, mu * mu});
    if (x2_sq < -tol * scale)
        throw std::domain_error("construct_2x2: inadmissible target (positive quartic product)");
    x2_sq = std::max(x2_sq, 0.0);
    const double x2 = std::sqrt(x2_sq);

    MatC b(2, 2);
    b << cxd(x1, 0.0), cxd(x2, 0.0), cxd(x2, 0.0), cxd(x3, 0.0);
    return HermitianMatrix(std::move(b), 1e-12);
}

// ---------------------------------------------------------------------------
// rotation sweep of the Hanner-type gap
//
//   gap(t) = ||A+B_t||_s^s + ||A-B_t||_s^s
//            - (||lam_a||_s + ||lam_b||_s)^s - | ||lam_a||_s - ||lam_b||_s |^s,
// with A = diag(lam_a) and B_t the rotation of diag(lam_b) by angle t.

inline Eigen::Matrix2d rotation2(double t) {
    Eigen::Matrix2d r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
}

inline double cex_gap(const std::array<double, 2>& lam_a, const std::array<double, 2>& lam_b,
                      double s, double t) {
    Eigen::Matrix2d a = Eigen::Vector2d(lam_a[0], lam_a[1]).asDiagonal();
    Eigen::Matrix2d b0 = Eigen::Vector2d(lam_b[0], lam_b[1]).asDiagonal();
    Eigen::Matrix2d r = rotation2(t);
    Eigen::Matrix2d bt = r * b0 * r.transpose();
    MatC sum = (a + bt).cast<cxd>(), dif = (a - bt).cast<cxd>();

    if (s < 0.0) {
        VecR ssum = svd_vals(sum), sdif = svd_vals(dif);
        if (ssum.minCoeff() <= 1e-12 || sdif.minCoeff() <= 1e-12)
            return std::numeric_limits<double>::quiet_NaN();
    }
    VecR va(2), vb(2);
    va << lam_a[0], lam_a[1];
    vb << lam_b[0], lam_b[1];
    const double na = vector_s(va, s), nb = vector_s(vb, s);
    const double diff = std::abs(na - nb);
    const double diff_term = diff <= kSingularityThreshold ? 0.0 : std::pow(diff, s);
    return schatten_s_power(sum, s) + schatten_s_power(dif, s) - std::pow(na + nb, s) - diff_term;
}

inline std::vector<SweepRecord> rotation_sweep(const std::array<double, 2>& lam_a,
                                               const std::array<double, 2>& lam_b, double s,
                                               int grid, int thread_cap = -1) {
    if (grid < 2) throw std::invalid_argument("rotation_sweep: grid >= 2 required");
    const double pi = 3.14159265358979323846;
    std::vector<SweepRecord> recs(static_cast<std::size_t>(grid));
    parallel_for(static_cast<std::size_t>(grid), [&](std::size_t i) {
        const double t = pi * static_cast<double>(i) / static_cast<double>(grid - 1);
        const double g = cex_gap(lam_a, lam_b, s, t);
        recs[i] = SweepRecord{t, s, g, !std::isfinite(g)};
    }, thread_cap);
    return recs;
}

// Bisection refinement of a sign change bracketed by two sweep points.
struct SignChange {
    double t_lo = 0.0;
    double t_hi = 0.0;
    double gap_lo = 0.0;
    double gap_hi = 0.0;
};

inline std::optional<SignChange> locate_sign_change(const std::array<double, 2>& lam_a,
                                                    const std::array<double, 2>& lam_b, double s,
                                                    int grid = 721, double t_tol = 1e-6) {
    auto recs = rotation_sweep(lam_a, lam_b, s, grid);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        if (recs[i - 1].singular || recs[i].singular) continue;
        const double g0 = recs[i - 1].gap, g1 = recs[i].gap;
        if (g0 == 0.0 || g0 * g1 >= 0.0) continue;
        double lo = recs[i - 1].t, hi = recs[i].t, glo = g0, ghi = g1;
        while (hi - lo > t_tol) {
            const double mid = 0.5 * (lo + hi);
            const double gm = cex_gap(lam_a, lam_b, s, mid);
            if (!std::isfinite(gm)) break;
            if ((gm < 0.0) == (glo < 0.0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
                ghi = gm;
            }
        }
        return SignChange{lo, hi, glo, ghi};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// randomized counterexample search

struct CexViolation {
    std::array<double, 2> lam_a{};
    std::array<double, 2> lam_b{};
    double s = 0.0;
    double t = 0.0;
    double gap = 0.0;  // directed: positive means the positive-pair conclusion fails
};

struct CexSearchOptions {
    int grid = 181;
    double eig_range = 8.0;
    double min_spectral_gap = 0.05;
    double violation_tol = 1e-7;
    bool require_psd_pair = false;  // restrict checks to grid points with A+-B_t >= 0
};

// Sweeps random spectra (plus any seeds the caller prepends) and records the
// extremal violation of the positive-pair Hanner direction per (trial, s).
inline std::vector<CexViolation> counterexample_search(
    const std::vector<double>& s_list, int trials, std::uint64_t seed,
    const std::vector<std::pair<std::array<double, 2>, std::array<double, 2>>>& preset = {},
    const CexSearchOptions& opts = {}) {
    if (trials < 0) throw std::invalid_argument("counterexample_search: trials >= 0 required");
    std::vector<std::pair<std::array<double, 2>, std::array<double, 2>>> specs = preset;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        auto draw_pair = [&]() {
            std::array<double, 2> lam{};
            for (int attempt = 0; attempt < 256; ++attempt) {
                const double u = rng.uniform(-opts.eig_range, opts.eig_range);
                const double v = rng.uniform(-opts.eig_range, opts.eig_range);
                lam = {std::max(u, v), std::min(u, v)};
                if (lam[0] - lam[1] >= opts.min_spectral_gap) return lam;
            }
            return lam;
        };
        specs.emplace_back(draw_pair(), draw_pair());
    }

    const double pi = 3.14159265358979323846;
    std::vector<CexViolation> found;
    for (const auto& [la, lb] : specs) {
        for (double s : s_list) {
            double best = 0.0, best_t = -1.0;
            for (int gix = 0; gix < opts.grid; ++gix) {
                const double t = pi * gix / (opts.grid - 1);
                if (opts.require_psd_pair) {
                    Eigen::Matrix2d a = Eigen::Vector2d(la[0], la[1]).asDiagonal();
                    Eigen::Matrix2d b0 = Eigen::Vector2d(lb[0], lb[1]).asDiagonal();
                    Eigen::Matrix2d r = rotation2(t);
                    Eigen::Matrix2d bt = r * b0 * r.transpose();
                    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> p(a + bt), q(a - bt);
                    if (p.eigenvalues().minCoeff() < -1e-10 ||
                        q.eigenvalues().minCoeff() < -1e-10)
                        continue;
                }
                const double g = cex_gap(la, lb, s, t);
                if (!std::isfinite(g)) continue;
                // positive-pair conclusion: gap <= 0 for 0 < s < 1, >= 0 for s < 0
                const double directed = s > 0.0 ? g : -g;
                if (directed > best) {
                    best = directed;
                    best_t = t;
                }
            }
            if (best > opts.violation_tol && best_t >= 0.0)
                found.push_back({la, lb, s, best_t, best});
        }
    }
    return found;
}

}  // namespace schatten_lab
