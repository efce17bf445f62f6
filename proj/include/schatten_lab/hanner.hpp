#pragma once
//
// schatten_lab -- hanner : Hanner-type gap evaluators for vectors and
// matrices, the even-order Taylor coefficient machinery behind them, and the
// equality-case detector.
//
// Conventions. For exponents s < 1 (s != 0) the "reverse" gap is
//     gap = (||x||_s + ||y||_s)^s + | ||x||_s - ||y||_s |^s
//           - ||x+y||_s^s - ||x-y||_s^s,
// expected >= 0 for 0 < s < 1 and <= 0 for s < 0 on the asserted domains.
// For p >= 1 the forward gap is
//     gap = ||x+y||_p^p + ||x-y||_p^p - (||x||_p+||y||_p)^p - | ... |^p,
// expected >= 0 for 1 <= p <= 2 and <= 0 for p >= 2 on the asserted regimes.
//

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "schatten_lab/linalg.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/schatten.hpp"

namespace schatten_lab {

// ---------------------------------------------------------------------------
// Pochhammer falling factorial s(s-1)...(s-k+1)

inline double pochhammer_falling(double s, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer_falling: k >= 0 required");
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= (s - j);
    return v;
}

struct PochhammerFalling {
    double s;
    int k;
    double value;
    PochhammerFalling(double s_, int k_) : s(s_), k(k_), value(pochhammer_falling(s_, k_)) {}
};

// ---------------------------------------------------------------------------
// vector gaps

inline void require_same_length(const VecR& x, const VecR& y, const char* who) {
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(who) + ": length mismatch");
}

inline GapReport vector_hanner_gap(const VecR& x, const VecR& y, double p,
                                   double tol = default_tols().gap) {
    require_same_length(x, y, "vector_hanner_gap");
    if (p < 1.0)
        throw std::invalid_argument("vector_hanner_gap: p >= 1 required, use the reverse form");
    const double lhs = vector_s_power(x + y, p) + vector_s_power(x - y, p);
    const double nx = vector_s(x, p), ny = vector_s(y, p);
    const double rhs = std::pow(nx + ny, p) + std::pow(std::abs(nx - ny), p);
    const Direction dir = (p <= 2.0) ? Direction::GreaterEq : Direction::LessEq;
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, dir, tol * scale, "p=" + std::to_string(p));
}

struct ReverseHannerResult {
    GapReport report;
    bool domain_flag = false;  // componentwise |y_i| <= |x_i|
};

// For s < 0, zero vector-side terms use the continuity convention value 0
// when the norm difference vanishes; any |x_i| = |y_i| is a domain error
// because one of x+y, x-y is then singular.
inline ReverseHannerResult vector_reverse_hanner_gap(const VecR& x, const VecR& y, double s,
                                                     double tol = default_tols().gap) {
    require_same_length(x, y, "vector_reverse_hanner_gap");
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm)
        throw std::invalid_argument("vector_reverse_hanner_gap: s < 1 required");

    bool domain = true;
    for (int i = 0; i < x.size(); ++i) {
        const double ax = std::abs(x(i)), ay = std::abs(y(i));
        if (ay > ax + 1e-12) domain = false;
        if (s < 0.0 && std::abs(ax - ay) <= kSingularityThreshold)
            throw std::domain_error("vector_reverse_hanner_gap: |x_i| = |y_i| with s < 0");
    }
    const double nx = vector_s(x, s), ny = vector_s(y, s);
    const double diff = std::abs(nx - ny);
    // equal norms: the difference term is 0 by the continuity convention
    const double diff_term = diff <= kSingularityThreshold ? 0.0 : std::pow(diff, s);
    const double lhs = std::pow(nx + ny, s) + diff_term;
    const double rhs = vector_s_power(x + y, s) + vector_s_power(x - y, s);
    const Direction dir = (s > 0.0) ? Direction::GreaterEq : Direction::LessEq;
    const double scale = std::max(1.0, std::abs(rhs));
    ReverseHannerResult out;
    out.domain_flag = domain;
    out.report = make_gap_report(lhs, rhs, dir, tol * scale, "s=" + std::to_string(s), domain);
    return out;
}

// ---------------------------------------------------------------------------
// matrix gaps

inline bool is_psd_pair(const MatC& c, const MatC& d, double tol = 1e-10) {
    const double dev = std::max((c - c.adjoint()).cwiseAbs().maxCoeff(),
                                (d - d.adjoint()).cwiseAbs().maxCoeff());
    if (dev > 1e-9) return false;
    Eigen::SelfAdjointEigenSolver<MatC> p(MatC(c + d)), q(MatC(c - d));
    return p.eigenvalues().minCoeff() >= -tol && q.eigenvalues().minCoeff() >= -tol;
}

inline GapReport matrix_hanner_gap(const MatC& c, const MatC& d, double p,
                                   double tol = default_tols().gap) {
    require_square_finite(c, "matrix_hanner_gap");
    require_square_finite(d, "matrix_hanner_gap");
    if (c.rows() != d.rows()) throw std::invalid_argument("matrix_hanner_gap: dim mismatch");
    if (p < 1.0) throw std::invalid_argument("matrix_hanner_gap: p >= 1 required");

    const double lhs = schatten_s_power(MatC(c + d), p) + schatten_s_power(MatC(c - d), p);
    const double nc = schatten(c, p), nd = schatten(d, p);
    const double rhs = std::pow(nc + nd, p) + std::pow(std::abs(nc - nd), p);

    bool asserted = (p >= 1.0 && p <= 4.0 / 3.0) || p >= 4.0;
    if (!asserted && is_psd_pair(c, d)) asserted = true;
    if (!asserted && std::abs(nc - nd) <= 1e-12 * std::max(1.0, nc)) asserted = true;
    if (!asserted && p == std::floor(p) && (static_cast<long>(p) % 2 == 0)) asserted = true;

    const Direction dir = (p <= 2.0) ? Direction::GreaterEq : Direction::LessEq;
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, dir, tol * scale, "p=" + std::to_string(p), asserted);
}

struct MatrixReverseHannerResult {
    GapReport report;
    double commutator_fro = 0.0;  // ||CD - DC||_F, for the equality diagnosis
};

// Asserted domain: C+D, C-D >= 0 for 0 < s < 1. For s < 0 the claim
// additionally needs D >= 0 (and strict definiteness); with indefinite D the
// direction genuinely fails, so such inputs are recorded, not asserted.
inline MatrixReverseHannerResult matrix_reverse_hanner_gap(const HermitianMatrix& c,
                                                           const HermitianMatrix& d, double s,
                                                           double tol = default_tols().gap) {
    if (c.dim() != d.dim())
        throw std::invalid_argument("matrix_reverse_hanner_gap: dim mismatch");
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm)
        throw std::invalid_argument("matrix_reverse_hanner_gap: s < 1 required");

    Eigen::SelfAdjointEigenSolver<MatC> sum_es(MatC(c.mat() + d.mat()));
    Eigen::SelfAdjointEigenSolver<MatC> dif_es(MatC(c.mat() - d.mat()));
    const double min_sum = sum_es.eigenvalues().minCoeff();
    const double min_dif = dif_es.eigenvalues().minCoeff();

    bool asserted;
    if (s > 0.0) {
        asserted = min_sum >= -1e-10 && min_dif >= -1e-10;
    } else {
        if (min_sum <= kSingularityThreshold || min_dif <= kSingularityThreshold)
            throw std::domain_error("matrix_reverse_hanner_gap: singular C+D or C-D with s < 0");
        Eigen::SelfAdjointEigenSolver<MatC> d_es(d.mat());
        asserted = d_es.eigenvalues().minCoeff() >= -1e-10;
    }

    const double nc = schatten(c.mat(), s);
    double nd;
    if (s < 0.0) {
        nd = schatten_antinorm_or_zero(d.mat(), s);
    } else {
        nd = schatten(d.mat(), s);
    }
    const double diff = std::abs(nc - nd);
    const double diff_term = diff <= kSingularityThreshold ? 0.0 : std::pow(diff, s);
    const double lhs = std::pow(nc + nd, s) + diff_term;
    const double rhs = schatten_s_power(MatC(c.mat() + d.mat()), s) +
                       schatten_s_power(MatC(c.mat() - d.mat()), s);

    const Direction dir = (s > 0.0) ? Direction::GreaterEq : Direction::LessEq;
    const double scale = std::max(1.0, std::abs(rhs));
    MatrixReverseHannerResult out;
    out.report = make_gap_report(lhs, rhs, dir, tol * scale, "s=" + std::to_string(s), asserted);
    out.commutator_fro = (c.mat() * d.mat() - d.mat() * c.mat()).norm();
    return out;
}

// ---------------------------------------------------------------------------
// scalar Taylor side

// Even-order coefficients of (a + r b)^s + (a - r b)^s around r = 0:
// coefficient of r^(2k) is 2 (s)_{2k} / (2k)! * b^(2k) a^(s-2k).
struct TaylorSide {
    std::vector<double> coefficients;  // index k holds the r^(2k) coefficient
    int truncation = 0;
    double remainder_bound = 0.0;
    bool remainder_valid = false;      // false when ||y||/||x|| > 0.95

    double partial_sum(int k) const {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += coefficients[static_cast<std::size_t>(j)];
        return acc;
    }
};

inline TaylorSide scalar_taylor_side(double norm_x, double norm_y, double s, int cap_k) {
    if (!(norm_x > norm_y) || !(norm_y >= 0.0))
        throw std::domain_error("scalar_taylor_side: requires norm_x > norm_y >= 0");
    if (cap_k < 0) throw std::invalid_argument("scalar_taylor_side: K >= 0 required");
    TaylorSide side;
    side.truncation = cap_k;
    side.coefficients.resize(static_cast<std::size_t>(cap_k) + 1);
    double factorial = 1.0;
    for (int k = 0; k <= cap_k; ++k) {
        if (k > 0) factorial *= (2.0 * k - 1.0) * (2.0 * k);
        side.coefficients[static_cast<std::size_t>(k)] =
            2.0 * pochhammer_falling(s, 2 * k) / factorial * std::pow(norm_y, 2 * k) *
            std::pow(norm_x, s - 2 * k);
    }
    const double ratio = norm_y / norm_x;
    // geometric tail bound: successive coefficient magnitudes grow by at most
    // (2j-s)(2j+1-s)/((2j+1)(2j+2)) per step, which is decreasing in j, so the
    // first step after the truncation bounds the whole tail
    const double j = cap_k + 1.0;
    const double step = (2.0 * j - s) * (2.0 * j + 1.0 - s) /
                        ((2.0 * j + 1.0) * (2.0 * j + 2.0));
    const double r_eff = ratio * ratio * std::max(1.0, step);
    if (ratio <= 0.95 && r_eff < 1.0) {
        const double next_fact = factorial * (2.0 * cap_k + 1.0) * (2.0 * cap_k + 2.0);
        const double first_omitted = std::abs(2.0 * pochhammer_falling(s, 2 * (cap_k + 1)) /
                                              next_fact * std::pow(norm_y, 2 * (cap_k + 1)) *
                                              std::pow(norm_x, s - 2 * (cap_k + 1)));
        side.remainder_bound = first_omitted / (1.0 - r_eff);
        side.remainder_valid = true;
    }
    return side;
}

// F(1) vs the partial sums S_2k(1): for 0 < s < 1 the partial sums decrease
// and stay above F(1); for s < 0 they increase and stay below.
inline GapReport partial_sum_bound_check(const VecR& x, const VecR& y, double s, int cap_k,
                                         double tol = default_tols().gap) {
    require_same_length(x, y, "partial_sum_bound_check");
    const double nx = vector_s(x, s), ny = vector_s(y, s);
    if (!(nx > ny))
        throw std::domain_error("partial_sum_bound_check: requires ||x||_s > ||y||_s");
    for (int i = 0; i < x.size(); ++i)
        if (std::abs(y(i)) > std::abs(x(i)) + 1e-12)
            throw std::domain_error("partial_sum_bound_check: requires |y_i| <= |x_i|");

    const double f1 = vector_s_power(x + y, s) + vector_s_power(x - y, s);
    TaylorSide side = scalar_taylor_side(nx, ny, s, cap_k);

    double worst = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double prev = 0.0;
    for (int k = 0; k <= cap_k; ++k) {
        const double sk = side.partial_sum(k);
        const double slack = (s > 0.0) ? (sk - f1) : (f1 - sk);
        worst = std::min(worst, slack);
        if (k > 0) {
            const double step = (s > 0.0) ? (prev - sk) : (sk - prev);
            if (step < -tol * std::max(1.0, std::abs(prev))) monotone = false;
        }
        prev = sk;
    }
    const double scale = std::max(1.0, std::abs(f1));
    GapReport g = make_gap_report(worst, 0.0, Direction::GreaterEq, tol * scale,
                                  "partial sums, s=" + std::to_string(s));
    if (!monotone) g.verdict = Verdict::Violated;
    return g;
}

// ---------------------------------------------------------------------------
// matrix Taylor coefficients via the resolvent representation

namespace detail {

// Trace of the r^order coefficient of (t + C + r D)^(-m), from the resolvent
// series S_j = (-1)^j (G D)^j G with G = (t + C)^(-1); the m-fold product is
// truncated at the requested order.
inline double resolvent_series_trace(const MatC& g, const MatC& d, int m, int order) {
    std::vector<MatC> base(static_cast<std::size_t>(order) + 1);
    base[0] = g;
    MatC gd = g * d;
    for (int j = 1; j <= order; ++j) base[static_cast<std::size_t>(j)] = -(gd * base[j - 1]);

    std::vector<MatC> prod = base;
    for (int f = 1; f < m; ++f) {
        std::vector<MatC> next(static_cast<std::size_t>(order) + 1,
                               MatC::Zero(g.rows(), g.cols()));
        for (int j = 0; j <= order; ++j)
            for (int i = 0; i <= j; ++i) next[j] += prod[i] * base[j - i];
        prod.swap(next);
    }
    return prod[static_cast<std::size_t>(order)].trace().real();
}

}  // namespace detail

// order-th derivative of F(r) = Tr[(C + rD)^s + (C - rD)^s] at r = 0,
// computed by exact differentiation under the quadrature integral sign.
// Odd orders vanish by symmetry and are returned as the computed cancellation.
inline double matrix_taylor_deriv(const HermitianMatrix& c, const HermitianMatrix& d, double s,
                                  int order, const QuadratureScheme& q = default_quadrature()) {
    if (order < 1) throw std::invalid_argument("matrix_taylor_deriv: order >= 1 required");
    const PowerBranch branch = classify_power_branch(s);
    const int n = c.dim();
    {
        Eigen::LLT<MatC> llt(c.mat());
        if (llt.info() != Eigen::Success)
            throw std::domain_error("matrix_taylor_deriv: C must be positive definite");
    }
    if (order % 2 == 1) return 0.0;  // exact by the r -> -r symmetry of F

    const double cs = calibrate_power_constant(s, q);
    const MatC id = MatC::Identity(n, n);
    int m = 1;
    double sign = 1.0;
    const double fl = std::floor(s);
    switch (branch) {
        case PowerBranch::ZeroOne: sign = -1.0; break;      // kernel (1/t - resolvent)
        case PowerBranch::MinusOneZero: sign = 1.0; break;
        case PowerBranch::BelowMinusOne:
            sign = 1.0;
            m = static_cast<int>(-fl);
            break;
        case PowerBranch::OneTwo: sign = 1.0; break;        // linear term drops out at order >= 2
    }

    double integral = 0.0;
    for (int i = 0; i < q.nodes; ++i) {
        const double t = q.t[i];
        Eigen::LLT<MatC> llt(MatC(c.mat() + t * id));
        MatC g = llt.solve(id);
        // both +rD and -rD branches contribute equally at even order
        const double tr = 2.0 * detail::resolvent_series_trace(g, d.mat(), m, order);
        double tw = 0.0;
        switch (branch) {
            case PowerBranch::ZeroOne: tw = std::pow(t, s); break;
            case PowerBranch::MinusOneZero: tw = std::pow(t, s); break;
            case PowerBranch::BelowMinusOne: tw = std::pow(t, s - fl - 1.0); break;
            case PowerBranch::OneTwo: tw = std::pow(t, s); break;
        }
        integral += q.w[i] * tw * tr;
    }
    double factorial = 1.0;
    for (int j = 2; j <= order; ++j) factorial *= j;
    return sign * cs * factorial * integral;
}

// 2k-th derivative of F at r = 0 (the matrix-side Taylor coefficient times (2k)!).
inline double matrix_taylor_coeff(const HermitianMatrix& c, const HermitianMatrix& d, double s,
                                  int k, const QuadratureScheme& q = default_quadrature()) {
    if (k < 1) throw std::invalid_argument("matrix_taylor_coeff: k >= 1 required");
    return matrix_taylor_deriv(c, d, s, 2 * k, q);
}

// Tr[((C+t)^{-1} D)^{2k}] >= Tr[((C_Diag+t)^{-1} D)^{2k}] in the basis where
// D is diagonal (C_Diag is the diagonal part of C in that basis).
inline GapReport psi_convexity_step_check(const HermitianMatrix& c, const HermitianMatrix& d,
                                          double t, int k, double tol = default_tols().gap) {
    if (t <= 0.0) throw std::invalid_argument("psi_convexity_step_check: t > 0 required");
    if (k < 1) throw std::invalid_argument("psi_convexity_step_check: k >= 1 required");
    {
        Eigen::LLT<MatC> llt(c.mat());
        if (llt.info() != Eigen::Success)
            throw std::domain_error("psi_convexity_step_check: C must be positive definite");
    }
    SpectralData dd = eigh(d);
    const int n = c.dim();
    MatC c_rot = dd.eigenvectors.adjoint() * c.mat() * dd.eigenvectors;
    MatC c_diag = MatC::Zero(n, n);
    for (int i = 0; i < n; ++i) c_diag(i, i) = c_rot(i, i).real();
    MatC lam = MatC::Zero(n, n);
    for (int i = 0; i < n; ++i) lam(i, i) = dd.eigenvalues(i);
    const MatC id = MatC::Identity(n, n);

    auto tr_pow = [&](const MatC& base) {
        MatC m = Eigen::LLT<MatC>(MatC(base + t * id)).solve(lam);
        MatC acc = MatC::Identity(n, n);
        for (int j = 0; j < 2 * k; ++j) acc = acc * m;
        return acc.trace().real();
    };
    const double lhs = tr_pow(c_rot);
    const double rhs = tr_pow(c_diag);
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, Direction::GreaterEq, tol * scale,
                           "psi step t=" + std::to_string(t) + " k=" + std::to_string(k));
}

// ---------------------------------------------------------------------------
// Hanner equality characterization

struct HannerEqualityResult {
    bool equality_detected = false;
    bool multiple_detected = false;
    double k_estimate = 0.0;
    bool in_regime = false;   // regime where the characterization applies
    double gap = 0.0;
};

// Equality in the p-Hanner relation holds exactly when |D| is a scalar
// multiple of C (PSD-pair regime) or of |C| (general regime, self-adjoint
// inputs). k is estimated as ||D||_p / ||C||_p.
inline HannerEqualityResult hanner_equality_check(const MatC& c, const MatC& d, double p,
                                                  double rel_tol = 1e-8) {
    require_square_finite(c, "hanner_equality_check");
    require_square_finite(d, "hanner_equality_check");
    if (p <= 1.0) throw std::invalid_argument("hanner_equality_check: p > 1 required");

    HannerEqualityResult out;
    const bool psd_regime = is_psd_pair(c, d) && p != 2.0;
    const bool general_regime = (p > 1.0 && p <= 4.0 / 3.0) || p > 4.0;
    out.in_regime = psd_regime || general_regime;

    const double lhs = schatten_s_power(MatC(c + d), p) + schatten_s_power(MatC(c - d), p);
    const double nc = schatten(c, p), nd = schatten(d, p);
    const double rhs = std::pow(nc + nd, p) + std::pow(std::abs(nc - nd), p);
    out.gap = lhs - rhs;
    out.equality_detected = std::abs(out.gap) <= rel_tol * (1.0 + std::abs(rhs));

    out.k_estimate = nc > 0.0 ? nd / nc : 0.0;
    Eigen::JacobiSVD<MatC> svd_d(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
    MatC abs_d = svd_d.matrixV() * svd_d.singularValues().asDiagonal() * svd_d.matrixV().adjoint();
    MatC c_ref;
    if (psd_regime) {
        c_ref = c;
    } else {
        Eigen::JacobiSVD<MatC> svd_c(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
        c_ref = svd_c.matrixV() * svd_c.singularValues().asDiagonal() * svd_c.matrixV().adjoint();
    }
    out.multiple_detected = (abs_d - out.k_estimate * c_ref).norm() <= 1e-8;
    return out;
}

}  // namespace schatten_lab
