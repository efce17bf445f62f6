#pragma once
//
// schatten_lab -- majorization : prefix-sum/product predicates, doubly
// stochastic witnesses via T-transform chains, greedy Birkhoff decomposition,
// and the classical matrix majorization checks (Schur diagonal,
// Horn / Gel'fand-Naimark singular value chains).
//

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "schatten_lab/linalg.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/schatten.hpp"

namespace schatten_lab {

using MatR = Eigen::MatrixXd;

enum class MajorizationMode { Weak, Strong, Log, WeakLog };

struct MajorizationReport {
    bool holds = false;
    double min_slack = 0.0;       // smallest prefix slack, normalized
    double total_residual = 0.0;  // |final sums/products difference|, normalized (strong modes)
};

inline VecR sorted_descending(const VecR& v) {
    VecR out = v;
    std::sort(out.data(), out.data() + out.size(), std::greater<double>());
    return out;
}

// Prefix-sum (or prefix-product) domination of descending rearrangements.
// Comparisons are absolute after normalizing by max(1, ||b||_inf).
inline MajorizationReport majorizes(const VecR& a, const VecR& b, MajorizationMode mode,
                                    double tol = default_tols().gap) {
    if (a.size() != b.size())
        throw std::invalid_argument("majorizes: length mismatch");
    const bool log_mode = (mode == MajorizationMode::Log || mode == MajorizationMode::WeakLog);
    if (log_mode && (a.minCoeff() < 0.0 || b.minCoeff() < 0.0))
        throw std::invalid_argument("majorizes: log modes need nonnegative entries");

    const VecR ad = sorted_descending(a);
    const VecR bd = sorted_descending(b);
    const int n = static_cast<int>(a.size());

    double pa = log_mode ? 1.0 : 0.0, pb = log_mode ? 1.0 : 0.0;
    double scale = std::max(1.0, bd.cwiseAbs().maxCoeff());
    MajorizationReport rep;
    rep.min_slack = std::numeric_limits<double>::infinity();
    rep.holds = true;
    for (int k = 0; k < n; ++k) {
        if (log_mode) {
            pa *= ad(k);
            pb *= bd(k);
        } else {
            pa += ad(k);
            pb += bd(k);
        }
        const double norm = log_mode ? std::max(1.0, std::abs(pb)) : scale;
        const double slack = (pb - pa) / norm;
        rep.min_slack = std::min(rep.min_slack, slack);
        if (slack < -tol) rep.holds = false;
    }
    if (mode == MajorizationMode::Strong || mode == MajorizationMode::Log) {
        const double norm = log_mode ? std::max(1.0, std::abs(pb)) : scale;
        rep.total_residual = std::abs(pb - pa) / norm;
        if (rep.total_residual > tol) rep.holds = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// doubly stochastic witness

struct BirkhoffTerm {
    double weight = 0.0;
    std::vector<int> permutation;  // row i maps to column permutation[i]
};

struct MajorizationWitness {
    MatR ds_matrix;
    std::vector<BirkhoffTerm> birkhoff;
};

namespace detail {
// Perfect matching on the support {M(i,j) > tol} by augmenting paths.
inline bool support_matching(const MatR& m, double tol, std::vector<int>& row_to_col) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> col_owner(n, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
        for (int j = 0; j < n; ++j) {
            if (m(i, j) <= tol || seen[j]) continue;
            seen[j] = 1;
            if (col_owner[j] < 0 || augment(col_owner[j], seen)) {
                col_owner[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen(n, 0);
        if (!augment(i, seen)) return false;
    }
    row_to_col.assign(n, -1);
    for (int j = 0; j < n; ++j) row_to_col[col_owner[j]] = j;
    return true;
}
}  // namespace detail

// Greedy Birkhoff decomposition: repeatedly extract a permutation supported on
// the positive entries and subtract the minimal entry along it.
inline std::vector<BirkhoffTerm> birkhoff_decompose(const MatR& ds, double tol = 1e-10) {
    const int n = static_cast<int>(ds.rows());
    MatR m = ds;
    std::vector<BirkhoffTerm> terms;
    const int max_terms = n * n - 2 * n + 2;
    for (int it = 0; it <= max_terms; ++it) {
        if (m.maxCoeff() <= tol) break;
        std::vector<int> perm;
        if (!detail::support_matching(m, tol, perm))
            throw std::runtime_error("birkhoff_decompose: no permutation on positive support");
        double w = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) w = std::min(w, m(i, perm[i]));
        for (int i = 0; i < n; ++i) m(i, perm[i]) -= w;
        terms.push_back({w, perm});
    }
    if (m.maxCoeff() > tol)
        throw std::runtime_error("birkhoff_decompose: term budget exceeded");
    return terms;
}

inline MatR permutation_matrix(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    MatR p = MatR::Zero(n, n);
    for (int i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
    return p;
}

// Doubly stochastic D with a = D b, built from a chain of at most n-1
// T-transforms on the descending rearrangements (ties broken by lowest index),
// then conjugated back to the original orderings.
inline MajorizationWitness ds_witness(const VecR& a, const VecR& b,
                                      double tol = default_tols().gap) {
    if (!majorizes(a, b, MajorizationMode::Strong, tol).holds)
        throw std::domain_error("ds_witness: a is not majorized by b");
    const int n = static_cast<int>(a.size());

    std::vector<int> ia(n), ib(n);
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), 0);
    std::stable_sort(ia.begin(), ia.end(), [&](int i, int j) { return a(i) > a(j); });
    std::stable_sort(ib.begin(), ib.end(), [&](int i, int j) { return b(i) > b(j); });

    VecR ad(n), c(n);
    for (int i = 0; i < n; ++i) {
        ad(i) = a(ia[i]);
        c(i) = b(ib[i]);
    }

    MatR d = MatR::Identity(n, n);
    const double eq_tol = 1e-11 * std::max(1.0, c.cwiseAbs().maxCoeff());
    for (int step = 0; step < n; ++step) {
        int j = -1;
        for (int i = n - 1; i >= 0; --i)
            if (c(i) - ad(i) > eq_tol) { j = i; break; }
        if (j < 0) break;
        int k = -1;
        for (int i = j + 1; i < n; ++i)
            if (c(i) - ad(i) < -eq_tol) { k = i; break; }
        if (k < 0) break;
        const double delta = std::min(c(j) - ad(j), ad(k) - c(k));
        const double lam = delta / (c(j) - c(k));
        MatR t = MatR::Identity(n, n);
        t(j, j) = 1.0 - lam;
        t(j, k) = lam;
        t(k, j) = lam;
        t(k, k) = 1.0 - lam;
        c = t * c;
        d = t * d;
    }

    MatR ra = MatR::Zero(n, n), rb = MatR::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        ra(i, ia[i]) = 1.0;  // (ra x)_i = x(ia[i]) : original -> descending
        rb(i, ib[i]) = 1.0;
    }
    MajorizationWitness w;
    w.ds_matrix = ra.transpose() * d * rb;
    w.birkhoff = birkhoff_decompose(w.ds_matrix);
    return w;
}

inline bool is_doubly_stochastic(const MatR& m, double tol = default_tols().gap) {
    if (m.minCoeff() < -tol) return false;
    for (int i = 0; i < m.rows(); ++i)
        if (std::abs(m.row(i).sum() - 1.0) > tol) return false;
    for (int j = 0; j < m.cols(); ++j)
        if (std::abs(m.col(j).sum() - 1.0) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// majorization checks

// a prec_w b with nonnegative entries implies a^s prec_w b^s for s >= 1.
inline GapReport check_weakpower(const VecR& a, const VecR& b, double s,
                                 double tol = default_tols().gap) {
    if (s < 1.0) throw std::invalid_argument("check_weakpower: s >= 1 required");
    if (a.minCoeff() < 0.0 || b.minCoeff() < 0.0)
        throw std::invalid_argument("check_weakpower: nonnegative vectors required");
    if (!majorizes(a, b, MajorizationMode::Weak, tol).holds)
        throw std::domain_error("check_weakpower: a is not weakly majorized by b");
    VecR ap = a.array().pow(s).matrix();
    VecR bp = b.array().pow(s).matrix();
    auto rep = majorizes(ap, bp, MajorizationMode::Weak, tol);
    return make_gap_report(rep.min_slack, 0.0, Direction::GreaterEq, tol,
                           "weakpower s=" + std::to_string(s));
}

// x prec_w y and a prec_w b (all nonnegative, descending) imply xa prec_w yb.
inline GapReport check_weaksum(const VecR& x, const VecR& y, const VecR& a, const VecR& b,
                               double tol = default_tols().gap) {
    auto is_descending = [](const VecR& v) {
        for (int i = 0; i + 1 < v.size(); ++i)
            if (v(i) < v(i + 1) - 1e-12) return false;
        return true;
    };
    if (!is_descending(x) || !is_descending(y) || !is_descending(a) || !is_descending(b))
        throw std::invalid_argument("check_weaksum: inputs must be descending");
    if (x.minCoeff() < 0 || y.minCoeff() < 0 || a.minCoeff() < 0 || b.minCoeff() < 0)
        throw std::invalid_argument("check_weaksum: nonnegative vectors required");
    if (!majorizes(x, y, MajorizationMode::Weak, tol).holds ||
        !majorizes(a, b, MajorizationMode::Weak, tol).holds)
        throw std::domain_error("check_weaksum: weak majorization preconditions fail");
    VecR xa = x.cwiseProduct(a), yb = y.cwiseProduct(b);
    auto rep = majorizes(xa, yb, MajorizationMode::Weak, tol);
    return make_gap_report(rep.min_slack, 0.0, Direction::GreaterEq, tol, "weaksum");
}

enum class StrictConvexPhi { Square, XLogX, AbsPowP };

// With a prec b and a strictly convex phi, equal phi-sums force a to be a
// permutation of b. Returns whether the implication held on this instance.
inline bool strict_equality_implies_permutation(const VecR& a, const VecR& b, StrictConvexPhi phi,
                                                double p = 3.0,
                                                double tol = default_tols().gap) {
    if (!majorizes(a, b, MajorizationMode::Strong, tol).holds)
        throw std::domain_error("strict_equality_implies_permutation: a not majorized by b");
    auto phival = [&](double t) {
        switch (phi) {
            case StrictConvexPhi::Square: return t * t;
            case StrictConvexPhi::XLogX: return t <= 0.0 ? 0.0 : t * std::log(t);
            default: return std::pow(std::abs(t), p);
        }
    };
    double sa = 0.0, sb = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        sa += phival(a(i));
        sb += phival(b(i));
    }
    const double scale = std::max(1.0, std::abs(sb));
    if (std::abs(sa - sb) / scale > tol) return true;  // implication vacuous
    const VecR ad = sorted_descending(a), bd = sorted_descending(b);
    return (ad - bd).cwiseAbs().maxCoeff() <= tol * std::max(1.0, bd.cwiseAbs().maxCoeff());
}

// diag(X) prec lambda(X) for Hermitian X.
inline GapReport check_schur_diag(const HermitianMatrix& x, double tol = default_tols().gap) {
    const int n = x.dim();
    VecR diag(n);
    for (int i = 0; i < n; ++i) diag(i) = x.mat()(i, i).real();
    VecR lam = eigh(x).eigenvalues;
    auto rep = majorizes(diag, lam, MajorizationMode::Strong, tol);
    GapReport g = make_gap_report(rep.min_slack, 0.0, Direction::GreaterEq, tol, "schur-diagonal");
    if (rep.total_residual > tol) g.verdict = Verdict::Violated;
    return g;
}

// sigma_up(A) sigma_down(B)  prec_(log)  sigma(AB)  prec_(log)  sigma(A) sigma(B).
// Cross products are index-aligned before any re-sorting; majorization then
// compares descending rearrangements. Singular inputs reduce the lower chain
// to its weak form.
inline GapReport check_horn_gelfand(const MatC& a, const MatC& b,
                                    double tol = default_tols().gap,
                                    double det_rel_tol = 1e-8) {
    require_square_finite(a, "check_horn_gelfand");
    require_square_finite(b, "check_horn_gelfand");
    if (a.rows() != b.rows()) throw std::invalid_argument("check_horn_gelfand: dim mismatch");
    const int n = static_cast<int>(a.rows());

    VecR sa = svd_vals(a), sb = svd_vals(b), sab = svd_vals(MatC(a * b));
    VecR lower(n), upper(n);
    for (int i = 0; i < n; ++i) {
        lower(i) = sa(n - 1 - i) * sb(i);  // ascending(A) x descending(B)
        upper(i) = sa(i) * sb(i);
    }
    const bool invertible = sa(n - 1) > kSingularityThreshold &&
                            sb(n - 1) > kSingularityThreshold;

    const auto lower_mode = invertible ? MajorizationMode::Log : MajorizationMode::WeakLog;
    auto rep_lower = majorizes(lower, sab, lower_mode, tol);
    auto rep_upper = majorizes(sab, upper, MajorizationMode::WeakLog, tol);

    // final products must agree within relative tolerance (both equal |det A det B|)
    double prod_ab = 1.0, prod_upper = 1.0;
    for (int i = 0; i < n; ++i) {
        prod_ab *= sab(i);
        prod_upper *= upper(i);
    }
    bool final_ok = true;
    if (invertible)
        final_ok = std::abs(prod_ab - prod_upper) <= det_rel_tol * std::max(1.0, prod_upper);

    const double min_slack = std::min(rep_lower.min_slack, rep_upper.min_slack);
    GapReport g = make_gap_report(min_slack, 0.0, Direction::GreaterEq, tol,
                                  invertible ? "horn-gelfand" : "horn-gelfand (weak, singular)");
    if (!rep_lower.holds || !rep_upper.holds || !final_ok) g.verdict = Verdict::Violated;
    return g;
}

}  // namespace schatten_lab
