#pragma once
//
// schatten_lab -- variational : dual representations of norms/quasinorms and
// the Hoelder-family inequalities they generate (reverse Hoelder, reverse
// Minkowski, factorization variational forms, geometric-mean bound).
//

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "schatten_lab/linalg.hpp"
#include "schatten_lab/random.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/schatten.hpp"

namespace schatten_lab {

namespace detail {

// |A| = (A* A)^(1/2) via SVD, as a Hermitian PSD matrix.
inline MatC matrix_abs(const MatC& a) {
    Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullV);
    return svd.matrixV() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint();
}

// Random matrix with unit ||.||_q, resampling away from near-singular draws
// when q < 0 (the antinorm needs a safely invertible competitor).
inline MatC random_unit_ball(int n, double q, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        MatC b = ginibre(n, rng);
        VecR sv = svd_vals(b);
        if (q < 0.0 && sv(n - 1) < 1e-6 * sv(0)) continue;
        const double norm = vector_s(sv, q);
        if (norm > 0.0 && std::isfinite(norm)) return b / norm;
    }
    throw std::runtime_error("random_unit_ball: failed to draw a usable competitor");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// dual representation of the p-norm (p > 1):
//   ||A||_p = sup { |Tr[A B*]| : ||B||_q = 1 },  1/p + 1/q = 1.
// Samples random feasible B and also evaluates the analytic maximizer
// B = U |A|^(p-1) / || |A|^(p-1) ||_q from the polar decomposition A = U|A|.

struct DualNormResult {
    GapReport report;           // ||A||_p  vs  sampled supremum (>= direction)
    double sampled_sup = 0.0;
    double maximizer_value = 0.0;
};

inline DualNormResult dual_norm_value(const MatC& a, double p, int trials, std::uint64_t seed,
                                      double tol = default_tols().gap) {
    require_square_finite(a, "dual_norm_value");
    if (p <= 1.0) throw std::invalid_argument("dual_norm_value: p > 1 required");
    const double q = conjugate_exponent(p);
    const int n = static_cast<int>(a.rows());
    const double norm_a = schatten(a, p);

    double sup = 0.0;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MatC b = detail::random_unit_ball(n, q, rng);
        sup = std::max(sup, std::abs((a * b.adjoint()).trace()));
    }

    Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    VecR sig = svd.singularValues();
    VecR sig_pm1 = sig.array().pow(p - 1.0).matrix();
    MatC bstar = svd.matrixU() * sig_pm1.asDiagonal() * svd.matrixV().adjoint();
    bstar /= vector_s(sig_pm1, q);
    const double attained = std::abs((a * bstar.adjoint()).trace());

    DualNormResult out;
    out.sampled_sup = std::max(sup, attained);
    out.maximizer_value = attained;
    out.report = make_gap_report(norm_a, out.sampled_sup, Direction::GreaterEq, tol,
                                 "dual p=" + std::to_string(p));
    if (std::abs(attained - norm_a) > tol * std::max(1.0, norm_a))
        out.report.verdict = Verdict::Violated;
    return out;
}

// ---------------------------------------------------------------------------
// dual representation of the quasinorm/antinorm (s < 1, s != 0):
//   ||A||_s = inf { Tr|A B*| : ||B||_r = 1 },  r = s/(s-1),
// with the infimum attained at B = |A'|^(s-1) / ||A'||_s^(s-1) on the
// positive part A' = |A|.

struct DualWitnessResult {
    HermitianMatrix witness;
    GapReport report;            // sampled competitor values vs ||A||_s
    double witness_norm_r = 0.0;
    double attained = 0.0;
};

inline DualWitnessResult dual_quasinorm_witness(const MatC& a, double s, int trials = 50,
                                                std::uint64_t seed = 1,
                                                double attain_tol = 1e-8,
                                                double tol = default_tols().gap) {
    require_square_finite(a, "dual_quasinorm_witness");
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm)
        throw std::invalid_argument("dual_quasinorm_witness: s < 1, s != 0 required");
    VecR sv = svd_vals(a);
    const int n = static_cast<int>(a.rows());
    if (sv(n - 1) <= kSingularityThreshold)
        throw std::domain_error("dual_quasinorm_witness: |A| must be invertible");

    const double r = conjugate_exponent(s);
    const double norm_a = vector_s(sv, s);

    MatC abs_a = detail::matrix_abs(a);
    HermitianMatrix a_pos(abs_a, 1e-9);
    HermitianMatrix witness =
        matrix_power_spectral(a_pos, s - 1.0).scaled(std::pow(norm_a, 1.0 - s));

    const double witness_norm = schatten(witness.mat(), r);
    const double attained = schatten_s_power(MatC(abs_a * witness.mat()), 1.0);

    double sampled_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MatC b = detail::random_unit_ball(n, r, rng);
        sampled_min = std::min(sampled_min, schatten_s_power(MatC(a * b.adjoint()), 1.0));
    }

    DualWitnessResult out{std::move(witness), GapReport{}, witness_norm, attained};
    out.report = make_gap_report(sampled_min, norm_a, Direction::GreaterEq, tol,
                                 "dual witness s=" + std::to_string(s));
    if (std::abs(witness_norm - 1.0) > tol * 10.0 ||
        std::abs(attained - norm_a) > attain_tol * std::max(1.0, norm_a))
        out.report.verdict = Verdict::Violated;
    return out;
}

// ---------------------------------------------------------------------------
// reverse Hoelder:  ||AB||_1 >= ||A||_s ||B||_r,  r = s/(s-1), s < 1.
// Factors raised to a negative exponent use the zero convention when singular.

inline GapReport reverse_holder_gap(const MatC& a, const MatC& b, double s,
                                    double tol = default_tols().gap) {
    require_square_finite(a, "reverse_holder_gap");
    require_square_finite(b, "reverse_holder_gap");
    if (a.rows() != b.rows()) throw std::invalid_argument("reverse_holder_gap: dim mismatch");
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm)
        throw std::invalid_argument("reverse_holder_gap: s < 1, s != 0 required");
    const double r = conjugate_exponent(s);

    const double lhs = schatten_s_power(MatC(a * b), 1.0);
    const double na = s < 0.0 ? schatten_antinorm_or_zero(a, s) : schatten(a, s);
    const double nb = r < 0.0 ? schatten_antinorm_or_zero(b, r) : schatten(b, r);
    const double rhs = na * nb;
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, Direction::GreaterEq, tol * scale,
                           "reverse-holder s=" + std::to_string(s));
}

// General form for a unitarily invariant norm:
//   ||| |AB|^r |||^(1/r) >= ||| |A|^p |||^(1/p) ||| |B|^q |||^(1/q),
// with r, p > 0, q < 0 and 1/r = 1/p + 1/q.
inline GapReport general_reverse_holder_gap(const MatC& a, const MatC& b, double r, double p,
                                            double q, const UINorm& norm,
                                            double tol = default_tols().gap) {
    require_square_finite(a, "general_reverse_holder_gap");
    require_square_finite(b, "general_reverse_holder_gap");
    if (!(r > 0.0) || !(p > 0.0) || !(q < 0.0))
        throw std::invalid_argument("general_reverse_holder_gap: need r > 0, p > 0, q < 0");
    if (std::abs(1.0 / r - 1.0 / p - 1.0 / q) > 1e-12)
        throw std::invalid_argument("general_reverse_holder_gap: 1/r = 1/p + 1/q violated");
    VecR svb = svd_vals(b);
    if (svb(svb.size() - 1) <= kSingularityThreshold)
        throw std::domain_error("general_reverse_holder_gap: B must be invertible");

    auto abs_pow = [](const MatC& m, double e2) {
        Eigen::JacobiSVD<MatC> svd(m, Eigen::ComputeFullV);
        VecR sp = svd.singularValues().array().pow(e2).matrix();
        return MatC(svd.matrixV() * sp.asDiagonal() * svd.matrixV().adjoint());
    };
    const double lhs = std::pow(norm(abs_pow(MatC(a * b), r)), 1.0 / r);
    const double rhs = std::pow(norm(abs_pow(a, p)), 1.0 / p) *
                       std::pow(norm(abs_pow(b, q)), 1.0 / q);
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, Direction::GreaterEq, tol * scale,
                           norm.name() + " r=" + std::to_string(r) + " p=" + std::to_string(p) +
                               " q=" + std::to_string(q));
}

// reverse Minkowski:  ||A + B||_s >= ||A||_s + ||B||_s  for PSD A, B, s < 1.
inline GapReport reverse_minkowski_gap(const HermitianMatrix& a, const HermitianMatrix& b,
                                       double s, double tol = default_tols().gap) {
    Exponent e(s);
    if (e.cls() == ExponentClass::Norm)
        throw std::invalid_argument("reverse_minkowski_gap: s < 1, s != 0 required");
    auto check_psd = [&](const HermitianMatrix& h, const char* who) {
        Eigen::SelfAdjointEigenSolver<MatC> es(h.mat());
        const double mn = es.eigenvalues().minCoeff();
        if (s < 0.0 ? mn <= kSingularityThreshold : mn < -1e-10)
            throw std::domain_error(std::string("reverse_minkowski_gap: ") + who +
                                    (s < 0.0 ? " must be positive definite" : " must be PSD"));
    };
    check_psd(a, "A");
    check_psd(b, "B");
    const double lhs = schatten(MatC(a.mat() + b.mat()), s);
    const double rhs = schatten(a.mat(), s) + schatten(b.mat(), s);
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, Direction::GreaterEq, tol * scale,
                           "reverse-minkowski s=" + std::to_string(s));
}

// ---------------------------------------------------------------------------
// factorization variational forms

// min over factorizations A = BC of
//   ||| |B|^(ap) |||^(1/p) ||| |C|^(aq) |||^(1/q)   (and the 1/p + 1/q mean),
// attained by the canonical split B = W S^(1/p), C = S^(1/q) V* from the SVD.
struct FactorizationCheckResult {
    GapReport report;
    double canonical_product = 0.0;
    double canonical_mean = 0.0;
    double sampled_min_product = 0.0;
    double sampled_min_mean = 0.0;
};

inline FactorizationCheckResult prop_factorization_check(const MatC& a, double alpha, double p,
                                                         const UINorm& norm, int trials,
                                                         std::uint64_t seed,
                                                         double tol = default_tols().gap) {
    require_square_finite(a, "prop_factorization_check");
    if (!(alpha > 0.0) || !(p > 1.0))
        throw std::invalid_argument("prop_factorization_check: alpha > 0 and p > 1 required");
    const double q = conjugate_exponent(p);
    const int n = static_cast<int>(a.rows());

    Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    VecR sig = svd.singularValues();
    auto spow = [&](double e2) { return VecR(sig.array().pow(e2).matrix()); };

    auto value_of = [&](const MatC& bm, const MatC& cm, double& product, double& mean) {
        auto abs_pow_norm = [&](const MatC& m, double e2) {
            Eigen::JacobiSVD<MatC> s2(m);
            VecR sp = s2.singularValues().array().pow(e2).matrix();
            MatC diag = sp.template cast<cxd>().asDiagonal();
            return norm(diag);
        };
        const double xb = abs_pow_norm(bm, alpha * p);
        const double xc = abs_pow_norm(cm, alpha * q);
        product = std::pow(xb, 1.0 / p) * std::pow(xc, 1.0 / q);
        mean = xb / p + xc / q;
    };

    const double target = norm(
        MatC(spow(alpha).template cast<cxd>().asDiagonal()));

    MatC b0 = svd.matrixU() * spow(1.0 / p).template cast<cxd>().asDiagonal();
    MatC c0 = spow(1.0 / q).template cast<cxd>().asDiagonal() * svd.matrixV().adjoint();

    FactorizationCheckResult out;
    value_of(b0, c0, out.canonical_product, out.canonical_mean);
    out.sampled_min_product = out.canonical_product;
    out.sampled_min_mean = out.canonical_mean;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MatC z = ginibre(n, rng);
        VecR zs = svd_vals(z);
        if (zs(n - 1) < 1e-4 * zs(0)) continue;
        double prod = 0.0, mean = 0.0;
        value_of(MatC(b0 * z), MatC(z.inverse() * c0), prod, mean);
        out.sampled_min_product = std::min(out.sampled_min_product, prod);
        out.sampled_min_mean = std::min(out.sampled_min_mean, mean);
    }
    const double scale = std::max(1.0, std::abs(target));
    out.report = make_gap_report(std::min(out.sampled_min_product, out.sampled_min_mean), target,
                                 Direction::GreaterEq, tol * scale,
                                 "prop1 alpha=" + std::to_string(alpha) + " p=" + std::to_string(p));
    if (std::abs(out.canonical_product - target) > 1e-8 * scale ||
        std::abs(out.canonical_mean - target) > 1e-8 * scale)
        out.report.verdict = Verdict::Violated;
    return out;
}

// Mirrored max form for 0 < p < 1, r = -p/(p-1):
//   ||| |A|^a ||| = max over A = BC of ||| |B|^(ap) |||^(1/p) ||| |C|^(-ar) |||^(-1/r)
// (and the difference mean), attained at B = W S^(1/p), C = S^(-1/r) V*.
inline FactorizationCheckResult prop3_factorization_check(const MatC& a, double alpha, double p,
                                                          const UINorm& norm, int trials,
                                                          std::uint64_t seed,
                                                          double tol = default_tols().gap) {
    require_square_finite(a, "prop3_factorization_check");
    if (!(alpha > 0.0) || !(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("prop3_factorization_check: alpha > 0, 0 < p < 1 required");
    VecR sva = svd_vals(a);
    const int n = static_cast<int>(a.rows());
    if (sva(n - 1) <= kSingularityThreshold)
        throw std::domain_error("prop3_factorization_check: A must be invertible");
    const double r = -p / (p - 1.0);

    Eigen::JacobiSVD<MatC> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    VecR sig = svd.singularValues();
    auto spow = [&](double e2) { return VecR(sig.array().pow(e2).matrix()); };

    auto value_of = [&](const MatC& bm, const MatC& cm, double& product, double& mean) {
        auto abs_pow_norm = [&](const MatC& m, double e2) {
            Eigen::JacobiSVD<MatC> s2(m);
            VecR sp = s2.singularValues().array().pow(e2).matrix();
            MatC diag = sp.template cast<cxd>().asDiagonal();
            return norm(diag);
        };
        const double xb = abs_pow_norm(bm, alpha * p);
        const double xc = abs_pow_norm(cm, -alpha * r);
        product = std::pow(xb, 1.0 / p) * std::pow(xc, -1.0 / r);
        mean = xb / p - xc / r;
    };

    const double target = norm(MatC(spow(alpha).template cast<cxd>().asDiagonal()));
    MatC b0 = svd.matrixU() * spow(1.0 / p).template cast<cxd>().asDiagonal();
    MatC c0 = spow(-1.0 / r).template cast<cxd>().asDiagonal() * svd.matrixV().adjoint();

    FactorizationCheckResult out;
    value_of(b0, c0, out.canonical_product, out.canonical_mean);
    double max_product = out.canonical_product, max_mean = out.canonical_mean;
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MatC z = ginibre(n, rng);
        VecR zs = svd_vals(z);
        if (zs(n - 1) < 1e-4 * zs(0)) continue;
        double prod = 0.0, mean = 0.0;
        value_of(MatC(b0 * z), MatC(z.inverse() * c0), prod, mean);
        max_product = std::max(max_product, prod);
        max_mean = std::max(max_mean, mean);
    }
    out.sampled_min_product = max_product;  // here: sampled extremum (max form)
    out.sampled_min_mean = max_mean;
    const double scale = std::max(1.0, std::abs(target));
    out.report = make_gap_report(target, std::max(max_product, max_mean), Direction::GreaterEq,
                                 tol * scale,
                                 "prop3 alpha=" + std::to_string(alpha) + " p=" + std::to_string(p));
    if (std::abs(out.canonical_product - target) > 1e-8 * scale ||
        std::abs(out.canonical_mean - target) > 1e-8 * scale)
        out.report.verdict = Verdict::Violated;
    return out;
}

// Infimum form over invertible Z of ||| |XZ|^(ap) |||^(1/p) ||| |Z^-1 Y|^(aq) |||^(1/q):
// always >= ||| |XY|^a |||; attained (within quadrature of the optimum) when
// X, Y are invertible, via the canonical split of XY.
struct InfimumCheckResult {
    GapReport report;
    double target = 0.0;
    double optimal_value = 0.0;   // at the constructed optimal Z (invertible inputs)
    double sampled_min = 0.0;
};

inline InfimumCheckResult prop2_infimum_check(const MatC& x, const MatC& y, double alpha, double p,
                                              int trials, std::uint64_t seed,
                                              double tol = default_tols().gap,
                                              double attain_tol = 1e-6) {
    require_square_finite(x, "prop2_infimum_check");
    require_square_finite(y, "prop2_infimum_check");
    if (!(alpha > 0.0) || !(p > 1.0))
        throw std::invalid_argument("prop2_infimum_check: alpha > 0, p > 1 required");
    const double q = conjugate_exponent(p);
    const int n = static_cast<int>(x.rows());

    auto abs_pow_trace_norm = [&](const MatC& m, double e2) {
        VecR sp = svd_vals(m).array().pow(e2).matrix();
        return sp.sum();  // trace norm of |M|^e2
    };
    const double target = abs_pow_trace_norm(MatC(x * y), alpha);

    auto value_at = [&](const MatC& z) {
        const double xb = abs_pow_trace_norm(MatC(x * z), alpha * p);
        const double xc = abs_pow_trace_norm(MatC(z.inverse() * y), alpha * q);
        return std::min(std::pow(xb, 1.0 / p) * std::pow(xc, 1.0 / q), xb / p + xc / q);
    };

    InfimumCheckResult out;
    out.target = target;
    out.sampled_min = value_at(MatC::Identity(n, n));
    for (int i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        MatC z = ginibre(n, rng);
        VecR zs = svd_vals(z);
        if (zs(n - 1) < 1e-4 * zs(0)) continue;
        out.sampled_min = std::min(out.sampled_min, value_at(z));
    }

    VecR svx = svd_vals(x), svy = svd_vals(y);
    const bool invertible = svx(n - 1) > kSingularityThreshold &&
                            svy(n - 1) > kSingularityThreshold;
    out.optimal_value = out.sampled_min;
    if (invertible) {
        Eigen::JacobiSVD<MatC> svd(MatC(x * y), Eigen::ComputeFullU | Eigen::ComputeFullV);
        VecR sig = svd.singularValues();
        MatC b0 = svd.matrixU() * VecR(sig.array().pow(1.0 / p).matrix()).template cast<cxd>().asDiagonal();
        MatC zopt = x.inverse() * b0;
        out.optimal_value = value_at(zopt);
        out.sampled_min = std::min(out.sampled_min, out.optimal_value);
    }

    const double scale = std::max(1.0, std::abs(target));
    out.report = make_gap_report(out.sampled_min, target, Direction::GreaterEq, tol * scale,
                                 "prop2 alpha=" + std::to_string(alpha) + " p=" + std::to_string(p));
    if (invertible && std::abs(out.optimal_value - target) > attain_tol * scale)
        out.report.verdict = Verdict::Violated;
    return out;
}

// Geometric-mean Ky Fan bound for positive definite A, B and 1 <= k <= n:
//   (1/k) sum_{j<=k} lambda_j(A b0 B) >= {prod_{j<=k} lambda_j(A)}^(1/2k)
//                                        {prod_{j<=k} lambda_{n+1-j}(B)}^(1/2k).
inline GapReport geomean_kyfan_check(const HermitianMatrix& a, const HermitianMatrix& b, int k,
                                     double tol = default_tols().gap) {
    const int n = a.dim();
    if (k < 1 || k > n) throw std::invalid_argument("geomean_kyfan_check: k out of range");
    HermitianMatrix g = geometric_mean0(a, b);   // throws unless A, B are PD
    VecR lam_g = eigh(g).eigenvalues;
    VecR lam_a = eigh(a).eigenvalues;
    VecR lam_b = eigh(b).eigenvalues;

    double lhs = 0.0;
    for (int j = 0; j < k; ++j) lhs += lam_g(j);
    lhs /= k;
    double logp = 0.0;
    for (int j = 0; j < k; ++j)
        logp += std::log(lam_a(j)) + std::log(lam_b(n - 1 - j));
    const double rhs = std::exp(logp / (2.0 * k));
    const double scale = std::max(1.0, std::abs(rhs));
    return make_gap_report(lhs, rhs, Direction::GreaterEq, tol * scale,
                           "geomean k=" + std::to_string(k));
}

}  // namespace schatten_lab
