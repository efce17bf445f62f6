#pragma once
//
// schatten_lab -- linalg : Hermitian eigendecomposition, singular values,
// spectral matrix functions, quadrature for the resolvent integral
// representations of fractional matrix powers, and random matrix sampling.
//

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "schatten_lab/config.hpp"
#include "schatten_lab/random.hpp"

namespace schatten_lab {

// ---------------------------------------------------------------------------
// domain types

inline void require_square_finite(const MatC& x, const char* who) {
    if (x.rows() != x.cols())
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    if (!x.allFinite())
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

// Square complex matrix carrying a conjugate-symmetry certificate.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(MatC m, double sym_tol = default_tols().sym) : m_(std::move(m)) {
        require_square_finite(m_, "HermitianMatrix");
        const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
        if (dev > sym_tol)
            throw std::invalid_argument("HermitianMatrix: symmetry deviation " +
                                        std::to_string(dev) + " exceeds tolerance");
        m_ = 0.5 * (m_ + m_.adjoint().eval());  // exact Hermitian representative
    }

    const MatC& mat() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    HermitianMatrix operator+(const HermitianMatrix& o) const {
        return HermitianMatrix(MatC(m_ + o.m_));
    }
    HermitianMatrix operator-(const HermitianMatrix& o) const {
        return HermitianMatrix(MatC(m_ - o.m_));
    }
    HermitianMatrix scaled(double c) const { return HermitianMatrix(MatC(c * m_)); }

  private:
    MatC m_;
};

// Eigendecomposition with eigenvalues sorted descending (ties keep the
// original ascending-solver order, which is deterministic).
struct SpectralData {
    VecR eigenvalues;  // descending
    MatC eigenvectors; // columns, unitary
};

inline SpectralData eigh(const HermitianMatrix& x) {
    Eigen::SelfAdjointEigenSolver<MatC> es(x.mat());
    if (es.info() != Eigen::Success) {
        const double res = (x.mat() * es.eigenvectors() -
                            es.eigenvectors() * es.eigenvalues().asDiagonal().toDenseMatrix()
                                                    .cast<cxd>())
                               .norm();
        throw std::runtime_error("eigh: eigensolver failed to converge, residual " +
                                 std::to_string(res));
    }
    const int n = x.dim();
    SpectralData out;
    out.eigenvalues = VecR(n);
    out.eigenvectors = MatC(n, n);
    for (int i = 0; i < n; ++i) {  // ascending -> descending
        out.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
        out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    return out;
}

inline VecR svd_vals(const MatC& x) {
    require_square_finite(x, "svd_vals");
    Eigen::JacobiSVD<MatC> svd(x);
    return svd.singularValues();  // already descending, nonnegative
}

inline VecR svd_vals_ascending(const MatC& x) {
    VecR s = svd_vals(x);
    return s.reverse();
}

// ---------------------------------------------------------------------------
// spectral matrix functions

// U diag(lambda_i^s) U*. Requires lambda > 0 when s is negative or
// non-integer; lambda >= 0 suffices for s > 0 integer-like behaviour.
inline HermitianMatrix matrix_power_spectral(const HermitianMatrix& x, double s,
                                             double psd_tol = 1e-12) {
    SpectralData sd = eigh(x);
    const bool needs_positive = (s < 0.0) || (s != std::floor(s));
    for (int i = 0; i < sd.eigenvalues.size(); ++i) {
        const double lam = sd.eigenvalues(i);
        if (needs_positive ? lam <= psd_tol : lam < -psd_tol)
            throw std::domain_error("matrix_power_spectral: eigenvalue " + std::to_string(lam) +
                                    " outside the domain of x^" + std::to_string(s));
    }
    VecR pe(sd.eigenvalues.size());
    for (int i = 0; i < pe.size(); ++i)
        pe(i) = std::pow(std::max(sd.eigenvalues(i), 0.0), s);
    MatC m = sd.eigenvectors * pe.asDiagonal() * sd.eigenvectors.adjoint();
    return HermitianMatrix(std::move(m), 1e-9);
}

inline HermitianMatrix matrix_exp(const HermitianMatrix& h) {
    SpectralData sd = eigh(h);
    VecR ee(sd.eigenvalues.size());
    for (int i = 0; i < ee.size(); ++i) ee(i) = std::exp(sd.eigenvalues(i));
    return HermitianMatrix(MatC(sd.eigenvectors * ee.asDiagonal() * sd.eigenvectors.adjoint()),
                           1e-9);
}

inline HermitianMatrix matrix_log(const HermitianMatrix& h) {
    SpectralData sd = eigh(h);
    if (sd.eigenvalues.minCoeff() <= 0.0)
        throw std::domain_error("matrix_log: input must be positive definite");
    VecR le(sd.eigenvalues.size());
    for (int i = 0; i < le.size(); ++i) le(i) = std::log(sd.eigenvalues(i));
    return HermitianMatrix(MatC(sd.eigenvectors * le.asDiagonal() * sd.eigenvectors.adjoint()),
                           1e-9);
}

// exp((log A + log B)/2) for positive definite A, B.
inline HermitianMatrix geometric_mean0(const HermitianMatrix& a, const HermitianMatrix& b) {
    MatC half_sum = 0.5 * (matrix_log(a).mat() + matrix_log(b).mat());
    return matrix_exp(HermitianMatrix(std::move(half_sum), 1e-9));
}

// ---------------------------------------------------------------------------
// quadrature for the integral representations
//
// All four supported exponent branches are one-dimensional integrals of a
// rational kernel over (0,inf). Gauss-Legendre nodes on (0,1) are composed
// with t = (u/(1-u))^gamma; gamma = 8 makes u^(gamma*frac - 1) endpoint
// behaviour smooth for every quarter-integer exponent and strongly damped
// otherwise, which the plain gamma = 1 map cannot achieve for fractional
// kernels.

struct QuadratureScheme {
    int nodes = 512;
    double gamma = 8.0;
    std::vector<double> t;  // strictly increasing nodes in (0,inf)
    std::vector<double> w;  // positive weights including the Jacobian
};

namespace detail {
// Gauss-Legendre nodes/weights on (-1,1) by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pi = 3.14159265358979323846;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}
}  // namespace detail

inline QuadratureScheme make_quadrature(int nodes = 512, double gamma = 8.0) {
    if (nodes < 2) throw std::invalid_argument("make_quadrature: need at least 2 nodes");
    QuadratureScheme q;
    q.nodes = nodes;
    q.gamma = gamma;
    std::vector<double> x, w;
    detail::gauss_legendre(nodes, x, w);
    q.t.resize(nodes);
    q.w.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double u = 0.5 * (x[i] + 1.0);
        const double uw = 0.5 * w[i];
        const double ratio = u / (1.0 - u);
        q.t[i] = std::pow(ratio, gamma);
        q.w[i] = uw * gamma * std::pow(ratio, gamma - 1.0) / ((1.0 - u) * (1.0 - u));
    }
    return q;
}

inline const QuadratureScheme& default_quadrature() {
    static const QuadratureScheme q = make_quadrature();
    return q;
}

// Exponent branches of the resolvent representation of x^s.
enum class PowerBranch { ZeroOne, MinusOneZero, BelowMinusOne, OneTwo };

inline PowerBranch classify_power_branch(double s) {
    if (s > 0.0 && s < 1.0) return PowerBranch::ZeroOne;
    if (s > -1.0 && s < 0.0) return PowerBranch::MinusOneZero;
    if (s < -1.0) {
        if (s == std::floor(s))
            throw std::domain_error("matrix_power_integral: integer s below -1 unsupported");
        return PowerBranch::BelowMinusOne;
    }
    if (s > 1.0 && s < 2.0) return PowerBranch::OneTwo;
    throw std::domain_error("matrix_power_integral: s = " + std::to_string(s) +
                            " outside supported ranges (0,1), (-1,0), (-inf,-1), (1,2)");
}

// Scalar kernel value at (t, x); the same expressions drive the matrix form.
// For s < -1 the kernel is t^(s - floor(s) - 1) (t+x)^(-|floor(s)|): the
// exponent is fixed by scalar homogeneity (substitute u = t/x).
inline double power_kernel_scalar(double t, double x, double s) {
    switch (classify_power_branch(s)) {
        case PowerBranch::ZeroOne:
            return std::pow(t, s - 1.0) * x / (t + x);
        case PowerBranch::MinusOneZero:
            return std::pow(t, s) / (t + x);
        case PowerBranch::BelowMinusOne: {
            const double fl = std::floor(s);
            const int m = static_cast<int>(-fl);
            return std::pow(t, s - fl - 1.0) * std::pow(t + x, -static_cast<double>(m));
        }
        case PowerBranch::OneTwo:
            return x * x * std::pow(t, s - 2.0) / (t + x);
    }
    return 0.0;
}

// Literal third-branch kernel with exponent floor(s) - s; kept only so tests
// can document that it fails scalar homogeneity away from half-integers.
inline double power_kernel_scalar_literal_variant(double t, double x, double s) {
    if (s >= -1.0) throw std::domain_error("literal variant defined for s < -1 only");
    const double fl = std::floor(s);
    const int m = static_cast<int>(-fl);
    return std::pow(t, fl - s) * std::pow(t + x, -static_cast<double>(m));
}

// 1 / integral of the scalar kernel at x = 1, evaluated with the same scheme.
inline double calibrate_power_constant(double s, const QuadratureScheme& q) {
    double integral = 0.0;
    for (int i = 0; i < q.nodes; ++i) integral += q.w[i] * power_kernel_scalar(q.t[i], 1.0, s);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw std::runtime_error("calibrate_power_constant: non-finite calibration integral");
    return 1.0 / integral;
}

// Closed-form normalization constants, used as an independent oracle.
inline double power_constant_closed_form(double s) {
    const double pi = 3.14159265358979323846;
    switch (classify_power_branch(s)) {
        case PowerBranch::ZeroOne:
            return std::sin(pi * s) / pi;
        case PowerBranch::MinusOneZero:
            return -std::sin(pi * s) / pi;
        case PowerBranch::BelowMinusOne: {
            const double fl = std::floor(s);
            const double frac = s - fl;
            const double m = -fl;
            // 1 / B(frac, -s) with frac + (-s) = m
            return std::exp(std::lgamma(m) - std::lgamma(frac) - std::lgamma(-s));
        }
        case PowerBranch::OneTwo:
            return -std::sin(pi * s) / pi;
    }
    return 0.0;
}

// Quadrature route to x^s for positive definite x; independent of the
// spectral route (uses only shifted linear solves).
inline HermitianMatrix matrix_power_integral(const HermitianMatrix& x, double s,
                                             const QuadratureScheme& q = default_quadrature()) {
    const PowerBranch branch = classify_power_branch(s);
    const int n = x.dim();
    const MatC id = MatC::Identity(n, n);
    {
        Eigen::LLT<MatC> llt(x.mat());
        if (llt.info() != Eigen::Success)
            throw std::domain_error("matrix_power_integral: matrix must be positive definite");
    }
    const double c = calibrate_power_constant(s, q);
    MatC acc = MatC::Zero(n, n);
    for (int i = 0; i < q.nodes; ++i) {
        const double t = q.t[i];
        Eigen::LLT<MatC> llt(MatC(x.mat() + t * id));
        switch (branch) {
            case PowerBranch::ZeroOne:
                acc += q.w[i] * std::pow(t, s - 1.0) * (llt.solve(x.mat()));
                break;
            case PowerBranch::MinusOneZero:
                acc += q.w[i] * std::pow(t, s) * llt.solve(id);
                break;
            case PowerBranch::BelowMinusOne: {
                const double fl = std::floor(s);
                const int m = static_cast<int>(-fl);
                MatC r = llt.solve(id);
                MatC p = r;
                for (int j = 1; j < m; ++j) p = llt.solve(p);
                acc += q.w[i] * std::pow(t, s - fl - 1.0) * p;
                break;
            }
            case PowerBranch::OneTwo:
                acc += q.w[i] * (std::pow(t, s - 2.0)) * (x.mat() * llt.solve(x.mat()));
                break;
        }
    }
    acc *= c;
    return HermitianMatrix(std::move(acc), 1e-7);
}

// ---------------------------------------------------------------------------
// random matrix sampling

inline HermitianMatrix random_hermitian(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_hermitian: n >= 1 required");
    Rng rng(seed);
    MatC a = ginibre(n, rng);
    return HermitianMatrix(MatC(0.5 * (a + a.adjoint())), 1e-9);
}

inline HermitianMatrix random_psd(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_psd: n >= 1 required");
    Rng rng(seed);
    MatC a = ginibre(n, rng);
    return HermitianMatrix(MatC((a * a.adjoint()) / double(n)), 1e-9);
}

// C = (P+Q)/2, D = (P-Q)/2 from independent PSD P, Q, so C+D = P and
// C-D = Q are positive semidefinite by construction.
inline std::pair<HermitianMatrix, HermitianMatrix> random_psd_pair(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_psd_pair: n >= 1 required");
    Rng rng(seed);
    MatC a = ginibre(n, rng);
    MatC b = ginibre(n, rng);
    MatC p = (a * a.adjoint()) / double(n);
    MatC q = (b * b.adjoint()) / double(n);
    return {HermitianMatrix(MatC(0.5 * (p + q)), 1e-9), HermitianMatrix(MatC(0.5 * (p - q)), 1e-9)};
}

// QR of a complex Ginibre matrix with the R diagonal phases fixed, which is
// distributed by unitarily invariant (Haar) measure.
inline MatC haar_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("haar_unitary: n >= 1 required");
    Rng rng(seed);
    MatC a = ginibre(n, rng);
    Eigen::HouseholderQR<MatC> qr(a);
    MatC qmat = qr.householderQ();
    MatC rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        cxd d = rmat(j, j);
        const double ad = std::abs(d);
        qmat.col(j) *= (ad > 0 ? d / ad : cxd(1.0, 0.0));
    }
    return qmat;
}

}  // namespace schatten_lab
