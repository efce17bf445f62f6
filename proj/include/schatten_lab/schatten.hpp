#pragma once
//
// schatten_lab -- schatten : Schatten p-norms (p >= 1), quasinorms (0 < s < 1),
// antinorms (s < 0), Ky Fan norms, and the matching vector s-functionals.
//

#include <cmath>
#include <stdexcept>
#include <string>

#include "schatten_lab/linalg.hpp"

namespace schatten_lab {

enum class ExponentClass { Norm, Quasinorm, Antinorm };

// Validated exponent s != 0, tagged by which functional family it selects.
class Exponent {
  public:
    explicit Exponent(double s) : value_(s) {
        if (s == 0.0 || !std::isfinite(s))
            throw std::invalid_argument("Exponent: s must be finite and nonzero");
        cls_ = s >= 1.0 ? ExponentClass::Norm
                        : (s > 0.0 ? ExponentClass::Quasinorm : ExponentClass::Antinorm);
    }
    double value() const { return value_; }
    ExponentClass cls() const { return cls_; }

  private:
    double value_;
    ExponentClass cls_;
};

// s/(s-1): Hoelder conjugate for p > 1, the negative/quasi conjugate otherwise.
inline double conjugate_exponent(double s) {
    if (s == 1.0) throw std::domain_error("conjugate_exponent: s = 1 has no finite conjugate");
    return s / (s - 1.0);
}

constexpr double kSingularityThreshold = 1e-12;

inline double vector_s_power(const VecR& x, double s) {
    Exponent e(s);
    double acc = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        const double a = std::abs(x(i));
        if (s < 0.0 && a <= kSingularityThreshold)
            throw std::domain_error("vector_s_power: zero entry with negative exponent");
        acc += std::pow(a, s);
    }
    return acc;
}

inline double vector_s(const VecR& x, double s) {
    return std::pow(vector_s_power(x, s), 1.0 / s);
}

// ||X||_s^s = sum sigma_i(X)^s. Computed without the 1/s root so values stay
// stable for small |s|.
inline double schatten_s_power(const MatC& x, double s) {
    return vector_s_power(svd_vals(x), s);
}

inline double schatten(const MatC& x, double s) {
    return std::pow(schatten_s_power(x, s), 1.0 / s);
}

inline double schatten(const MatC& x, const Exponent& e) { return schatten(x, e.value()); }

inline double schatten(const HermitianMatrix& x, double s) { return schatten(x.mat(), s); }
inline double schatten_s_power(const HermitianMatrix& x, double s) {
    return schatten_s_power(x.mat(), s);
}

// Total antinorm variant: 0 when any singular value falls at/below the
// positivity threshold, the continuity convention used by the reverse
// Hoelder right-hand side for noninvertible factors.
inline double schatten_antinorm_or_zero(const MatC& x, double s) {
    if (s >= 0.0) throw std::invalid_argument("schatten_antinorm_or_zero: needs s < 0");
    VecR sv = svd_vals(x);
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= kSingularityThreshold) return 0.0;
    return vector_s(sv, s);
}

// Sum of the k largest singular values.
inline double kyfan(const MatC& x, int k) {
    VecR sv = svd_vals(x);
    if (k < 1 || k > sv.size())
        throw std::invalid_argument("kyfan: k must be in [1, n], got " + std::to_string(k));
    double acc = 0.0;
    for (int i = 0; i < k; ++i) acc += sv(i);
    return acc;
}

// Unitarily invariant norm selector used by the variational checks.
struct UINorm {
    enum class Kind { Trace, KyFan, Schatten } kind = Kind::Trace;
    int k = 1;          // KyFan order
    double t = 2.0;     // Schatten order, t >= 1

    static UINorm trace() { return {Kind::Trace, 1, 1.0}; }
    static UINorm kyfan_k(int k) { return {Kind::KyFan, k, 1.0}; }
    static UINorm schatten_t(double t) {
        if (t < 1.0) throw std::invalid_argument("UINorm: Schatten order must be >= 1");
        return {Kind::Schatten, 1, t};
    }

    double operator()(const MatC& x) const {
        switch (kind) {
            case Kind::Trace: return schatten_lab::schatten(x, 1.0);
            case Kind::KyFan: return schatten_lab::kyfan(x, k);
            case Kind::Schatten: return schatten_lab::schatten(x, t);
        }
        return 0.0;
    }

    std::string name() const {
        switch (kind) {
            case Kind::Trace: return "trace";
            case Kind::KyFan: return "kyfan" + std::to_string(k);
            case Kind::Schatten: return "schatten" + std::to_string(t);
        }
        return {};
    }
};

}  // namespace schatten_lab
