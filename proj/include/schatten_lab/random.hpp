#pragma once
//
// schatten_lab -- random : seeded matrix/vector sampling (Ginibre, Haar, PSD pairs)
//
// Sampling is deterministic given the seed. Per-trial engines are derived with
// splitmix64(seed, index) so suites can run their trials in any order (or in
// parallel) and still produce identical draws.
//

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace schatten_lab {

using cxd = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecR = Eigen::VectorXd;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x51ab5ca1ull));
}

// mt19937_64 with an explicit Box-Muller normal, so draws do not depend on the
// standard library's distribution implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // in [0,1)
        return (eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }
    cxd cnormal() { return {normal(), normal()}; }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline MatC ginibre(int n, Rng& rng) {
    MatC a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.cnormal();
    return a;
}

}  // namespace schatten_lab
