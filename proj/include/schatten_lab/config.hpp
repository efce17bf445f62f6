#pragma once
//
// schatten_lab -- config : tolerances, thread control, deterministic parallel maps
//

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace schatten_lab {

// Single record of all numerical tolerances used across the library.
struct Tolerances {
    double sym    = 1e-12;  // Hermitian symmetry certificates
    double decomp = 1e-9;   // eigen/SVD reconstruction and orthonormality
    double quad   = 1e-6;   // quadrature vs. spectral matrix functions (relative)
    double gap    = 1e-9;   // inequality slack
};

inline const Tolerances& default_tols() {
    static const Tolerances t{};
    return t;
}

// Thread cap: 0 means auto (hardware_concurrency). Overridable per call site;
// the process-wide default comes from SCHATTEN_LAB_THREADS.
inline int env_thread_cap() {
    if (const char* e = std::getenv("SCHATTEN_LAB_THREADS")) {
        int v = std::atoi(e);
        if (v >= 0) return v;
    }
    return 0;
}

inline int resolve_threads(int cap) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (cap <= 0) return static_cast<int>(hw);
    return std::min<int>(cap, static_cast<int>(hw));
}

// Index-parallel map writing into preallocated slots. Results are identical
// for any thread count; body(i) must only touch slot i of its outputs.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         int thread_cap = -1) {
    if (n == 0) return;
    int nt = resolve_threads(thread_cap < 0 ? env_thread_cap() : thread_cap);
    if (nt <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    nt = std::min<int>(nt, static_cast<int>(n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < n;
                 i += static_cast<std::size_t>(nt))
                body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace schatten_lab
