#pragma once
//
// schatten_lab -- suites : named property suites over random samples.
//
// Every suite draws its per-sample randomness from derive_seed(seed, index),
// writes results into index slots, and aggregates afterwards, so the output
// is identical for any thread count. Violations are counted on asserted
// domains only; out-of-domain evaluations are recorded with asserted=false.
//

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "schatten_lab/config.hpp"
#include "schatten_lab/explorer.hpp"
#include "schatten_lab/hanner.hpp"
#include "schatten_lab/linalg.hpp"
#include "schatten_lab/majorization.hpp"
#include "schatten_lab/rearrange.hpp"
#include "schatten_lab/report.hpp"
#include "schatten_lab/variational.hpp"

namespace schatten_lab {

struct SuiteResult {
    std::string name;
    RunConfig config;
    std::vector<GapReport> reports;
    std::string note;

    int samples() const { return static_cast<int>(reports.size()); }
    int violations() const {
        int v = 0;
        for (const auto& r : reports)
            if (r.asserted && r.verdict == Verdict::Violated) ++v;
        return v;
    }
    double min_directed_gap() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& r : reports)
            if (r.asserted && std::isfinite(r.directed_gap()))
                m = std::min(m, r.directed_gap());
        return m;
    }
    bool passed() const { return violations() == 0; }

    std::string to_json() const {
        JsonWriter w;
        w.begin_object();
        w.key("suite").value(name);
        w.key("config");
        write_config_json(w, config);
        w.key("results").begin_array();
        for (const auto& r : reports) write_gap_report_json(w, r);
        w.end_array();
        w.key("summary").begin_object();
        w.key("min_gap").value(min_directed_gap());
        w.key("violations").value(violations());
        w.key("samples").value(samples());
        if (!note.empty()) w.key("note").value(note);
        w.end_object();
        w.end_object();
        return w.str();
    }
};

namespace detail {

inline HermitianMatrix shifted_random_pd(int n, std::uint64_t seed, double shift = 0.02) {
    return HermitianMatrix(MatC(random_psd(n, seed).mat() + shift * MatC::Identity(n, n)), 1e-9);
}

inline std::string ctx(const std::string& base, int dim, double x, int trial) {
    return base + " dim=" + std::to_string(dim) + " x=" + fmt17(x) +
           " trial=" + std::to_string(trial);
}

// Deterministic slot-parallel sample loop.
inline std::vector<GapReport> sample_map(std::size_t n, int threads,
                                         const std::function<GapReport(std::size_t)>& body) {
    std::vector<GapReport> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = body(i); }, threads);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult run_reverse_minkowski_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.75, 0.5, 0.25, -0.5, -2.0};
    SuiteResult res{"reverse-minkowski", cfg, {}, {}};
    for (int dim : cfg.dims) {
        for (double s : cfg.s_list) {
            auto batch = detail::sample_map(
                static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                    const std::uint64_t sd =
                        derive_seed(cfg.seed, (i * 2654435761ull) ^ std::hash<double>{}(s) ^
                                                  static_cast<std::uint64_t>(dim));
                    HermitianMatrix a = detail::shifted_random_pd(dim, sd);
                    GapReport rep;
                    if (i % 10 == 9) {  // scaling equality family
                        Rng rng(splitmix64(sd));
                        HermitianMatrix b = a.scaled(rng.uniform(0.2, 3.0));
                        rep = reverse_minkowski_gap(a, b, s, cfg.tols.gap);
                        rep.context += detail::ctx(" equality-family", dim, s, (int)i);
                        if (std::abs(rep.gap) > cfg.tols.gap * std::max(1.0, rep.rhs))
                            rep.verdict = Verdict::Violated;
                    } else {
                        HermitianMatrix b = detail::shifted_random_pd(dim, splitmix64(sd));
                        rep = reverse_minkowski_gap(a, b, s, cfg.tols.gap);
                        rep.context += detail::ctx("", dim, s, (int)i);
                    }
                    return rep;
                });
            res.reports.insert(res.reports.end(), batch.begin(), batch.end());
        }
    }
    return res;
}

inline SuiteResult run_reverse_holder_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.5, 0.25, -1.0};
    SuiteResult res{"reverse-holder", cfg, {}, {}};
    for (double s : cfg.s_list) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(s));
                const int dim = cfg.dims[i % cfg.dims.size()];
                GapReport rep;
                if (i % 10 == 9) {  // dual witness closes the gap
                    HermitianMatrix a = detail::shifted_random_pd(dim, sd, 0.1);
                    auto wit = dual_quasinorm_witness(a.mat(), s, 4, splitmix64(sd));
                    rep = reverse_holder_gap(a.mat(), wit.witness.mat(), s, cfg.tols.gap);
                    rep.context += detail::ctx(" witness-equality", dim, s, (int)i);
                    if (std::abs(rep.gap) > 1e-8 * (1.0 + std::abs(rep.rhs)))
                        rep.verdict = Verdict::Violated;
                } else {
                    Rng rng(sd);
                    MatC a = ginibre(dim, rng), b = ginibre(dim, rng);
                    rep = reverse_holder_gap(a, b, s, cfg.tols.gap);
                    rep.context += detail::ctx("", dim, s, (int)i);
                }
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_general_reverse_holder_suite(RunConfig cfg) {
    SuiteResult res{"general-reverse-holder", cfg, {}, {}};
    const double triples[][3] = {{1.0, 0.5, -1.0}, {0.5, 1.0 / 3.0, -1.0}};
    for (const auto& t : triples) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(t[0]));
                const int dim = cfg.dims[i % cfg.dims.size()];
                Rng rng(sd);
                MatC a = ginibre(dim, rng);
                MatC b = ginibre(dim, rng) + 0.6 * MatC::Identity(dim, dim);
                if (svd_vals(b).minCoeff() < 1e-4)
                    b += 0.5 * MatC::Identity(dim, dim);
                const UINorm norm = (i % 2 == 0) ? UINorm::trace() : UINorm::kyfan_k(dim > 1 ? 2 : 1);
                GapReport rep = general_reverse_holder_gap(a, b, t[0], t[1], t[2], norm,
                                                           cfg.tols.gap);
                rep.context += detail::ctx("", dim, t[0], (int)i);
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_hanner_suite(RunConfig cfg) {
    if (cfg.p_list.empty()) cfg.p_list = {1.2, 2.5, 3.0, 5.0};
    SuiteResult res{"hanner", cfg, {}, {}};
    for (double p : cfg.p_list) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(p));
                const int dim = cfg.dims[i % cfg.dims.size()];
                GapReport rep;
                if ((p <= 4.0 / 3.0 || p >= 4.0) && i % 3 == 2) {
                    Rng rng(sd);  // general matrices in the unconditional ranges
                    MatC x = ginibre(dim, rng), y = ginibre(dim, rng);
                    rep = matrix_hanner_gap(x, y, p, cfg.tols.gap);
                    rep.context += detail::ctx(" general", dim, p, (int)i);
                } else {
                    auto [c, d] = random_psd_pair(dim, sd);
                    rep = matrix_hanner_gap(c.mat(), d.mat(), p, cfg.tols.gap);
                    rep.context += detail::ctx(" psd-pair", dim, p, (int)i);
                }
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_reverse_hanner_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.75, 0.5, 0.25, -0.5, -2.0};
    SuiteResult res{"reverse-hanner", cfg, {}, {}};
    int recorded_out_of_domain = 0;
    for (double s : cfg.s_list) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(s));
                const int dim = cfg.dims[i % cfg.dims.size()];
                if (i % 2 == 0) {  // matrix form on positive pairs
                    Rng rng(sd);
                    MatC ga = ginibre(dim, rng), gb = ginibre(dim, rng);
                    MatC p = (ga * ga.adjoint()) / double(dim) +
                             0.05 * MatC::Identity(dim, dim);
                    MatC q = (gb * gb.adjoint()) / double(dim) +
                             0.05 * MatC::Identity(dim, dim);
                    HermitianMatrix c(MatC(0.5 * (p + q)), 1e-9);
                    HermitianMatrix d(MatC(0.5 * (p - q)), 1e-9);
                    auto out = matrix_reverse_hanner_gap(c, d, s, cfg.tols.gap);
                    out.report.context += detail::ctx(" matrix", dim, s, (int)i);
                    return out.report;
                }
                // vector form on the componentwise domain
                Rng rng(splitmix64(sd));
                VecR x(dim), y(dim);
                for (int k = 0; k < dim; ++k) {
                    x(k) = rng.uniform(0.2, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
                    y(k) = x(k) * rng.uniform(-0.98, 0.98);
                }
                auto out = vector_reverse_hanner_gap(x, y, s, cfg.tols.gap);
                out.report.context += detail::ctx(" vector", dim, s, (int)i);
                return out.report;
            });
        for (const auto& r : batch)
            if (!r.asserted) ++recorded_out_of_domain;
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    if (recorded_out_of_domain > 0)
        res.note = std::to_string(recorded_out_of_domain) +
                   " samples outside the asserted domain were recorded, not asserted";
    return res;
}

inline SuiteResult run_svr1_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.5, -0.5};
    SuiteResult res{"svr1", cfg, {}, {}};
    for (double s : cfg.s_list) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(s));
                const int dim = cfg.dims[i % cfg.dims.size()];
                HermitianMatrix q = random_psd(dim, sd);
                HermitianMatrix d = random_hermitian(dim, splitmix64(sd));
                const double smax = svd_vals(d.mat()).maxCoeff();
                HermitianMatrix c(MatC(q.mat() + (smax + 0.1) * MatC::Identity(dim, dim)), 1e-9);
                GapReport rep = svr1_gap(c, d, s, cfg.tols.gap);
                rep.context += detail::ctx("", dim, s, (int)i);
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    auto probe = svr_necessity_probe(cfg.seed, 100);
    res.note = "necessity probe: " + std::to_string(probe.size()) +
               " strict aligned-direction violations in 100 unitary trials";
    return res;
}

inline SuiteResult run_svr2_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.5, -0.5};
    SuiteResult res{"svr2", cfg, {}, {}};
    for (double s : cfg.s_list) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(s));
                const int dim = cfg.dims[i % cfg.dims.size()];
                HermitianMatrix d = detail::shifted_random_pd(dim, sd, 0.05);
                HermitianMatrix c(MatC(d.mat() + random_psd(dim, splitmix64(sd)).mat() +
                                       0.05 * MatC::Identity(dim, dim)),
                                  1e-9);
                if (s < 0.0) {
                    VecR up = svd_vals_ascending(c.mat());
                    VecR asc = svd_vals_ascending(d.mat());
                    if ((up - asc).cwiseAbs().minCoeff() <= 1e-8) {
                        GapReport skip;
                        skip.asserted = false;
                        skip.context = "skipped: near-singular vector side";
                        return skip;
                    }
                }
                GapReport rep = svr2_gap(c, d, s, cfg.tols.gap);
                rep.context += detail::ctx("", dim, s, (int)i);
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_duality_suite(RunConfig cfg) {
    SuiteResult res{"duality", cfg, {}, {}};
    std::vector<double> ps = cfg.p_list.empty() ? std::vector<double>{1.5, 2.0, 3.0} : cfg.p_list;
    std::vector<double> ss = cfg.s_list.empty() ? std::vector<double>{0.5, 0.25, -1.0} : cfg.s_list;
    for (double p : ps) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(p));
                const int dim = cfg.dims[i % cfg.dims.size()];
                Rng rng(sd);
                MatC a = ginibre(dim, rng);
                auto out = dual_norm_value(a, p, 25, splitmix64(sd), cfg.tols.gap);
                out.report.context += detail::ctx(" sup-form", dim, p, (int)i);
                return out.report;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    for (double s : ss) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, (i + 1000) ^ std::hash<double>{}(s));
                const int dim = cfg.dims[i % cfg.dims.size()];
                HermitianMatrix a = detail::shifted_random_pd(dim, sd, 0.1);
                auto out = dual_quasinorm_witness(a.mat(), s, 20, splitmix64(sd), 1e-8,
                                                  cfg.tols.gap);
                out.report.context += detail::ctx(" inf-form", dim, s, (int)i);
                return out.report;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_prop1_suite(RunConfig cfg) {
    SuiteResult res{"prop1", cfg, {}, {}};
    auto batch = detail::sample_map(
        static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
            const std::uint64_t sd = derive_seed(cfg.seed, i);
            const int dim = cfg.dims[i % cfg.dims.size()];
            Rng rng(sd);
            MatC a = ginibre(dim, rng);
            const double alpha = (i % 2 == 0) ? 1.0 : 0.5;
            const double p = (i % 3 == 0) ? 2.0 : 3.0;
            auto out = prop_factorization_check(a, alpha, p, UINorm::trace(), 20, splitmix64(sd),
                                                cfg.tols.gap);
            out.report.context += detail::ctx("", dim, p, (int)i);
            return out.report;
        });
    res.reports = std::move(batch);
    return res;
}

inline SuiteResult run_prop2_suite(RunConfig cfg) {
    SuiteResult res{"prop2", cfg, {}, {}};
    auto batch = detail::sample_map(
        static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
            const std::uint64_t sd = derive_seed(cfg.seed, i);
            const int dim = cfg.dims[i % cfg.dims.size()];
            Rng rng(sd);
            MatC x = ginibre(dim, rng) + 1.2 * MatC::Identity(dim, dim);
            MatC y = ginibre(dim, rng) + 1.2 * MatC::Identity(dim, dim);
            if (svd_vals(x).minCoeff() < 0.05 || svd_vals(y).minCoeff() < 0.05) {
                GapReport skip;
                skip.asserted = false;
                skip.context = "skipped: ill-conditioned draw";
                return skip;
            }
            auto out = prop2_infimum_check(x, y, 1.0, 2.0, 20, splitmix64(sd), cfg.tols.gap);
            out.report.context += detail::ctx("", dim, 2.0, (int)i);
            return out.report;
        });
    res.reports = std::move(batch);
    return res;
}

inline SuiteResult run_prop3_suite(RunConfig cfg) {
    SuiteResult res{"prop3", cfg, {}, {}};
    auto batch = detail::sample_map(
        static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
            const std::uint64_t sd = derive_seed(cfg.seed, i);
            const int dim = cfg.dims[i % cfg.dims.size()];
            Rng rng(sd);
            MatC a = ginibre(dim, rng) + 2.0 * MatC::Identity(dim, dim);
            if (svd_vals(a).minCoeff() < 0.05) {
                GapReport skip;
                skip.asserted = false;
                skip.context = "skipped: ill-conditioned draw";
                return skip;
            }
            const double p = (i % 2 == 0) ? 0.5 : 0.25;
            auto out = prop3_factorization_check(a, 1.0, p, UINorm::trace(), 20, splitmix64(sd),
                                                 cfg.tols.gap);
            out.report.context += detail::ctx("", dim, p, (int)i);
            return out.report;
        });
    res.reports = std::move(batch);
    return res;
}

inline SuiteResult run_geomean_suite(RunConfig cfg) {
    SuiteResult res{"geomean", cfg, {}, {}};
    for (int dim : cfg.dims) {
        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd =
                    derive_seed(cfg.seed, i ^ static_cast<std::uint64_t>(dim) << 32);
                HermitianMatrix a = detail::shifted_random_pd(dim, sd, 0.05);
                HermitianMatrix b = detail::shifted_random_pd(dim, splitmix64(sd), 0.05);
                const int k = 1 + static_cast<int>(i % dim);
                GapReport rep = geomean_kyfan_check(a, b, k, cfg.tols.gap);
                rep.context += detail::ctx(" k=" + std::to_string(k), dim, 0.0, (int)i);
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

inline SuiteResult run_majorization_suite(RunConfig cfg) {
    SuiteResult res{"majorization-suite", cfg, {}, {}};
    auto batch = detail::sample_map(
        static_cast<std::size_t>(cfg.trials) * 4, cfg.threads, [&](std::size_t slot) {
            const std::size_t i = slot / 4;
            const int kind = static_cast<int>(slot % 4);
            const std::uint64_t sd = derive_seed(cfg.seed, slot);
            const int dim = cfg.dims[i % cfg.dims.size()];
            switch (kind) {
                case 0: {  // Schur diagonal
                    GapReport rep = check_schur_diag(random_hermitian(dim, sd), cfg.tols.gap);
                    rep.context += " trial=" + std::to_string(i);
                    return rep;
                }
                case 1: {  // product chains
                    Rng rng(sd);
                    MatC a = ginibre(dim, rng), b = ginibre(dim, rng);
                    GapReport rep = check_horn_gelfand(a, b, cfg.tols.gap);
                    rep.context += " trial=" + std::to_string(i);
                    return rep;
                }
                case 2: {  // entrywise powers of a random weakly-majorized pair
                    Rng rng(sd);
                    VecR b(dim);
                    for (int k = 0; k < dim; ++k) b(k) = rng.uniform(0.0, 3.0);
                    VecR a = VecR::Zero(dim);
                    double wsum = 0.0;
                    for (int rep_i = 0; rep_i < 3; ++rep_i) {
                        std::vector<int> perm(dim);
                        for (int k = 0; k < dim; ++k) perm[k] = k;
                        for (int k = dim - 1; k > 0; --k)
                            std::swap(perm[k], perm[static_cast<int>(rng.raw() % (k + 1))]);
                        const double w = rng.uniform(0.05, 1.0);
                        wsum += w;
                        for (int k = 0; k < dim; ++k) a(k) += w * b(perm[k]);
                    }
                    a /= wsum;
                    a *= rng.uniform(0.6, 1.0);
                    GapReport rep = check_weakpower(a, b, 1.0 + rng.uniform(0.0, 2.0),
                                                    cfg.tols.gap);
                    rep.context += " trial=" + std::to_string(i);
                    return rep;
                }
                default: {  // product of weakly-majorized pairs
                    Rng rng(sd);
                    auto draw_pair = [&](VecR& lo, VecR& hi) {
                        hi.resize(dim);
                        for (int k = 0; k < dim; ++k) hi(k) = rng.uniform(0.0, 3.0);
                        lo = VecR::Zero(dim);
                        double wsum = 0.0;
                        for (int rep_i = 0; rep_i < 3; ++rep_i) {
                            std::vector<int> perm(dim);
                            for (int k = 0; k < dim; ++k) perm[k] = k;
                            for (int k = dim - 1; k > 0; --k)
                                std::swap(perm[k], perm[static_cast<int>(rng.raw() % (k + 1))]);
                            const double w = rng.uniform(0.05, 1.0);
                            wsum += w;
                            for (int k = 0; k < dim; ++k) lo(k) += w * hi(perm[k]);
                        }
                        lo /= wsum;
                        lo *= rng.uniform(0.6, 1.0);
                    };
                    VecR x, y, a2, b2;
                    draw_pair(x, y);
                    draw_pair(a2, b2);
                    GapReport rep = check_weaksum(sorted_descending(x), sorted_descending(y),
                                                  sorted_descending(a2), sorted_descending(b2),
                                                  cfg.tols.gap);
                    rep.context += " trial=" + std::to_string(i);
                    return rep;
                }
            }
        });
    res.reports = std::move(batch);

    // witness reconstruction and the strict-convexity implication, serial tail
    int witness_failures = 0, strictmaj_failures = 0;
    const int witness_trials = std::min(cfg.trials, 100);
    for (int i = 0; i < witness_trials; ++i) {
        const std::uint64_t sd = derive_seed(cfg.seed, 70000 + i);
        Rng rng(sd);
        const int dim = cfg.dims[i % cfg.dims.size()];
        VecR b(dim);
        for (int k = 0; k < dim; ++k) b(k) = rng.uniform(0.0, 3.0);
        VecR a = VecR::Zero(dim);
        double wsum = 0.0;
        for (int rep_i = 0; rep_i < 3; ++rep_i) {
            std::vector<int> perm(dim);
            for (int k = 0; k < dim; ++k) perm[k] = k;
            for (int k = dim - 1; k > 0; --k)
                std::swap(perm[k], perm[static_cast<int>(rng.raw() % (k + 1))]);
            const double w = rng.uniform(0.05, 1.0);
            wsum += w;
            for (int k = 0; k < dim; ++k) a(k) += w * b(perm[k]);
        }
        a /= wsum;
        auto w = ds_witness(a, b);
        if ((w.ds_matrix * b - a).cwiseAbs().maxCoeff() > 1e-9 ||
            !is_doubly_stochastic(w.ds_matrix))
            ++witness_failures;
        if (!strict_equality_implies_permutation(a, b, StrictConvexPhi::Square))
            ++strictmaj_failures;
    }
    res.note = "witness failures: " + std::to_string(witness_failures) +
               ", strict-convexity failures: " + std::to_string(strictmaj_failures);
    if (witness_failures + strictmaj_failures > 0) {
        GapReport bad = make_gap_report(-1.0, 0.0, Direction::GreaterEq, cfg.tols.gap,
                                        "witness/strictmaj failures");
        res.reports.push_back(bad);
    }
    return res;
}

inline SuiteResult run_integral_repr_suite(RunConfig cfg) {
    if (cfg.s_list.empty()) cfg.s_list = {0.5, 0.25, -0.5, -1.5, -2.5, 1.5};
    SuiteResult res{"integral-repr", cfg, {}, {}};
    const auto& q = default_quadrature();
    for (double s : cfg.s_list) {
        // calibration residual against the closed-form constant
        const double c_quad = calibrate_power_constant(s, q);
        const double c_exact = power_constant_closed_form(s);
        GapReport cal = make_gap_report(cfg.tols.quad, std::abs(c_quad / c_exact - 1.0),
                                        Direction::GreaterEq, 0.0,
                                        "calibration s=" + fmt17(s) + " c=" + fmt17(c_quad));
        res.reports.push_back(cal);

        auto batch = detail::sample_map(
            static_cast<std::size_t>(cfg.trials), cfg.threads, [&](std::size_t i) {
                const std::uint64_t sd = derive_seed(cfg.seed, i ^ std::hash<double>{}(s));
                const int dim = std::min(cfg.dims[i % cfg.dims.size()], 6);
                HermitianMatrix x = detail::shifted_random_pd(dim, sd, 0.05);
                auto via_quad = matrix_power_integral(x, s, q);
                auto via_spec = matrix_power_spectral(x, s);
                const double rel =
                    (via_quad.mat() - via_spec.mat()).norm() / via_spec.mat().norm();
                GapReport rep = make_gap_report(cfg.tols.quad, rel, Direction::GreaterEq, 0.0,
                                                detail::ctx("power", dim, s, (int)i));
                return rep;
            });
        res.reports.insert(res.reports.end(), batch.begin(), batch.end());
    }
    return res;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "reverse-minkowski", "reverse-holder", "general-reverse-holder", "hanner",
        "reverse-hanner",    "svr1",           "svr2",                   "duality",
        "prop1",             "prop2",          "prop3",                  "geomean",
        "majorization-suite", "integral-repr"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "reverse-minkowski") return run_reverse_minkowski_suite(cfg);
    if (name == "reverse-holder") return run_reverse_holder_suite(cfg);
    if (name == "general-reverse-holder") return run_general_reverse_holder_suite(cfg);
    if (name == "hanner") return run_hanner_suite(cfg);
    if (name == "reverse-hanner") return run_reverse_hanner_suite(cfg);
    if (name == "svr1") return run_svr1_suite(cfg);
    if (name == "svr2") return run_svr2_suite(cfg);
    if (name == "duality") return run_duality_suite(cfg);
    if (name == "prop1") return run_prop1_suite(cfg);
    if (name == "prop2") return run_prop2_suite(cfg);
    if (name == "prop3") return run_prop3_suite(cfg);
    if (name == "geomean") return run_geomean_suite(cfg);
    if (name == "majorization-suite") return run_majorization_suite(cfg);
    if (name == "integral-repr") return run_integral_repr_suite(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace schatten_lab
