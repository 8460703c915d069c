// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; nothing defers to later calibration.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conesparse/bss.hpp"
#include "conesparse/caratheodory.hpp"
#include "conesparse/fw.hpp"
#include "conesparse/gen.hpp"
#include "conesparse/graph.hpp"
#include "conesparse/packcover.hpp"
#include "conesparse/verify.hpp"

using namespace conesparse;

namespace {

int failures = 0;
int step_not_found_count = 0;
int bss_runs_total = 0;
bool trace_laws_ok = true;
std::string trace_laws_detail;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Criterion 5 material: potentials start at eps/2 (1e-9) and never increase
/// (slack 1e-8), across every greedy run in the suite.
void absorb_trace(const SparsifierResult& res, double eps) {
    if (res.trace.empty() || std::abs(res.trace[0].phi_upper - eps / 2.0) > 1e-9 ||
        std::abs(res.trace[0].phi_lower - eps / 2.0) > 1e-9) {
        trace_laws_ok = false;
        if (trace_laws_detail.empty()) trace_laws_detail = "initial potential off eps/2";
        return;
    }
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
        if (res.trace[i].phi_upper > res.trace[i - 1].phi_upper + 1e-8 ||
            res.trace[i].phi_lower > res.trace[i - 1].phi_lower + 1e-8) {
            trace_laws_ok = false;
            if (trace_laws_detail.empty())
                trace_laws_detail = "potential increased at t=" + std::to_string(res.trace[i].t);
            return;
        }
    }
}

using InstanceGen = std::function<SparsificationInstance(std::uint64_t)>;

struct BssBatch {
    bool pass = true;
    long long worst_support = 0;
    double worst_eps = 0.0;
    std::string detail;
};

BssBatch run_bss_batch(const InstanceGen& gen, int seeds, long long support_cap, double eps) {
    BssBatch batch;
    for (int seed = 1; seed <= seeds; ++seed) {
        ++bss_runs_total;
        try {
            const auto inst = gen(seed);
            const auto res = bss_sparsify(inst);
            absorb_trace(res, eps);
            const auto cert = certify(inst, res);
            batch.worst_support = std::max(batch.worst_support,
                                           static_cast<long long>(res.support.size()));
            batch.worst_eps = std::max(batch.worst_eps, cert.achieved_eps);
            if (static_cast<long long>(res.support.size()) > support_cap || !cert.pass ||
                cert.achieved_eps > eps + 1e-12) {
                batch.pass = false;
                if (batch.detail.empty()) batch.detail = "seed " + std::to_string(seed);
            }
        } catch (const StepNotFound& e) {
            ++step_not_found_count;
            batch.pass = false;
            batch.detail = std::string("StepNotFound: ") + e.what();
        }
    }
    return batch;
}

std::vector<ConeHandle> acceptance_cones() {
    return {make_orthant(5), make_psd(4), make_second_order(4), make_spectral_epigraph(4, 2),
            make_product({make_psd(3), make_orthant(2)})};
}

char buf[256];

} // namespace

int main() {
    // 1. Greedy support bound on rank-one PSD sums.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto batch = run_bss_batch(
            [](std::uint64_t seed) { return gen_psd_rank1(4, 200, 0.5, seed); }, 20, 64, 0.5);
        const double elapsed = seconds_since(t0);
        std::snprintf(buf, sizeof(buf),
                      "20 seeds, support <= %lld (cap 64), worst eps %.4f, %.2fs (cap 10s)",
                      batch.worst_support, batch.worst_eps, elapsed);
        report(1, "psd(4) rank-one support bound 4d/eps^2", batch.pass && elapsed <= 10.0, buf);
    }

    // 2. Second-order cone: nu = 2 regardless of the ambient dimension.
    {
        const auto batch = run_bss_batch(
            [](std::uint64_t seed) { return gen_soc_random(5, 300, 0.4, seed); }, 20, 50, 0.4);
        std::snprintf(buf, sizeof(buf), "20 seeds, support <= %lld (cap 50), worst eps %.4f",
                      batch.worst_support, batch.worst_eps);
        report(2, "soc(5) support bound with nu=2", batch.pass, buf);
    }

    // 3. Spectral-norm epigraph with the hyperbolic barrier (nu = 2k = 4).
    {
        const auto batch = run_bss_batch(
            [](std::uint64_t seed) { return gen_spectral_random(6, 2, 150, 0.5, seed); }, 10, 64,
            0.5);
        std::snprintf(buf, sizeof(buf), "10 seeds, support <= %lld (cap 64), worst eps %.4f",
                      batch.worst_support, batch.worst_eps);
        report(3, "spectral_epigraph(6,2) hyperbolic barrier bound", batch.pass, buf);
    }

    // 4. The greedy engine never failed to find a step.
    {
        std::snprintf(buf, sizeof(buf), "%d StepNotFound across %d runs", step_not_found_count,
                      bss_runs_total);
        report(4, "no step failures on valid instances", step_not_found_count == 0, buf);
    }

    // 5. Potential traces: start at eps/2 (1e-9) and never increase (1e-8).
    report(5, "potential traces monotone from eps/2", trace_laws_ok, trace_laws_detail);

    // 6. Frank-Wolfe convergence law with curvature 4 nu^2.
    {
        bool pass = true;
        std::string detail;
        double worst_eps = 0.0;
        for (int seed = 1; seed <= 10; ++seed) {
            const auto inst = gen_orthant_random(3, 50, 0.4, seed);
            const auto res = fw_sparsify(inst);
            for (const auto& row : res.trace) {
                if (row.objective > 8.0 * 9.0 / static_cast<double>(row.t + 2) + 1e-9) {
                    pass = false;
                    detail = "objective law broken at t=" + std::to_string(row.t);
                }
            }
            const auto cert = certify(inst, res);
            worst_eps = std::max(worst_eps, cert.achieved_eps);
            if (!cert.pass || cert.achieved_eps > 0.4) pass = false;
        }
        std::snprintf(buf, sizeof(buf), "10 seeds, f(z_t) <= 8nu^2/(t+2), worst final eps %.4f",
                      worst_eps);
        report(6, "frank-wolfe objective law on orthant(3)", pass, detail.empty() ? buf : detail);
    }

    // 7. Complete-graph sparsification at n = 40.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const auto out = sparsify_graph(gen_complete_graph(40), 0.6, Engine::Bss);
        const double elapsed = seconds_since(t0);
        absorb_trace(out.result, 0.6);
        bool pass = out.graph.edges.size() <= 434 && out.certificate.pass && elapsed <= 60.0;

        // Eigenvalue sandwich in the reduced space.
        const auto red = graph_to_instance(gen_complete_graph(40), 0.6);
        Mat y = Mat::Zero(39, 39);
        for (std::size_t i = 0; i < out.result.support.size(); ++i) {
            y += out.result.weights[i] * red.instance.elements()[out.result.support[i]].sym();
        }
        Eigen::SelfAdjointEigenSolver<Mat> es_e(red.instance.target().sym());
        const Mat w = es_e.operatorInverseSqrt();
        Eigen::SelfAdjointEigenSolver<Mat> es(w * y * w, Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        pass = pass && lo >= 0.4 - 1e-9 && hi <= 1.6 + 1e-9;
        std::snprintf(buf, sizeof(buf),
                      "%zu of 780 edges (cap 434), spectrum [%.4f, %.4f] in [0.4,1.6], %.2fs",
                      out.graph.edges.size(), lo, hi, elapsed);
        report(7, "complete graph K40 sparsification", pass, buf);
    }

    // 8. Pairwise-self-concordance inequality, 200 samples per cone.
    {
        bool pass = true;
        std::string detail;
        for (const auto& cone : acceptance_cones()) {
            const auto rep = pairwise_sc_suite(*cone, 200, 2024);
            for (const auto& c : rep.checks) {
                if (!c.pass()) {
                    pass = false;
                    detail = cone->name() + " " + c.law + " violation " +
                             std::to_string(c.max_violation);
                }
            }
        }
        report(8, "pairwise-self-concordance suite (200 samples x 5 cones)", pass, detail);
    }

    // 9. Barrier laws, 100 samples per cone, violations <= 1e-6.
    {
        bool pass = true;
        std::string detail;
        for (const auto& cone : acceptance_cones()) {
            const auto rep = barrier_law_suite(*cone, 100, 77);
            for (const auto& c : rep.checks) {
                if (c.max_violation > 1e-6) {
                    pass = false;
                    detail = cone->name() + " " + c.law + " violation " +
                             std::to_string(c.max_violation);
                }
            }
        }
        report(9, "barrier law suite (100 samples per cone)", pass, detail);
    }

    // 10. Derivative oracles vs central finite differences, 50 points per cone.
    {
        bool pass = true;
        std::string detail;
        for (const auto& cone : acceptance_cones()) {
            const auto rep = derivative_check_suite(*cone, 50, 55);
            for (const auto& c : rep.checks) {
                if (c.max_violation > 1e-5) {
                    pass = false;
                    detail = cone->name() + " " + c.law + " rel error " +
                             std::to_string(c.max_violation);
                }
            }
        }
        report(10, "derivative oracles vs finite differences", pass, detail);
    }

    // 11. Packing/covering checks on random orthant instances.
    {
        bool pass = true;
        std::string detail;
        for (int seed = 1; seed <= 20; ++seed) {
            const auto inst = gen_packcover(3, 6, seed);
            const auto duality = solve_both(inst);
            if (!duality.strong_duality) {
                pass = false;
                detail = "duality gap " + std::to_string(duality.gap);
                continue;
            }
            // Cost sandwich on the coordinate decomposition of c.
            std::vector<ConeElement> parts;
            for (int j = 0; j < inst.d(); ++j) {
                Vec v = Vec::Zero(inst.d());
                v[j] = inst.c.coords()[j];
                parts.push_back(ConeElement::vector(v));
            }
            SparsificationInstance decomposition(inst.cone, parts, 0.3, inst.c);
            const auto sparsified = bss_sparsify(decomposition);
            const auto sandwich =
                pack_cost_sandwich(inst, sparsified.combination(decomposition), 0.3);
            if (!sandwich.pass) {
                pass = false;
                detail = "pack sandwich failed at seed " + std::to_string(seed);
            }
            const auto sparse = sparse_cover_solution(inst, 0.5);
            if (!sparse.pass || !sparse.feasible || sparse.lower_margin < -1e-9 ||
                sparse.upper_margin < -1e-9) {
                pass = false;
                detail = "sparse cover failed at seed " + std::to_string(seed);
            }
        }
        report(11, "packing/covering duality, sandwich, sparse cover (20 seeds)", pass, detail);
    }

    // 12. Caratheodory reduction against the rank oracle.
    {
        bool pass = true;
        std::string detail;
        for (int seed = 1; seed <= 20; ++seed) {
            const auto inst = seed % 2 == 0 ? gen_orthant_random(4, 12, 0.5, seed)
                                            : gen_psd_rank1(2, 10, 0.5, seed);
            const auto res = caratheodory_reduce(inst);
            Mat flat(inst.cone().dim_ambient(), inst.size());
            for (int i = 0; i < inst.size(); ++i) flat.col(i) = inst.elements()[i].coords();
            const auto rank = flat.fullPivLu().rank();
            if (static_cast<Eigen::Index>(res.support.size()) > rank ||
                res.achieved_eps > 1e-7) {
                pass = false;
                detail = "seed " + std::to_string(seed) + ": support " +
                         std::to_string(res.support.size()) + " rank " + std::to_string(rank) +
                         " eps " + std::to_string(res.achieved_eps);
            }
        }
        report(12, "caratheodory support <= rank with exact reconstruction", pass, detail);
    }

    if (failures == 0) {
        std::printf("acceptance: all 12 criteria pass\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failures);
    }
    return failures;
}
