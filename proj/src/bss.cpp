#include "conesparse/bss.hpp"

#include <cmath>
#include <sstream>
#include <thread>

#include "conesparse/order.hpp"

namespace conesparse {

double barrier_upper(const Cone& cone, const ConeElement& e, const ConeElement& x, double u_shift) {
    return -grad_dir(cone, u_shift * e - x, e);
}

double barrier_lower(const Cone& cone, const ConeElement& e, const ConeElement& x, double ell_shift) {
    return -grad_dir(cone, x - ell_shift * e, e);
}

BssSchedule bss_schedule(double nu, double eps) {
    BssSchedule s;
    s.T = static_cast<long long>(std::ceil(4.0 * nu / (eps * eps)));
    s.delta_u = 1.0 + eps / 2.0;
    s.delta_l = 1.0 - eps / 2.0;
    s.u0 = 2.0 * nu / eps;
    s.l0 = -2.0 * nu / eps;
    return s;
}

BssState bss_initial_state(const SparsificationInstance& inst) {
    const auto& cone = inst.cone();
    const auto sched = bss_schedule(cone.nu(), inst.epsilon());
    BssState st;
    st.z = ConeElement::zeros(cone.shape());
    st.y = Vec::Zero(inst.size());
    st.u = sched.u0;
    st.ell = sched.l0;
    st.phi_upper = barrier_upper(cone, inst.target(), st.z, st.u);
    st.phi_lower = barrier_lower(cone, inst.target(), st.z, st.ell);
    return st;
}

namespace {

void scan_candidates(const SparsificationInstance& inst, const ConeElement& grad_up,
                     const ConeElement& hess_up_e, double denom_up, const ConeElement& grad_lo,
                     const ConeElement& hess_lo_e, double denom_lo, int threads, Vec& U_vals,
                     Vec& L_vals) {
    const int m = inst.size();
    auto worker = [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            const ConeElement& xj = inst.elements()[j];
            U_vals[j] = hess_up_e.dot(xj) / denom_up - grad_up.dot(xj);
            L_vals[j] = hess_lo_e.dot(xj) / denom_lo + grad_lo.dot(xj);
        }
    };
    if (threads <= 1 || m < 2 * threads) {
        worker(0, m);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (m + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(m, begin + chunk);
        if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
}

} // namespace

StepFunctionals step_functionals(const SparsificationInstance& inst, const BssState& state,
                                 int threads) {
    const auto& cone = inst.cone();
    const ConeElement& e = inst.target();
    const auto sched = bss_schedule(cone.nu(), inst.epsilon());

    const ConeElement up_point = (state.u + sched.delta_u) * e - state.z;
    const ConeElement lo_point = state.z - (state.ell + sched.delta_l) * e;

    ConeElement grad_up, hess_up_e, grad_lo, hess_lo_e;
    try {
        grad_up = cone.gradient(up_point);
        hess_up_e = cone.hess_apply(up_point, e);
        grad_lo = cone.gradient(lo_point);
        hess_lo_e = cone.hess_apply(lo_point, e);
    } catch (const NonInterior& e) {
        // The shifted points stay interior while the potentials stay below
        // their caps; leaving the domain here is a numerical failure.
        std::ostringstream msg;
        msg << "shifted point left the barrier domain at iteration " << state.t + 1
            << " (phi_upper = " << state.phi_upper << ", phi_lower = " << state.phi_lower
            << "): " << e.what();
        throw StepNotFound(msg.str());
    }
    const double denom_up = sched.delta_u * hess_up_e.dot(e);
    const double denom_lo = sched.delta_l * hess_lo_e.dot(e);

    StepFunctionals sf;
    sf.U_vals = Vec(inst.size());
    sf.L_vals = Vec(inst.size());
    scan_candidates(inst, grad_up, hess_up_e, denom_up, grad_lo, hess_lo_e, denom_lo, threads,
                    sf.U_vals, sf.L_vals);

    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < inst.size(); ++j) {
        if (sf.U_vals[j] <= 0.0) continue;
        const double gap = sf.L_vals[j] - sf.U_vals[j];
        if (gap > best) {
            best = gap;
            sf.chosen_j = j;
        }
    }
    if (sf.chosen_j < 0 || best < -1e-9) {
        std::ostringstream msg;
        msg << "no admissible step at iteration " << state.t + 1 << " on " << cone.name()
            << ": max(L-U) = " << best << ", phi_upper = " << state.phi_upper
            << ", phi_lower = " << state.phi_lower;
        throw StepNotFound(msg.str());
    }
    sf.alpha = 2.0 / (sf.L_vals[sf.chosen_j] + sf.U_vals[sf.chosen_j]);
    return sf;
}

SparsifierResult bss_sparsify(const SparsificationInstance& inst, const EngineOptions& opts) {
    const auto& cone = inst.cone();
    if (!cone.pairwise_self_concordant()) {
        throw NonPairwiseBarrier("barrier of " + cone.name() +
                                 " is not flagged pairwise-self-concordant; use the "
                                 "Frank-Wolfe engine");
    }
    const ConeElement& e = inst.target();
    const auto sched = bss_schedule(cone.nu(), inst.epsilon());

    BssState st = bss_initial_state(inst);
    SparsifierResult result;
    result.bound = sched.T;
    result.trace.push_back(
        {0, -1, std::numeric_limits<double>::quiet_NaN(), st.u, st.ell, st.phi_upper, st.phi_lower,
         std::numeric_limits<double>::quiet_NaN()});

    for (long long t = 1; t <= sched.T; ++t) {
        const StepFunctionals sf = step_functionals(inst, st, opts.threads);
        const int j = sf.chosen_j;

        st.z += sf.alpha * inst.elements()[j];
        st.y[j] += sf.alpha;
        st.u += sched.delta_u;
        st.ell += sched.delta_l;
        st.t = t;

        const ConeElement up_point = st.u * e - st.z;
        const ConeElement lo_point = st.z - st.ell * e;
        const double up_slack = cone.slack(up_point);
        const double lo_slack = cone.slack(lo_point);
        if (up_slack < 1e-10 * (1.0 + up_point.inf_norm()) ||
            lo_slack < 1e-10 * (1.0 + lo_point.inf_norm())) {
            std::ostringstream msg;
            msg << "interior guard tripped at iteration " << t << " on " << cone.name()
                << ": upper slack " << up_slack << ", lower slack " << lo_slack;
            throw StepNotFound(msg.str());
        }

        const double phi_up = barrier_upper(cone, e, st.z, st.u);
        const double phi_lo = barrier_lower(cone, e, st.z, st.ell);
        if (phi_up > st.phi_upper + 1e-8 || phi_lo > st.phi_lower + 1e-8) {
            std::ostringstream msg;
            msg << "potential increased at iteration " << t << ": upper " << st.phi_upper << " -> "
                << phi_up << ", lower " << st.phi_lower << " -> " << phi_lo;
            throw StepNotFound(msg.str());
        }
        st.phi_upper = phi_up;
        st.phi_lower = phi_lo;

        result.trace.push_back({t, inst.original_index(j), sf.alpha, st.u, st.ell, phi_up, phi_lo,
                                std::numeric_limits<double>::quiet_NaN()});
    }

    for (int j = 0; j < inst.size(); ++j) {
        if (st.y[j] > 0.0) {
            result.support.push_back(inst.original_index(j));
            result.weights.push_back(st.y[j] / static_cast<double>(sched.T));
        }
    }
    result.iterations = sched.T;
    const ConeElement y = result.combination(inst);
    result.achieved_eps = order_norm(cone, e, y - e).value;
    return result;
}

} // namespace conesparse
