#include "conesparse/verify.hpp"

#include <cmath>

#include "conesparse/sampling.hpp"

namespace conesparse {

SandwichCertificate certify(const SparsificationInstance& inst, const SparsifierResult& result) {
    if (result.support.size() != result.weights.size()) {
        throw BadResult("support and weight lists differ in length");
    }
    for (std::size_t i = 0; i < result.support.size(); ++i) {
        const int idx = result.support[i];
        if (idx < 0 || idx >= inst.input_size()) {
            throw BadResult("support index " + std::to_string(idx) + " out of range");
        }
        if (!(result.weights[i] > 0.0)) {
            throw BadResult("weight " + std::to_string(result.weights[i]) + " at support index " +
                            std::to_string(idx) + " is not positive");
        }
    }
    const ConeElement y = result.combination(inst);
    return in_order_interval(inst.cone(), inst.target(), y, inst.epsilon());
}

namespace {

void record(LawReport& report, const std::string& law, double violation, double tol, int samples) {
    for (auto& c : report.checks) {
        if (c.law == law) {
            c.max_violation = std::max(c.max_violation, violation);
            c.samples += samples;
            return;
        }
    }
    report.checks.push_back({law, violation, tol, samples});
}

} // namespace

LawReport barrier_law_suite(const Cone& cone, int samples, std::uint64_t seed) {
    Rng rng(seed);
    LawReport report;
    const double nu = cone.nu();
    for (int s = 0; s < samples; ++s) {
        const ConeElement e = sample_interior(cone, rng);
        const ConeElement g = cone.gradient(e);

        record(report, "grad_at_point_equals_minus_nu", std::abs(g.dot(e) + nu) / nu, 1e-8, 1);

        const ConeElement u = sample_conic(cone, rng);
        const double neg_grad_u = -g.dot(u);
        const double hnorm = hessian_norm(cone, e, u);
        record(report, "neg_grad_dominates_hessian_norm", hnorm - neg_grad_u, 1e-8, 1);

        const double onorm = order_norm(cone, e, u).value;
        record(report, "hessian_norm_dominates_order_norm", onorm - hnorm, 1e-6, 1);

        // Dikin ball: |z - e|_e(hessian) = 0.999 implies z in K.
        const ConeElement dir = sample_direction(cone, rng);
        const double dn = hessian_norm(cone, e, dir);
        if (dn > 1e-12) {
            const ConeElement z = e + (0.999 / dn) * dir;
            const double slack = cone.slack(z);
            const double tol = kMembershipRelTol * (1.0 + z.inf_norm());
            record(report, "dikin_ball_inside_cone", -(slack + tol), 0.0, 1);
        }
    }
    return report;
}

LawReport pairwise_sc_suite(const Cone& cone, int samples, std::uint64_t seed) {
    if (!cone.pairwise_self_concordant()) {
        throw NonPairwiseBarrier("pairwise suite requested for " + cone.name() +
                                 " whose barrier is not flagged pairwise");
    }
    Rng rng(seed);
    LawReport report;
    const double t_grid[] = {0.1, 0.5, 1.0};
    for (int s = 0; s < samples; ++s) {
        const ConeElement x = sample_interior(cone, rng);
        const ConeElement u = sample_conic(cone, rng);
        const ConeElement v = sample_conic(cone, rng);

        const double h_uv = hess_bilin(cone, x, u, v);
        record(report, "hessian_nonnegative_on_cone_pairs", -h_uv, 1e-9 * (1.0 + std::abs(h_uv)),
               1);

        const double neg_third = -cone.third_trilin(x, v, u, u);
        record(report, "pairwise_lower", -neg_third, 1e-7, 1);

        const double u_norm = order_norm(cone, x, u).value;
        const double upper = 2.0 * h_uv * u_norm;
        record(report, "pairwise_upper", (neg_third - upper) / (1.0 + std::abs(upper)), 1e-6, 1);

        // Hessian control along a cone direction.
        const double v_norm = order_norm(cone, x, v).value;
        for (const double t : t_grid) {
            const double lhs = hess_bilin(cone, x + t * v, u, v);
            const double rhs = h_uv / std::pow(1.0 + t * v_norm, 2);
            record(report, "hessian_control_shift", (rhs - lhs) / (1.0 + std::abs(rhs)), 1e-6, 1);
        }
    }
    return report;
}

LawReport derivative_check_suite(const Cone& cone, int points, std::uint64_t seed) {
    Rng rng(seed);
    LawReport report;
    // Unit-size directions keep the finite-difference truncation term small
    // relative to the derivative being checked.
    const auto unit_direction = [&rng](const Cone& c) {
        ConeElement d = sample_direction(c, rng);
        const double n = d.inf_norm();
        if (n > 1e-12) d *= 1.0 / n;
        return d;
    };
    for (int s = 0; s < points; ++s) {
        const ConeElement x = sample_interior(cone, rng);
        const ConeElement u = unit_direction(cone);
        const ConeElement v = unit_direction(cone);
        const ConeElement w = unit_direction(cone);
        const double scale = 1.0 + x.inf_norm();

        const double h1 = 1e-5 * scale;
        const double g_fd = (cone.barrier_value(x + h1 * u) - cone.barrier_value(x - h1 * u)) /
                            (2.0 * h1);
        const double g = grad_dir(cone, x, u);
        record(report, "gradient_vs_fd", std::abs(g_fd - g) / (1.0 + std::abs(g)), 1e-5, 1);

        const double h_fd =
            (grad_dir(cone, x + h1 * v, u) - grad_dir(cone, x - h1 * v, u)) / (2.0 * h1);
        const double h = hess_bilin(cone, x, u, v);
        record(report, "hessian_vs_fd", std::abs(h_fd - h) / (1.0 + std::abs(h)), 1e-5, 1);

        const double h2 = 1e-4 * scale;
        const double t_fd =
            (hess_bilin(cone, x + h2 * w, u, v) - hess_bilin(cone, x - h2 * w, u, v)) / (2.0 * h2);
        const double t = cone.third_trilin(x, u, v, w);
        record(report, "third_vs_fd", std::abs(t_fd - t) / (1.0 + std::abs(t)), 1e-5, 1);
    }
    return report;
}

} // namespace conesparse
