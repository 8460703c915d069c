#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conesparse/instance.hpp"
#include "conesparse/order.hpp"

namespace conesparse {

/// Recompute y = sum lambda_i x_i from scratch and certify the order interval
/// (1-eps) e <=_K y <=_K (1+eps) e. Throws BadResult on nonpositive weights or
/// out-of-range indices. Independent of the engine that produced the result.
SandwichCertificate certify(const SparsificationInstance& inst, const SparsifierResult& result);

/// One inequality of a sampled law suite: the maximal violation observed over
/// all samples (positive means the inequality failed by that much) against
/// the tolerance it is held to.
struct LawCheck {
    std::string law;
    double max_violation = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool pass() const { return max_violation <= tolerance; }
};

struct LawReport {
    std::vector<LawCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

/// Sampled checks of the four standard barrier laws at random interior e and
/// conic u: D phi(e)[e] = -nu; -D phi(e)[u] >= |u|_e(hessian);
/// the unit Hessian ball around e stays in K (tested at radius 0.999);
/// and the Hessian norm dominates the order norm.
LawReport barrier_law_suite(const Cone& cone, int samples, std::uint64_t seed);

/// Sampled checks of the pairwise-self-concordance inequality
///   0 <= -D^3 phi(x)[v,u,u] <= 2 D^2 phi(x)[v,u] |u|_x
/// (1e-7 absolute on the lower bound, 1e-6 relative on the upper), the
/// nonnegativity of D^2 phi(x)[u,v] on cone pairs, and Hessian-control spot
/// checks D^2 phi(x+tv)[u,v] >= D^2 phi(x)[u,v] / (1+t|v|_x)^2 at
/// t in {0.1, 0.5, 1.0}.
LawReport pairwise_sc_suite(const Cone& cone, int samples, std::uint64_t seed);

/// Derivative oracles against central finite differences of the next-lower
/// oracle: gradient vs barrier values (h = 1e-5 scale), Hessian form vs
/// gradients (1e-5), third form vs Hessian forms (1e-4). Violations are
/// relative errors |fd - analytic| / (1 + |analytic|).
LawReport derivative_check_suite(const Cone& cone, int points, std::uint64_t seed);

} // namespace conesparse
