#include "conesparse/order.hpp"

#include <cmath>

#include "conesparse/cone.hpp"

namespace conesparse {

namespace {

bool both_sides_member(const Cone& cone, const ConeElement& x, const ConeElement& u, double t) {
    return cone.contains(t * x - u) && cone.contains(t * x + u);
}

} // namespace

OrderNorm order_norm_bisection(const Cone& cone, const ConeElement& x, const ConeElement& u,
                               double tol) {
    OrderNorm result;
    if (both_sides_member(cone, x, u, 0.0)) {
        // Only u = 0 sits in K and -K for a pointed cone.
        result.value = 0.0;
        result.converged = true;
        return result;
    }
    // Grow the bracket geometrically from a data-driven starting guess.
    double hi = std::max(1.0, u.inf_norm() / (1.0 + x.inf_norm()));
    int iters = 0;
    while (!both_sides_member(cone, x, u, hi)) {
        hi *= 2.0;
        ++iters;
        if (hi > 1e12) throw NoBracket("order norm bracket exceeded 1e12 on " + cone.name());
    }
    double lo = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (both_sides_member(cone, x, u, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
        ++iters;
        if (iters > 400) break;
    }
    result.value = hi;
    result.converged = (hi - lo) <= tol;
    result.iterations = iters;
    return result;
}

OrderNorm order_norm(const Cone& cone, const ConeElement& x, const ConeElement& u, double tol) {
    if (tol <= 0.0) throw Error("order norm tolerance must be positive");
    if (!cone.strictly_interior(x)) {
        throw NonInterior("order norm base point is not strictly interior to " + cone.name());
    }
    if (auto exact = cone.order_norm_exact(x, u, tol)) {
        return OrderNorm{*exact, true, 0};
    }
    return order_norm_bisection(cone, x, u, tol);
}

SandwichCertificate in_order_interval(const Cone& cone, const ConeElement& e,
                                      const ConeElement& y, double eps) {
    if (!cone.strictly_interior(e)) {
        throw NonInterior("order interval reference point is not strictly interior");
    }
    SandwichCertificate cert;
    cert.epsilon = eps;
    const ConeElement lower_gap = y - (1.0 - eps) * e;
    const ConeElement upper_gap = (1.0 + eps) * e - y;
    cert.lower_slack = cone.slack(lower_gap);
    cert.upper_slack = cone.slack(upper_gap);
    const bool lower_ok = cert.lower_slack >= -kMembershipRelTol * (1.0 + lower_gap.inf_norm());
    const bool upper_ok = cert.upper_slack >= -kMembershipRelTol * (1.0 + upper_gap.inf_norm());
    cert.pass = lower_ok && upper_ok;
    cert.achieved_eps = order_norm(cone, e, y - e).value;
    return cert;
}

} // namespace conesparse
