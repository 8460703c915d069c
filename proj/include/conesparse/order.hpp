#pragma once

#include "conesparse/element.hpp"

namespace conesparse {

class Cone;

/// Result of a spectral-order-norm evaluation |u|_x = inf{t : -tx <=_K u <=_K tx}.
struct OrderNorm {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// |u|_x via the cone's analytic formula when it has one, else bisection on
/// the membership oracle with bracket [0, t_hi], t_hi grown by factor 2 and
/// capped at 1e12 (NoBracket beyond). Throws NonInterior unless x passes the
/// strict-interior test.
OrderNorm order_norm(const Cone& cone, const ConeElement& x, const ConeElement& u,
                     double tol = 1e-10);

/// Pure-bisection evaluation, ignoring analytic fast paths. Exposed so the
/// fast paths can be checked against it.
OrderNorm order_norm_bisection(const Cone& cone, const ConeElement& x, const ConeElement& u,
                               double tol);

/// Verified margins for (1-eps) e <=_K y <=_K (1+eps) e.
struct SandwichCertificate {
    bool pass = false;
    double lower_slack = 0.0; ///< membership slack of y - (1-eps) e
    double upper_slack = 0.0; ///< membership slack of (1+eps) e - y
    double achieved_eps = 0.0; ///< |y - e|_e
    double epsilon = 0.0;
};

SandwichCertificate in_order_interval(const Cone& cone, const ConeElement& e,
                                      const ConeElement& y, double eps);

} // namespace conesparse
