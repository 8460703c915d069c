#pragma once

#include "conesparse/instance.hpp"
#include "conesparse/order.hpp"

namespace conesparse {

/// Covering / packing pair over the nonnegative orthant at desk scale:
///   cover(b,c) = inf  <b,y>  s.t.  sum_i y_i a_i >= c,  y >= 0
///   pack(b,c)  = sup  <c,x>  s.t.  <a_i,x> <= b_i,      x >= 0
/// Sizes are capped so exact enumeration of basic solutions stays cheap:
/// d <= 8 with k <= 10, or d <= 4 with k <= 64 (supports of optimal covers
/// have at most d entries, so only the d-sized bases need enumerating).
struct PackCoverInstance {
    ConeHandle cone; ///< Orthant(d)
    std::vector<ConeElement> a;
    Vec b;
    ConeElement c;

    PackCoverInstance(ConeHandle cone, std::vector<ConeElement> a, Vec b, ConeElement c);
    int d() const { return cone->dim_ambient(); }
    int k() const { return static_cast<int>(a.size()); }
};

struct LpSolution {
    double value = 0.0;
    Vec point;
};

/// Exact optima via enumeration of basic solutions, lexicographically-least
/// optimal basis on ties. Throw Infeasible / Unbounded.
LpSolution solve_cover(const PackCoverInstance& inst);
LpSolution solve_pack(const PackCoverInstance& inst);

/// Solves both sides and checks |cover - pack| <= 1e-7 (1 + |cover|).
struct DualityReport {
    LpSolution cover;
    LpSolution pack;
    double gap = 0.0;
    bool strong_duality = false;
};
DualityReport solve_both(const PackCoverInstance& inst);

/// Packing value under a reweighted cost c' with (1-eps) c <= c' <= (1+eps) c:
/// checks the premise (PremiseFailed otherwise) and that
/// (1-eps) pack(b,c) <= pack(b,c') <= (1+eps) pack(b,c).
struct PackSandwichReport {
    double pack_original = 0.0;
    double pack_perturbed = 0.0;
    SandwichCertificate premise;
    double lower_margin = 0.0; ///< pack' - (1-eps) pack
    double upper_margin = 0.0; ///< (1+eps) pack - pack'
    bool pass = false;
};
PackSandwichReport pack_cost_sandwich(const PackCoverInstance& inst, const ConeElement& c_prime,
                                      double eps);

/// Sparse near-optimal covering solution: sparsifies {y_i a_i} at the optimal
/// y, scales the support weights by 1/(1-eps), and checks feasibility, the
/// support bound ceil(4 d / eps^2), and
/// (1-eps)/(1+eps) <b,y'> <= cover(b,c) <= <b,y'>.
struct SparseCoverReport {
    Vec y_prime;
    double cover_value = 0.0;
    double y_prime_value = 0.0; ///< <b, y'>
    int support = 0;
    long long bound = 0;
    bool feasible = false;
    double lower_margin = 0.0; ///< cover - (1-eps)/(1+eps) <b,y'>
    double upper_margin = 0.0; ///< <b,y'> - cover
    bool pass = false;
};
SparseCoverReport sparse_cover_solution(const PackCoverInstance& inst, double eps,
                                        const EngineOptions& opts = {});

} // namespace conesparse
