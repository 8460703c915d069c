#include "conesparse/packcover.hpp"

#include <Eigen/LU>
#include <cmath>

#include "conesparse/bss.hpp"

namespace conesparse {

namespace {

constexpr double kLpFeasTol = 1e-9;

/// Lexicographic enumeration of r-subsets of {0..n-1}.
bool next_combination(std::vector<int>& idx, int n) {
    const int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int r) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    return idx;
}

} // namespace

PackCoverInstance::PackCoverInstance(ConeHandle cone_in, std::vector<ConeElement> a_in, Vec b_in,
                                     ConeElement c_in)
    : cone(std::move(cone_in)), a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)) {
    if (cone->kind() != ConeKind::Orthant) {
        throw InvalidInstance("packing/covering instances are supported over the orthant only");
    }
    if (a.empty()) throw InvalidInstance("packing/covering instance needs at least one a_i");
    if (b.size() != static_cast<Eigen::Index>(a.size())) {
        throw InvalidInstance("b length does not match the number of a_i");
    }
    if (b.minCoeff() <= 0.0) throw InvalidInstance("b must be strictly positive");
    cone->validate(c);
    if (!cone->strictly_interior(c)) throw NonInterior("cost c must be strictly interior");
    for (const auto& ai : a) {
        cone->validate(ai);
        if (!cone->contains(ai)) throw InvalidInstance("some a_i is outside the orthant");
    }
    const int dd = d();
    const int kk = k();
    if (!((dd <= 8 && kk <= 10) || (dd <= 4 && kk <= 64))) {
        throw InvalidInstance("instance too large for exact enumeration (need d<=8,k<=10 or d<=4,k<=64)");
    }
}

LpSolution solve_cover(const PackCoverInstance& inst) {
    const int d = inst.d();
    const int k = inst.k();
    Mat a(d, k);
    for (int i = 0; i < k; ++i) a.col(i) = inst.a[i].coords();
    const Vec c = inst.c.coords();
    const double scale = 1.0 + c.cwiseAbs().maxCoeff();

    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    Vec best_y;

    const int rmax = std::min(d, k);
    for (int r = 0; r <= rmax; ++r) {
        auto support = first_combination(r);
        do {
            auto rows = first_combination(r);
            do {
                Mat sys(r, r);
                Vec rhs(r);
                for (int i = 0; i < r; ++i) {
                    rhs[i] = c[rows[i]];
                    for (int j = 0; j < r; ++j) sys(i, j) = a(rows[i], support[j]);
                }
                Vec ys;
                if (r > 0) {
                    Eigen::FullPivLU<Mat> lu(sys);
                    if (!lu.isInvertible()) continue;
                    ys = lu.solve(rhs);
                    if (ys.minCoeff() < -kLpFeasTol * scale) continue;
                }
                Vec y = Vec::Zero(k);
                for (int j = 0; j < r; ++j) y[support[j]] = std::max(0.0, ys[j]);
                if (((a * y - c).minCoeff()) < -kLpFeasTol * scale) continue;
                const double value = inst.b.dot(y);
                if (!found || value < best - 1e-12 * (1.0 + std::abs(best))) {
                    found = true;
                    best = value;
                    best_y = y;
                }
            } while (next_combination(rows, d));
        } while (next_combination(support, k));
    }
    if (!found) throw Infeasible("covering program has no feasible point");
    return {best, best_y};
}

LpSolution solve_pack(const PackCoverInstance& inst) {
    const int d = inst.d();
    const int k = inst.k();
    Mat a(d, k);
    for (int i = 0; i < k; ++i) a.col(i) = inst.a[i].coords();
    const Vec c = inst.c.coords();
    const double scale = 1.0 + inst.b.cwiseAbs().maxCoeff();

    // Recession directions are supported on coordinates untouched by every a_i.
    for (int j = 0; j < d; ++j) {
        if (a.row(j).maxCoeff() <= 0.0 && c[j] > 0.0) {
            throw Unbounded("packing objective is unbounded along coordinate " + std::to_string(j));
        }
    }

    double best = 0.0; // x = 0 is always feasible (b > 0)
    Vec best_x = Vec::Zero(d);

    const int rmax = std::min(d, k);
    for (int r = 1; r <= rmax; ++r) {
        auto support = first_combination(r);
        do {
            auto rows = first_combination(r);
            do {
                Mat sys(r, r);
                Vec rhs(r);
                for (int i = 0; i < r; ++i) {
                    rhs[i] = inst.b[rows[i]];
                    for (int j = 0; j < r; ++j) sys(i, j) = a(support[j], rows[i]);
                }
                Eigen::FullPivLU<Mat> lu(sys);
                if (!lu.isInvertible()) continue;
                const Vec xs = lu.solve(rhs);
                if (xs.minCoeff() < -kLpFeasTol * scale) continue;
                Vec x = Vec::Zero(d);
                for (int j = 0; j < r; ++j) x[support[j]] = std::max(0.0, xs[j]);
                if ((a.transpose() * x - inst.b).maxCoeff() > kLpFeasTol * scale) continue;
                const double value = c.dot(x);
                if (value > best + 1e-12 * (1.0 + std::abs(best))) {
                    best = value;
                    best_x = x;
                }
            } while (next_combination(rows, k));
        } while (next_combination(support, d));
    }
    return {best, best_x};
}

DualityReport solve_both(const PackCoverInstance& inst) {
    DualityReport rep;
    rep.cover = solve_cover(inst);
    rep.pack = solve_pack(inst);
    rep.gap = std::abs(rep.cover.value - rep.pack.value);
    rep.strong_duality = rep.gap <= 1e-7 * (1.0 + std::abs(rep.cover.value));
    return rep;
}

PackSandwichReport pack_cost_sandwich(const PackCoverInstance& inst, const ConeElement& c_prime,
                                      double eps) {
    PackSandwichReport rep;
    rep.premise = in_order_interval(*inst.cone, inst.c, c_prime, eps);
    if (!rep.premise.pass) {
        throw PremiseFailed("perturbed cost is not within the (1 +/- eps) order interval of c");
    }
    rep.pack_original = solve_pack(inst).value;
    PackCoverInstance perturbed(inst.cone, inst.a, inst.b, c_prime);
    rep.pack_perturbed = solve_pack(perturbed).value;

    const double tol = 1e-9 * (1.0 + std::abs(rep.pack_original));
    rep.lower_margin = rep.pack_perturbed - (1.0 - eps) * rep.pack_original;
    rep.upper_margin = (1.0 + eps) * rep.pack_original - rep.pack_perturbed;
    rep.pass = rep.lower_margin >= -tol && rep.upper_margin >= -tol;
    return rep;
}

SparseCoverReport sparse_cover_solution(const PackCoverInstance& inst, double eps,
                                        const EngineOptions& opts) {
    const LpSolution opt = solve_cover(inst);
    const int k = inst.k();

    std::vector<ConeElement> scaled;
    std::vector<int> owner;
    for (int i = 0; i < k; ++i) {
        if (opt.point[i] > 0.0) {
            scaled.push_back(opt.point[i] * inst.a[i]);
            owner.push_back(i);
        }
    }
    SparsificationInstance sp(inst.cone, std::move(scaled), eps);
    const SparsifierResult res = bss_sparsify(sp, opts);

    SparseCoverReport rep;
    rep.cover_value = opt.value;
    rep.bound = res.bound;
    rep.y_prime = Vec::Zero(k);
    for (std::size_t s = 0; s < res.support.size(); ++s) {
        const int i = owner[res.support[s]];
        rep.y_prime[i] = res.weights[s] * opt.point[i] / (1.0 - eps);
    }
    rep.support = static_cast<int>(res.support.size());
    rep.y_prime_value = inst.b.dot(rep.y_prime);

    ConeElement covered = ConeElement::zeros(inst.cone->shape());
    for (int i = 0; i < k; ++i) covered += rep.y_prime[i] * inst.a[i];
    const ConeElement gap = covered - inst.c;
    rep.feasible = inst.cone->slack(gap) >= -kLpFeasTol * (1.0 + gap.inf_norm());

    const double tol = 1e-9 * (1.0 + std::abs(rep.cover_value));
    rep.lower_margin = rep.cover_value - (1.0 - eps) / (1.0 + eps) * rep.y_prime_value;
    rep.upper_margin = rep.y_prime_value - rep.cover_value;
    rep.pass = rep.feasible && rep.lower_margin >= -tol && rep.upper_margin >= -tol &&
               rep.support <= rep.bound;
    return rep;
}

} // namespace conesparse
