#include "conesparse/caratheodory.hpp"

#include <Eigen/SVD>
#include <limits>

#include "conesparse/order.hpp"

namespace conesparse {

namespace {

/// Right singular vector of the smallest singular value, or empty when the
/// columns are (numerically) independent.
Vec kernel_direction(const Mat& a) {
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-10 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
    const Eigen::Index last = std::min<Eigen::Index>(sv.size(), a.cols()) - 1;
    if (a.rows() >= a.cols()) {
        if (last < 0 || sv[last] > cutoff) return Vec();
    }
    // Wide matrices always have a kernel; thin SVD may not expose it, so fall
    // back to the full decomposition in that case.
    if (a.rows() < a.cols()) {
        Eigen::JacobiSVD<Mat> full(a, Eigen::ComputeFullV);
        return full.matrixV().col(a.cols() - 1);
    }
    return svd.matrixV().col(last);
}

int matrix_rank(const Mat& a) {
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = 1e-10 * std::max(1.0, sv[0]);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv[i] > cutoff ? 1 : 0;
    return r;
}

} // namespace

SparsifierResult caratheodory_reduce(const SparsificationInstance& inst) {
    const int m = inst.size();
    const int dim = inst.cone().dim_ambient();

    Mat flat(dim, m);
    for (int i = 0; i < m; ++i) flat.col(i) = inst.elements()[i].coords();
    const int rank = matrix_rank(flat);

    // Start from the defining representation sum_i 1 * x_i = e.
    std::vector<int> support(m);
    for (int i = 0; i < m; ++i) support[i] = i;
    Vec weights = Vec::Ones(m);

    while (static_cast<int>(support.size()) > rank) {
        Mat cols(dim, support.size());
        for (std::size_t i = 0; i < support.size(); ++i) cols.col(i) = flat.col(support[i]);
        Vec dir = kernel_direction(cols);
        if (dir.size() == 0) break; // columns became independent early

        // Fix the sign so at least one positive entry exists and the walk is
        // deterministic: first nonzero entry positive.
        for (Eigen::Index i = 0; i < dir.size(); ++i) {
            if (std::abs(dir[i]) > 1e-14) {
                if (dir[i] < 0.0) dir = -dir;
                break;
            }
        }

        double theta = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < dir.size(); ++i) {
            if (dir[i] > 1e-14) theta = std::min(theta, weights[i] / dir[i]);
        }
        if (!std::isfinite(theta)) break; // direction never drives a weight down

        // Drop the smallest index whose weight reaches zero.
        int drop = -1;
        for (Eigen::Index i = 0; i < dir.size(); ++i) {
            if (dir[i] > 1e-14 && weights[i] - theta * dir[i] <= 1e-12 * (1.0 + weights[i])) {
                drop = static_cast<int>(i);
                break;
            }
        }
        if (drop < 0) break;

        Vec next(weights.size() - 1);
        std::vector<int> next_support;
        next_support.reserve(support.size() - 1);
        Eigen::Index out = 0;
        for (Eigen::Index i = 0; i < weights.size(); ++i) {
            if (static_cast<int>(i) == drop) continue;
            next[out++] = weights[i] - theta * dir[i];
            next_support.push_back(support[i]);
        }
        weights = std::move(next);
        support = std::move(next_support);
    }

    SparsifierResult result;
    result.bound = rank;
    result.iterations = m - static_cast<long long>(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (weights[i] <= 0.0) continue; // exact zeros can linger after a pivot
        result.support.push_back(inst.original_index(support[i]));
        result.weights.push_back(weights[i]);
    }
    const ConeElement y = result.combination(inst);
    result.achieved_eps = order_norm(inst.cone(), inst.target(), y - inst.target()).value;
    return result;
}

} // namespace conesparse
