#pragma once

#include <limits>
#include <vector>

#include "conesparse/cone.hpp"

namespace conesparse {

/// Elements x_1..x_m of a cone together with their sum e and a tolerance.
/// Construction validates the data: the target must match the element sum,
/// sit strictly inside the cone, and every element must pass the membership
/// test. Elements that are numerically zero (|x_i|_inf <= 1e-12 |e|_inf) are
/// dropped; `original_index` maps kept positions back to input positions, and
/// all reported supports use input positions.
class SparsificationInstance {
public:
    SparsificationInstance(ConeHandle cone, std::vector<ConeElement> elements, double epsilon);
    SparsificationInstance(ConeHandle cone, std::vector<ConeElement> elements, double epsilon,
                           ConeElement target);

    const Cone& cone() const { return *cone_; }
    const ConeHandle& cone_handle() const { return cone_; }
    const std::vector<ConeElement>& elements() const { return elements_; }
    const ConeElement& target() const { return target_; }
    double epsilon() const { return epsilon_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int input_size() const { return input_size_; }
    int original_index(int kept) const { return original_index_[kept]; }

    /// Kept position of an input index, or -1 when it was dropped as zero.
    int kept_index(int original) const;

private:
    void finish(std::vector<ConeElement> all);

    ConeHandle cone_;
    std::vector<ConeElement> elements_;
    std::vector<int> original_index_;
    ConeElement target_;
    double epsilon_ = 0.0;
    int input_size_ = 0;
    bool target_given_ = false;
};

/// One row of an engine trace. Rows from the barrier-greedy engine fill the
/// shift/potential fields; rows from the Frank-Wolfe engine fill `objective`.
/// Unused fields stay NaN.
struct TraceRow {
    long long t = 0;
    int chosen = -1;
    double step = std::numeric_limits<double>::quiet_NaN();
    double u_shift = std::numeric_limits<double>::quiet_NaN();
    double ell_shift = std::numeric_limits<double>::quiet_NaN();
    double phi_upper = std::numeric_limits<double>::quiet_NaN();
    double phi_lower = std::numeric_limits<double>::quiet_NaN();
    double objective = std::numeric_limits<double>::quiet_NaN();
};

struct SparsifierResult {
    std::vector<int> support;     ///< input positions, ascending
    std::vector<double> weights;  ///< parallel to support, all positive
    double achieved_eps = 0.0;    ///< |sum_i lambda_i x_i - e|_e, recomputed
    long long bound = 0;          ///< applicable cardinality bound
    long long iterations = 0;     ///< steps actually taken
    std::vector<TraceRow> trace;

    /// sum of lambda_i x_i over the support.
    ConeElement combination(const SparsificationInstance& inst) const;
};

struct EngineOptions {
    int threads = 1;
};

} // namespace conesparse
