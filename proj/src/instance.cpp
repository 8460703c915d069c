#include "conesparse/instance.hpp"

#include <algorithm>

namespace conesparse {

SparsificationInstance::SparsificationInstance(ConeHandle cone, std::vector<ConeElement> elements,
                                               double epsilon)
    : cone_(std::move(cone)), epsilon_(epsilon) {
    if (elements.empty()) throw InvalidInstance("instance needs at least one element");
    ConeElement sum = ConeElement::zeros(cone_->shape());
    for (const auto& x : elements) {
        cone_->validate(x);
        sum += x;
    }
    target_ = sum;
    finish(std::move(elements));
}

SparsificationInstance::SparsificationInstance(ConeHandle cone, std::vector<ConeElement> elements,
                                               double epsilon, ConeElement target)
    : cone_(std::move(cone)), target_(std::move(target)), epsilon_(epsilon), target_given_(true) {
    if (elements.empty()) throw InvalidInstance("instance needs at least one element");
    cone_->validate(target_);
    for (const auto& x : elements) cone_->validate(x);
    finish(std::move(elements));
}

void SparsificationInstance::finish(std::vector<ConeElement> all) {
    if (!(epsilon_ > 0.0 && epsilon_ < 1.0)) {
        throw InvalidInstance("epsilon must lie in (0,1), got " + std::to_string(epsilon_));
    }
    input_size_ = static_cast<int>(all.size());

    ConeElement sum = ConeElement::zeros(cone_->shape());
    for (const auto& x : all) sum += x;
    const double mismatch = (sum - target_).inf_norm();
    if (mismatch > 1e-9 * (1.0 + target_.inf_norm())) {
        throw Inconsistent("element sum deviates from target by " + std::to_string(mismatch));
    }
    if (!cone_->strictly_interior(target_)) {
        throw NonInterior("instance target is not strictly interior to " + cone_->name());
    }

    const double zero_cut = 1e-12 * target_.inf_norm();
    for (int i = 0; i < input_size_; ++i) {
        if (!cone_->contains(all[i])) {
            throw InvalidInstance("element " + std::to_string(i) + " is outside " + cone_->name() +
                                  " (slack " + std::to_string(cone_->slack(all[i])) + ")");
        }
        if (all[i].inf_norm() <= zero_cut) continue; // dropped as zero
        original_index_.push_back(i);
        elements_.push_back(std::move(all[i]));
    }
    if (elements_.empty()) throw InvalidInstance("all elements were dropped as zero");
}

int SparsificationInstance::kept_index(int original) const {
    const auto it = std::lower_bound(original_index_.begin(), original_index_.end(), original);
    if (it == original_index_.end() || *it != original) return -1;
    return static_cast<int>(it - original_index_.begin());
}

ConeElement SparsifierResult::combination(const SparsificationInstance& inst) const {
    ConeElement y = ConeElement::zeros(inst.cone().shape());
    for (std::size_t i = 0; i < support.size(); ++i) {
        const int kept = inst.kept_index(support[i]);
        if (kept < 0) throw BadResult("support index " + std::to_string(support[i]) +
                                      " does not name an instance element");
        y += weights[i] * inst.elements()[kept];
    }
    return y;
}

} // namespace conesparse
