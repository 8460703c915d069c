#include "conesparse/fw.hpp"

#include <cmath>
#include <map>

#include "conesparse/order.hpp"

namespace conesparse {

FwRescale fw_rescale(const SparsificationInstance& inst) {
    const auto& cone = inst.cone();
    const double nu = cone.nu();
    const ConeElement neg_grad = -1.0 * cone.gradient(inst.target());

    FwRescale r;
    r.w = Vec(inst.size());
    r.atoms.reserve(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        const double wi = neg_grad.dot(inst.elements()[i]) / nu;
        if (wi <= 1e-14) {
            throw DegenerateElement("rescale weight " + std::to_string(wi) + " for element " +
                                    std::to_string(inst.original_index(i)));
        }
        r.w[i] = wi;
        r.atoms.push_back((1.0 / wi) * inst.elements()[i]);
    }
    return r;
}

int fw_linear_oracle(const Cone& cone, const ConeElement& e, const ConeElement& z,
                     const std::vector<ConeElement>& atoms) {
    const ConeElement pairing = cone.hess_apply(e, z - e);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& atom : atoms) best = std::min(best, pairing.dot(atom));
    const double tie = 1e-12 * (1.0 + std::abs(best));
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (pairing.dot(atoms[j]) <= best + tie) return static_cast<int>(j);
    }
    return 0;
}

SparsifierResult fw_sparsify(const SparsificationInstance& inst, const EngineOptions&) {
    const auto& cone = inst.cone();
    const ConeElement& e = inst.target();
    const double nu = cone.nu();
    const double eps = inst.epsilon();
    const long long T = static_cast<long long>(std::ceil(std::pow(4.0 * nu / eps, 2)));

    const FwRescale resc = fw_rescale(inst);
    const auto objective = [&](const ConeElement& z) {
        const ConeElement r = z - e;
        return 0.5 * cone.hess_apply(e, r).dot(r);
    };

    // Vertex start: the atom with the smallest objective keeps the support
    // accounting exact (t steps touch at most t+1 atoms).
    int j0 = 0;
    double f0 = std::numeric_limits<double>::infinity();
    for (int j = 0; j < inst.size(); ++j) {
        const double fj = objective(resc.atoms[j]);
        if (fj < f0 - 1e-15) {
            f0 = fj;
            j0 = j;
        }
    }

    ConeElement z = resc.atoms[j0];
    std::map<int, double> convex; // atom index -> convex weight
    convex[j0] = 1.0;

    SparsifierResult result;
    result.bound = T;
    result.trace.push_back({0, inst.original_index(j0), 1.0,
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(), f0});

    long long t = 0;
    double f_t = f0;
    while (t < T && f_t > eps * eps / 2.0) {
        const int v = fw_linear_oracle(cone, e, z, resc.atoms);
        const double gamma = 2.0 / static_cast<double>(t + 2);
        z = (1.0 - gamma) * z + gamma * resc.atoms[v];
        for (auto& [idx, c] : convex) c *= 1.0 - gamma;
        convex[v] += gamma;
        ++t;
        f_t = objective(z);
        result.trace.push_back({t, inst.original_index(v), gamma,
                                std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN(), f_t});
    }

    for (const auto& [idx, c] : convex) {
        if (c <= 0.0) continue;
        result.support.push_back(inst.original_index(idx));
        result.weights.push_back(c / resc.w[idx]);
    }
    result.iterations = t;
    const ConeElement y = result.combination(inst);
    result.achieved_eps = order_norm(cone, e, y - e).value;
    return result;
}

} // namespace conesparse
