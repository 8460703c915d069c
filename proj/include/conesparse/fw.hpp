#pragma once

#include "conesparse/instance.hpp"

namespace conesparse {

/// Simplex rescaling of the instance: w_i = -D phi(e)[x_i] / nu are positive
/// and sum to one, and the atoms xt_i = x_i / w_i all satisfy
/// -D phi(e)[xt_i] = nu, so e is their barycentric combination.
struct FwRescale {
    Vec w;
    std::vector<ConeElement> atoms;
};
FwRescale fw_rescale(const SparsificationInstance& inst);

/// Index minimizing the gradient pairing D^2 phi(e)[z - e, atom_j]; ties
/// within 1e-12 resolve to the smallest index.
int fw_linear_oracle(const Cone& cone, const ConeElement& e, const ConeElement& z,
                     const std::vector<ConeElement>& atoms);

/// Frank-Wolfe sparsifier: minimizes f(z) = 1/2 |z - e|_e^2 over the convex
/// hull of the rescaled atoms with step schedule 2/(t+2), stopping after
/// T = ceil((4 nu / eps)^2) steps or as soon as f(z) <= eps^2/2. Works with
/// any catalogued barrier, including the (k+1) spectral-epigraph variant.
SparsifierResult fw_sparsify(const SparsificationInstance& inst, const EngineOptions& opts = {});

} // namespace conesparse
