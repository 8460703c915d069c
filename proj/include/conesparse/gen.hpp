#pragma once

#include <cstdint>

#include "conesparse/graph.hpp"
#include "conesparse/instance.hpp"
#include "conesparse/packcover.hpp"

namespace conesparse {

/// Seeded instance generators shared by the benchmark harness and the tests.
/// All draws go through the portable Rng, so a (generator, seed) pair pins the
/// instance exactly.

/// m random rank-one PSD atoms whitened so they sum to the identity.
SparsificationInstance gen_psd_rank1(int d, int m, double eps, std::uint64_t seed);

/// m positive vectors with entries uniform in (0.1, 1); target is their sum.
SparsificationInstance gen_orthant_random(int n, int m, double eps, std::uint64_t seed);

/// m second-order-cone members with a positive interior margin each.
SparsificationInstance gen_soc_random(int n, int m, double eps, std::uint64_t seed);

/// m spectral-epigraph members (X_i, sigma_max(X_i) + margin).
SparsificationInstance gen_spectral_random(int n, int k, int m, double eps, std::uint64_t seed,
                                           SpectralBarrier variant = SpectralBarrier::Hyperbolic);

WeightedGraph gen_complete_graph(int n);

/// Connected random graph: a random spanning tree plus `extra_edges` distinct
/// random edges, unit weights perturbed uniformly in (0.5, 1.5).
WeightedGraph gen_random_graph(int n, int extra_edges, std::uint64_t seed);

/// Random covering instance with entries that keep cover(b,c) finite.
PackCoverInstance gen_packcover(int d, int k, std::uint64_t seed);

} // namespace conesparse
