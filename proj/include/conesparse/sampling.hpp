#pragma once

#include "conesparse/cone.hpp"
#include "conesparse/rng.hpp"

namespace conesparse {

/// Random strictly interior point of the cone, at a healthy distance from the
/// boundary (for derivative checks and law suites).
ConeElement sample_interior(const Cone& cone, Rng& rng);

/// Random member of the cone built as sum_j c_j g_j with extreme-ray-like
/// generators g_j (coordinate vectors, rank-one matrices, boundary points)
/// and c_j uniform in (0,1).
ConeElement sample_conic(const Cone& cone, Rng& rng);

/// Arbitrary ambient direction with standard normal coordinates (symmetrized
/// where the shape demands it).
ConeElement sample_direction(const Cone& cone, Rng& rng);

} // namespace conesparse
