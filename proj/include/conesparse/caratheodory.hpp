#pragma once

#include "conesparse/instance.hpp"

namespace conesparse {

/// Exact support reduction: rewrites sum_i x_i = e as sum_{i in S} lambda_i x_i
/// with |S| bounded by the dimension of span{x_i}, by repeatedly walking the
/// weight vector along a null-space direction of the supported columns until a
/// weight hits zero. The reported bound is the rank of the flattened element
/// matrix.
SparsifierResult caratheodory_reduce(const SparsificationInstance& inst);

} // namespace conesparse
