#pragma once

#include <stdexcept>
#include <string>

namespace conesparse {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point required to be strictly inside the cone is not.
struct NonInterior : Error {
    using Error::Error;
};

/// Geometric bracket growth exceeded its cap without reaching feasibility.
struct NoBracket : Error {
    using Error::Error;
};

/// The instance invariant sum(x_i) = e does not hold.
struct Inconsistent : Error {
    using Error::Error;
};

/// Instance construction failed (shape mismatch, element outside the cone,
/// epsilon out of range, ...).
struct InvalidInstance : Error {
    using Error::Error;
};

/// The quadratic form D^2 phi(e)[u,u] came out negative; the barrier
/// implementation is broken.
struct NegativeQuadraticForm : Error {
    using Error::Error;
};

/// No candidate satisfied L[x_j] >= U[x_j] > 0, or an interior-slack or
/// monotonicity guard tripped. The message carries the iteration diagnostics.
struct StepNotFound : Error {
    using Error::Error;
};

/// The cone's barrier is not flagged pairwise-self-concordant, so the
/// greedy barrier engine refuses to run on it.
struct NonPairwiseBarrier : Error {
    using Error::Error;
};

/// A rescale weight collapsed to zero; the element should have been dropped.
struct DegenerateElement : Error {
    using Error::Error;
};

/// A sparsifier result has nonpositive weights or out-of-range indices.
struct BadResult : Error {
    using Error::Error;
};

/// The graph is not connected, so the reduced target is singular.
struct Disconnected : Error {
    using Error::Error;
};

struct Infeasible : Error {
    using Error::Error;
};

struct Unbounded : Error {
    using Error::Error;
};

/// A required premise of a derived check does not hold (e.g. the perturbed
/// cost is not within the requested order interval).
struct PremiseFailed : Error {
    using Error::Error;
};

/// Malformed JSON / graph / CLI input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace conesparse
