#pragma once

#include "conesparse/instance.hpp"

namespace conesparse {

/// Upper and lower potential functions
///   Phi_upper(x; u)  = -D phi(u e - x)[e]
///   Phi_lower(x; l)  = -D phi(x - l e)[e]
/// which reduce to tr((uI-X)^-1) and tr((X-lI)^-1) on the PSD cone with e = I.
/// Throw NonInterior when the shifted point leaves the barrier domain.
double barrier_upper(const Cone& cone, const ConeElement& e, const ConeElement& x, double u_shift);
double barrier_lower(const Cone& cone, const ConeElement& e, const ConeElement& x, double ell_shift);

/// Schedule constants of the greedy engine for a given barrier parameter.
struct BssSchedule {
    long long T = 0;     ///< ceil(4 nu / eps^2)
    double delta_u = 0.0; ///< 1 + eps/2
    double delta_l = 0.0; ///< 1 - eps/2
    double u0 = 0.0;      ///< 2 nu / eps
    double l0 = 0.0;      ///< -2 nu / eps
};
BssSchedule bss_schedule(double nu, double eps);

/// Engine state after t completed iterations: z = sum_i y_i x_i, current
/// shifts, and the potentials at the current shifts.
struct BssState {
    long long t = 0;
    ConeElement z;
    Vec y;
    double u = 0.0;
    double ell = 0.0;
    double phi_upper = 0.0;
    double phi_lower = 0.0;
};

BssState bss_initial_state(const SparsificationInstance& inst);

/// Per-candidate step functionals at the shifted points u' e - z and z - l' e
/// (u' = u + delta_u, l' = l + delta_l):
///   U[x_j] = D2(u'e-z)[x_j,e] / (delta_u D2(u'e-z)[e,e]) - D(u'e-z)[x_j]
///   L[x_j] = D2(z-l'e)[x_j,e] / (delta_l D2(z-l'e)[e,e]) + D(z-l'e)[x_j]
/// The chosen candidate maximizes L - U among those with U > 0 (smallest
/// index on ties) and the step is alpha = 2 / (L + U), which gives
/// alpha U <= 1 <= alpha L. Throws StepNotFound when max(L - U) < -1e-9.
struct StepFunctionals {
    Vec U_vals;
    Vec L_vals;
    int chosen_j = -1;
    double alpha = 0.0;
};
StepFunctionals step_functionals(const SparsificationInstance& inst, const BssState& state,
                                 int threads = 1);

/// Generalized barrier-greedy sparsifier: T = ceil(4 nu / eps^2) iterations,
/// each adding alpha x_j while keeping both shifted potentials non-increasing;
/// returns lambda = y_T / T on the touched support. The trace carries one row
/// per iteration plus a t = 0 row with the initial potentials (both eps/2).
SparsifierResult bss_sparsify(const SparsificationInstance& inst, const EngineOptions& opts = {});

} // namespace conesparse
