#pragma once

#include <vector>

#include "solti/matcore.hpp"
#include "solti/sysmodel.hpp"

namespace solti {

/// Time-indexed run of the discrete recursion: states x_0..x_T,
/// outputs y_t = C x_t, and the inputs that produced it.
struct Trajectory {
    std::vector<Vector> states;
    std::vector<Vector> outputs;
    std::vector<Vector> inputs;
};

struct Reconstruction {
    StateSnapshot snapshot;
    double residual_norm = 0.0;
};

// Runs x[t+2] = A0 x[t] + A1 x[t+1] + B u[t] for T steps, producing states
// x_0..x_T. Needs at least T-1 input samples when r >= 1; extras are ignored.
Trajectory simulate_discrete(const SecondOrderSystem& sys, const StateSnapshot& snap,
                             const std::vector<Vector>& inputs, int steps);

// Input-corrected measurement column of length 2n*p:
//   z_0 = y_0, z_1 = y_1,
//   z_k = y_k - C * sum_{j=0..k-2} M_{k-2-j} u_j   for k = 2..2n-1.
// Consumes exactly 2n outputs and, when r >= 1, at least 2n-2 inputs.
Vector measurement_stack(const SecondOrderSystem& sys, const std::vector<Vector>& outputs,
                         const std::vector<Vector>& inputs);

// Minimum-norm solve of O * (x0; x1) = z. Throws UnobservableError when
// rank(O) < 2n and InconsistentDataError when the full-rank residual is
// above threshold.
Reconstruction reconstruct_initial_state(const SecondOrderSystem& sys,
                                         const std::vector<Vector>& outputs,
                                         const std::vector<Vector>& inputs,
                                         double tol_rel = kDefaultRankTol);

// Minimum-norm inputs u_0..u_{n-1} (forward time order) steering the
// position state to x_{n+1} = target. Throws UncontrollableTargetError when
// the target is outside the range of the controllability matrix.
std::vector<Vector> synthesize_control(const SecondOrderSystem& sys, const StateSnapshot& snap,
                                       const Vector& target, double tol_rel = kDefaultRankTol);

}  // namespace solti
