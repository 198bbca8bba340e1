#include "solti/trajectory.hpp"

#include "solti/analysis.hpp"
#include "solti/recurrences.hpp"

namespace solti {

namespace {

void check_snapshot(const SecondOrderSystem& sys, const StateSnapshot& snap) {
    if (snap.x0.size() != sys.n || snap.x1.size() != sys.n)
        throw DimensionError("state snapshot vectors must have length n = " +
                             std::to_string(sys.n));
    if (!snap.x0.allFinite() || !snap.x1.allFinite())
        throw NonFiniteError("state snapshot has a non-finite entry");
}

}  // namespace

Trajectory simulate_discrete(const SecondOrderSystem& sys, const StateSnapshot& snap,
                             const std::vector<Vector>& inputs, int steps) {
    require_valid(sys);
    if (sys.kind != TimeDomain::discrete)
        throw KindMismatchError("simulate_discrete requires a discrete system");
    check_snapshot(sys, snap);
    if (steps < 1) throw DimensionError("steps must be >= 1");
    const int needed_inputs = sys.r >= 1 ? steps - 1 : 0;
    if (static_cast<int>(inputs.size()) < needed_inputs)
        throw DimensionError("need at least " + std::to_string(needed_inputs) +
                             " input samples, got " + std::to_string(inputs.size()));
    for (int t = 0; t < needed_inputs; ++t)
        if (inputs[static_cast<size_t>(t)].size() != sys.r)
            throw DimensionError("input sample " + std::to_string(t) + " must have length r");

    Trajectory traj;
    traj.states.reserve(static_cast<size_t>(steps) + 1);
    traj.states.push_back(snap.x0);
    traj.states.push_back(snap.x1);
    for (int t = 0; t + 2 <= steps; ++t) {
        Vector next = sys.a0 * traj.states[static_cast<size_t>(t)] +
                      sys.a1 * traj.states[static_cast<size_t>(t) + 1];
        if (sys.r >= 1) next += sys.b * inputs[static_cast<size_t>(t)];
        traj.states.push_back(std::move(next));
    }
    traj.outputs.reserve(traj.states.size());
    for (const auto& x : traj.states) traj.outputs.push_back(sys.c * x);
    traj.inputs.assign(inputs.begin(), inputs.begin() + needed_inputs);
    return traj;
}

Vector measurement_stack(const SecondOrderSystem& sys, const std::vector<Vector>& outputs,
                         const std::vector<Vector>& inputs) {
    require_valid(sys);
    const int n = sys.n;
    const int p = sys.p;
    if (static_cast<int>(outputs.size()) != 2 * n)
        throw DimensionError("measurement stack needs exactly " + std::to_string(2 * n) +
                             " output samples, got " + std::to_string(outputs.size()));
    const int needed_inputs = sys.r >= 1 ? std::max(0, 2 * n - 2) : 0;
    if (static_cast<int>(inputs.size()) < needed_inputs)
        throw DimensionError("measurement stack needs at least " + std::to_string(needed_inputs) +
                             " input samples, got " + std::to_string(inputs.size()));
    for (const auto& y : outputs)
        if (y.size() != p) throw DimensionError("output samples must have length p");
    for (int t = 0; t < needed_inputs; ++t)
        if (inputs[static_cast<size_t>(t)].size() != sys.r)
            throw DimensionError("input samples must have length r");

    MTable mtab;
    if (sys.r >= 1 && 2 * n - 3 >= 0) mtab = m_sequence(sys.a0, sys.a1, sys.b, 2 * n - 3);

    Vector z(static_cast<Eigen::Index>(2 * n) * p);
    z.segment(0, p) = outputs[0];
    z.segment(p, p) = outputs[1];
    for (int k = 2; k < 2 * n; ++k) {
        Vector correction = Vector::Zero(n);
        if (sys.r >= 1)
            for (int j = 0; j + 2 <= k; ++j)
                correction += mtab.m[static_cast<size_t>(k - 2 - j)] * inputs[static_cast<size_t>(j)];
        z.segment(static_cast<Eigen::Index>(k) * p, p) =
            outputs[static_cast<size_t>(k)] - sys.c * correction;
    }
    return z;
}

Reconstruction reconstruct_initial_state(const SecondOrderSystem& sys,
                                         const std::vector<Vector>& outputs,
                                         const std::vector<Vector>& inputs, double tol_rel) {
    const Matrix o = observability_matrix(sys);
    const int computed = rank(o, tol_rel);
    if (computed < 2 * sys.n)
        throw UnobservableError("observability matrix rank " + std::to_string(computed) +
                                    " < required " + std::to_string(2 * sys.n),
                                computed, 2 * sys.n);

    const Vector z = measurement_stack(sys, outputs, inputs);
    auto [x, residual] = solve_min_norm(o, z, tol_rel);
    if (residual > 1e-6 * (1.0 + z.norm()))
        throw InconsistentDataError("measurement stack is not in the range of the "
                                    "observability matrix (residual " +
                                    std::to_string(residual) + ")");
    Reconstruction rec;
    rec.snapshot.x0 = x.head(sys.n);
    rec.snapshot.x1 = x.tail(sys.n);
    rec.residual_norm = residual;
    return rec;
}

std::vector<Vector> synthesize_control(const SecondOrderSystem& sys, const StateSnapshot& snap,
                                       const Vector& target, double tol_rel) {
    require_valid(sys);
    if (sys.kind != TimeDomain::discrete)
        throw KindMismatchError("synthesize_control requires a discrete system");
    if (sys.r < 1) throw NoInputError("steering requires an input channel (r >= 1)");
    check_snapshot(sys, snap);
    if (target.size() != sys.n) throw DimensionError("target must have length n");

    const int n = sys.n;
    const Matrix cm = controllability_matrix(sys);
    const SPTable table = sp_sequence(sys.a0, sys.a1, n - 1);
    const Vector rhs = target - table.s[static_cast<size_t>(n) - 1] * snap.x0 -
                       table.p[static_cast<size_t>(n) - 1] * snap.x1;

    // Kronecker-Capelli consistency: the augmented matrix must not gain rank.
    Matrix augmented(cm.rows(), cm.cols() + 1);
    augmented.leftCols(cm.cols()) = cm;
    augmented.rightCols(1) = rhs;
    const int rank_cm = rank(cm, tol_rel);
    if (rank(augmented, tol_rel) > rank_cm)
        throw UncontrollableTargetError(
            "target is infeasible: controllability matrix rank " + std::to_string(rank_cm) +
            " but the augmented matrix has higher rank");

    // The stacked unknown is (u_{n-1}; ...; u_1; u_0).
    auto [stacked, residual] = solve_min_norm(cm, rhs, tol_rel);
    (void)residual;
    std::vector<Vector> inputs(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        inputs[static_cast<size_t>(n - 1 - k)] = stacked.segment(static_cast<Eigen::Index>(k) * sys.r, sys.r);
    return inputs;
}

}  // namespace solti
