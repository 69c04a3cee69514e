#pragma once

#include "ks/trajectory.hpp"

namespace ks::stepper {

/// Face-centered flux; entries 0 and n_cells are pinned to zero
/// (no-flux truncation boundary).
struct FluxField {
    Grid1D grid;
    Eigen::ArrayXd face_values;
};

/// F_{i+1/2} = [(u_{i+1}+eps)^m - (u_i+eps)^m]/dx - M_{i+1/2} (dxv)_{i+1/2},
/// with the drift mobility M = (u_up+eps)^{q-2} u_up taken from the cell
/// upwind of the face-averaged dxv. The drift term is dropped when
/// drift_enabled is off.
FluxField compute_flux(const SolverState& state, const Scenario& scenario);

/// cfl_sigma * min( dx^2 / (2 m (max u + eps)^{m-1}),
///                  dx / (max drift speed + 1e-30) ),
/// drift speed = (max u + eps)^{q-2} * max|dxv|.
double stable_dt(const SolverState& state, const Scenario& scenario);

/// One conservative explicit Euler update; v and dxv are refreshed from the
/// updated u. Negative cell values above -1e-13 are clamped to zero and the
/// clamped mass is accumulated into *clamped (when given); anything below
/// that, a non-finite value, or dt above stable_dt aborts.
SolverState step(const SolverState& state, const Scenario& scenario, double dt,
                 double* clamped = nullptr);

/// Builds the initial state (u sampled, v and dxv solved).
SolverState initial_state(const Scenario& scenario);

/// Advances to t_end with frames at n_frames even intervals, capping dt so
/// every frame time is hit exactly. On a numerical failure the partial
/// trajectory is returned with the abort reason recorded.
Trajectory run(const Scenario& scenario);

} // namespace ks::stepper
