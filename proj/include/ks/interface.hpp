#pragma once

#include "ks/trajectory.hpp"

namespace ks::interface {

/// Sign convention for the interface speed law. `intro` is the zero-flux
/// (material curve) form
///     x' = -d/dx[(m/(m-1))(u+eps)^{m-1}] + (u+eps)^{q-3} u dxv,
/// `section4` flips the sign of both terms. Only `intro` makes the curves
/// material, which the cone-mass identity depends on; `section4` is kept
/// selectable for the disambiguation experiment.
enum class SignConvention { intro, section4 };

/// Speed of the interface ODE at position x for the given state. Spatial
/// values come from linear interpolation of face-centered pressure slopes
/// and cell-centered drift factors. x must lie in the grid interior.
double interface_velocity(const SolverState& state, const Scenario& scenario,
                          double x, SignConvention convention);

/// The two curves bounding the vacuum cone, sampled at frame times.
struct InterfacePair {
    std::vector<double> times;
    std::vector<double> xi;
    std::vector<double> Xi;
    double a = 0.0;
    double b = 0.0;
    SignConvention convention = SignConvention::intro;
    /// False when integration stopped early (curves crossed or escaped the
    /// grid interior); times/xi/Xi then hold the partial result.
    bool complete = true;
    std::string stop_reason;
};

/// Heun (2-stage) integration of both curve ODEs through the trajectory,
/// one step per frame interval. Requires u0 == 0 on [a, b].
InterfacePair integrate_interfaces(const Trajectory& traj, double a, double b,
                                   SignConvention convention);

/// Integral of (u + eps) over [xi(t_k), Xi(t_k)], with fractional end cells
/// weighted by their covered length.
double cone_mass(const Trajectory& traj, const InterfacePair& pair, int frame_index);

struct VacuumReport {
    std::vector<double> times;
    /// max of u over the open interval (xi + margin, Xi - margin).
    std::vector<double> interior_max;
    std::vector<double> interior_integral;
    double margin = 0.0;
};

/// Per-frame interior sup and integral of u between the curves, with the
/// stated margin (in cell widths) trimmed off both ends.
VacuumReport vacuum_check(const Trajectory& traj, const InterfacePair& pair,
                          double margin_cells = 2.0);

} // namespace ks::interface
