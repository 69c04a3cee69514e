#pragma once

#include "ks/interface.hpp"
#include "ks/trajectory.hpp"

namespace ks::pme {

/// Self-similar source solution of dU/dt = d2(U^m)/dx2:
///   V(x, t) = t^{-alpha} (C - kappa x^2 t^{-2 alpha})_+^{1/(m-1)},
/// alpha = 1/(m+1), kappa = (m-1)/(2m(m+1)), C fixed by the total mass.
struct BarenblattProfile {
    double m = 2.0;
    double mass = 1.0;
    double alpha = 0.0;
    double kappa = 0.0;
    double C = 0.0;
};

BarenblattProfile make_profile(double m, double mass);

/// Profile value; t must be > 0.
double barenblatt_value(const BarenblattProfile& p, double x, double t);

/// Support edge sqrt(C/kappa) t^{alpha}.
double support_edge(const BarenblattProfile& p, double t);

/// Integrates the drift-free interface law
///   x' = -d/dx[(m/(m-1)) (u+eps)^{m-1}](x(t), t)
/// through a drift-disabled trajectory. Same machinery as
/// interface::integrate_interfaces with the drift term zeroed.
interface::InterfacePair knerr_interface(const Trajectory& traj, double a, double b);

struct ErrorCurve {
    std::vector<double> t;
    std::vector<double> l1_error;
    std::vector<double> support_edge_numeric;
    std::vector<double> support_edge_exact;
};

/// Per-frame L1 distance between the numerical u and the profile at time
/// t0_offset + t, plus numerical/exact support edges. Requires a
/// drift-disabled run started from barenblatt(t0_offset, mass).
ErrorCurve pme_error(const Trajectory& traj, const BarenblattProfile& p,
                     double t0_offset);

} // namespace ks::pme
