#include "ks/pme.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ks::pme {

BarenblattProfile make_profile(double m, double mass) {
    if (!(m > 1.0)) throw std::invalid_argument("make_profile: m must be > 1");
    if (!(mass > 0.0)) throw std::invalid_argument("make_profile: mass must be > 0");
    BarenblattProfile p;
    p.m = m;
    p.mass = mass;
    p.alpha = 1.0 / (m + 1.0);
    p.kappa = (m - 1.0) / (2.0 * m * (m + 1.0));
    // mass = C^{1/(m-1) + 1/2} kappa^{-1/2} B with
    // B = int_{-1}^{1} (1 - z^2)^{1/(m-1)} dz = sqrt(pi) G(p+1)/G(p+3/2).
    const double pw = 1.0 / (m - 1.0);
    const double B = std::sqrt(std::numbers::pi) * std::tgamma(pw + 1.0) /
                     std::tgamma(pw + 1.5);
    p.C = std::pow(mass * std::sqrt(p.kappa) / B, 2.0 * (m - 1.0) / (m + 1.0));
    return p;
}

double barenblatt_value(const BarenblattProfile& p, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("barenblatt_value: t must be > 0");
    const double ta = std::pow(t, -p.alpha);
    const double cap = p.C - p.kappa * x * x * ta * ta;
    if (cap <= 0.0) return 0.0;
    return ta * std::pow(cap, 1.0 / (p.m - 1.0));
}

double support_edge(const BarenblattProfile& p, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("support_edge: t must be > 0");
    return std::sqrt(p.C / p.kappa) * std::pow(t, p.alpha);
}

interface::InterfacePair knerr_interface(const Trajectory& traj, double a, double b) {
    if (traj.scenario.drift_enabled)
        throw std::invalid_argument("knerr_interface: trajectory must be drift-free");
    return interface::integrate_interfaces(traj, a, b,
                                           interface::SignConvention::intro);
}

ErrorCurve pme_error(const Trajectory& traj, const BarenblattProfile& p,
                     double t0_offset) {
    const auto& sc = traj.scenario;
    if (sc.drift_enabled)
        throw std::invalid_argument("pme_error: trajectory must be drift-free");
    const auto* init = std::get_if<BarenblattData>(&sc.u0);
    if (!init || init->t0 != t0_offset || init->mass != p.mass || sc.m != p.m)
        throw std::invalid_argument("pme_error: scenario does not match the profile");

    ErrorCurve curve;
    const auto& g = sc.grid;
    for (const auto& frame : traj.frames) {
        const double t_profile = t0_offset + frame.t;
        double l1 = 0.0;
        double edge_num = 0.0;
        for (int i = 0; i < g.n_cells; ++i) {
            const double x = g.center(i);
            l1 += g.dx * std::abs(frame.u.values(i) - barenblatt_value(p, x, t_profile));
            if (frame.u.values(i) > support_threshold)
                edge_num = std::max(edge_num, std::abs(x) + 0.5 * g.dx);
        }
        curve.t.push_back(frame.t);
        curve.l1_error.push_back(l1);
        curve.support_edge_numeric.push_back(edge_num);
        curve.support_edge_exact.push_back(support_edge(p, t_profile));
    }
    return curve;
}

} // namespace ks::pme
