#include "ks/interface.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ks::interface {

namespace {

/// Per-frame speed-law data: pressure slopes at interior faces and the
/// drift factor (u+eps)^{q-3} u dxv at cell centers.
struct SpeedLawData {
    Grid1D grid;
    Eigen::ArrayXd face_slope; // index f = 1..n-1 (entries 0 and n unused)
    Eigen::ArrayXd drift;      // per cell; zero when drift is disabled
    bool has_drift = false;

    double diffusive(double x) const {
        const int n = grid.n_cells;
        int f = static_cast<int>(std::floor((x - grid.x_min) / grid.dx));
        f = std::clamp(f, 1, n - 2);
        const double theta = (x - grid.face(f)) / grid.dx;
        return (1.0 - theta) * face_slope(f) + theta * face_slope(f + 1);
    }

    double drift_at(double x) const {
        if (!has_drift) return 0.0;
        const int n = grid.n_cells;
        int j = static_cast<int>(std::floor((x - grid.x_min) / grid.dx - 0.5));
        j = std::clamp(j, 0, n - 2);
        const double theta = (x - grid.center(j)) / grid.dx;
        return (1.0 - theta) * drift(j) + theta * drift(j + 1);
    }

    double velocity(double x, SignConvention c) const {
        const double v = -diffusive(x) + drift_at(x);
        return c == SignConvention::intro ? v : -v;
    }
};

SpeedLawData make_speed_law(const SolverState& state, const Scenario& sc) {
    const auto& g = sc.grid;
    const int n = g.n_cells;
    const double eps = sc.epsilon;
    const double wcoef = sc.m / (sc.m - 1.0);

    SpeedLawData d;
    d.grid = g;
    const Eigen::ArrayXd w = wcoef * (state.u.values + eps).pow(sc.m - 1.0);
    d.face_slope = Eigen::ArrayXd::Zero(n + 1);
    for (int f = 1; f < n; ++f) d.face_slope(f) = (w(f) - w(f - 1)) / g.dx;

    d.has_drift = sc.drift_enabled;
    if (d.has_drift) {
        d.drift = Eigen::ArrayXd::Zero(n);
        for (int i = 0; i < n; ++i) {
            const double u = state.u.values(i);
            d.drift(i) =
                u > 0.0 ? std::pow(u + eps, sc.q - 3.0) * u * state.dxv.values(i) : 0.0;
        }
    }
    return d;
}

bool in_interior(const Grid1D& g, double x) {
    return x >= g.x_min + g.dx && x <= g.x_max - g.dx;
}

} // namespace

double interface_velocity(const SolverState& state, const Scenario& scenario,
                          double x, SignConvention convention) {
    if (!in_interior(scenario.grid, x))
        throw std::invalid_argument("interface_velocity: x outside the grid interior");
    return make_speed_law(state, scenario).velocity(x, convention);
}

InterfacePair integrate_interfaces(const Trajectory& traj, double a, double b,
                                   SignConvention convention) {
    if (traj.frames.empty())
        throw std::invalid_argument("integrate_interfaces: empty trajectory");
    if (!(a < b)) throw std::invalid_argument("integrate_interfaces: need a < b");
    const auto& sc = traj.scenario;
    if (!in_interior(sc.grid, a) || !in_interior(sc.grid, b))
        throw std::invalid_argument("integrate_interfaces: [a, b] outside the interior");
    const auto& u0 = traj.frames.front().u;
    for (int i = 0; i < sc.grid.n_cells; ++i) {
        const double x = sc.grid.center(i);
        if (x >= a && x <= b && u0.values(i) != 0.0)
            throw std::invalid_argument("integrate_interfaces: u0 not zero on [a, b]");
    }

    InterfacePair pair;
    pair.a = a;
    pair.b = b;
    pair.convention = convention;
    pair.times = {traj.frames.front().t};
    pair.xi = {a};
    pair.Xi = {b};

    SpeedLawData law_k = make_speed_law(traj.frames.front(), sc);
    for (size_t k = 0; k + 1 < traj.frames.size(); ++k) {
        const SpeedLawData law_k1 = make_speed_law(traj.frames[k + 1], sc);
        const double dt = traj.frames[k + 1].t - traj.frames[k].t;

        auto heun = [&](double x) -> std::optional<double> {
            const double k1 = law_k.velocity(x, convention);
            const double xs = x + dt * k1;
            if (!in_interior(sc.grid, xs)) return std::nullopt;
            const double k2 = law_k1.velocity(xs, convention);
            const double xn = x + 0.5 * dt * (k1 + k2);
            if (!in_interior(sc.grid, xn)) return std::nullopt;
            return xn;
        };

        const auto xi_next = heun(pair.xi.back());
        const auto Xi_next = heun(pair.Xi.back());
        if (!xi_next || !Xi_next) {
            pair.complete = false;
            pair.stop_reason = "curve escaped the grid interior";
            return pair;
        }
        if (!(*xi_next < *Xi_next)) {
            pair.complete = false;
            pair.stop_reason = "curves crossed (hole closed)";
            return pair;
        }
        pair.times.push_back(traj.frames[k + 1].t);
        pair.xi.push_back(*xi_next);
        pair.Xi.push_back(*Xi_next);
        law_k = law_k1;
    }
    return pair;
}

double cone_mass(const Trajectory& traj, const InterfacePair& pair, int frame_index) {
    if (frame_index < 0 || frame_index >= static_cast<int>(pair.times.size()))
        throw std::invalid_argument("cone_mass: frame index not covered by the pair");
    const auto& st = traj.frames.at(frame_index);
    if (st.t != pair.times[frame_index])
        throw std::invalid_argument("cone_mass: pair does not match trajectory frames");
    const auto& g = traj.scenario.grid;
    const double eps = traj.scenario.epsilon;
    const double lo = pair.xi[frame_index];
    const double hi = pair.Xi[frame_index];

    double total = 0.0;
    const int i_lo = std::clamp(
        static_cast<int>(std::floor((lo - g.x_min) / g.dx)), 0, g.n_cells - 1);
    const int i_hi = std::clamp(
        static_cast<int>(std::floor((hi - g.x_min) / g.dx)), 0, g.n_cells - 1);
    for (int i = i_lo; i <= i_hi; ++i) {
        const double cl = std::max(g.face(i), lo);
        const double cr = std::min(g.face(i + 1), hi);
        if (cr > cl) total += (cr - cl) * (st.u.values(i) + eps);
    }
    return total;
}

VacuumReport vacuum_check(const Trajectory& traj, const InterfacePair& pair,
                          double margin_cells) {
    VacuumReport rep;
    const auto& g = traj.scenario.grid;
    rep.margin = margin_cells * g.dx;
    for (size_t k = 0; k < pair.times.size(); ++k) {
        const auto& u = traj.frames.at(k).u.values;
        const double lo = pair.xi[k] + rep.margin;
        const double hi = pair.Xi[k] - rep.margin;
        double mx = 0.0, integral = 0.0;
        if (hi > lo) {
            for (int i = 0; i < g.n_cells; ++i) {
                const double x = g.center(i);
                if (x > lo && x < hi) {
                    mx = std::max(mx, u(i));
                    integral += g.dx * u(i);
                }
            }
        }
        rep.times.push_back(pair.times[k]);
        rep.interior_max.push_back(mx);
        rep.interior_integral.push_back(integral);
    }
    return rep;
}

} // namespace ks::interface
