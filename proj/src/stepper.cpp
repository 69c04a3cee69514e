#include "ks/stepper.hpp"

#include <cmath>
#include <stdexcept>

#include "ks/elliptic.hpp"
#include "ks/errors.hpp"

namespace ks::stepper {

namespace {

constexpr double clamp_floor = -1e-13;

double drift_mobility(double u, double eps, double q) {
    if (u <= 0.0) return 0.0;
    return std::pow(u + eps, q - 2.0) * u;
}

FrameDiagnostics frame_diagnostics(const SolverState& st, const Scenario& sc,
                                   double sup_u0, double t_guaranteed) {
    FrameDiagnostics d;
    d.t = st.t;
    d.mass = mass(st.u);
    d.max_u = st.u.values.size() ? st.u.values.maxCoeff() : 0.0;
    const int n = sc.grid.n_cells;
    const Eigen::ArrayXd wm1 = (st.u.values + sc.epsilon).pow(sc.m - 1.0);
    d.lip_w = n > 1
                  ? (wm1.tail(n - 1) - wm1.head(n - 1)).abs().maxCoeff() / sc.grid.dx
                  : 0.0;
    d.sup_dxv = st.dxv.values.abs().maxCoeff();
    if (st.t < t_guaranteed)
        d.linf_ok = d.max_u <= sup_u0 + 2.0 + 1e-10 ? CheckStatus::pass : CheckStatus::fail;
    else
        d.linf_ok = CheckStatus::outside_window;

    int first = -1, last = -1;
    for (int i = 0; i < n; ++i) {
        if (st.u.values(i) > support_threshold) {
            if (first < 0) first = i;
            last = i;
        }
    }
    d.support_ok = first < 0 || (first >= 10 && last <= n - 11);
    return d;
}

} // namespace

FluxField compute_flux(const SolverState& state, const Scenario& scenario) {
    const auto& g = scenario.grid;
    const int n = g.n_cells;
    const double eps = scenario.epsilon;
    const auto& u = state.u.values;
    if (!u.allFinite() || !state.dxv.values.allFinite())
        throw run_abort("compute_flux: non-finite field values");

    const Eigen::ArrayXd pm = (u + eps).pow(scenario.m);
    FluxField flux{g, Eigen::ArrayXd::Zero(n + 1)};
    for (int f = 1; f < n; ++f) {
        double F = (pm(f) - pm(f - 1)) / g.dx;
        if (scenario.drift_enabled) {
            const double gf = 0.5 * (state.dxv.values(f - 1) + state.dxv.values(f));
            const int up = gf > 0.0 ? f - 1 : f;
            F -= drift_mobility(u(up), eps, scenario.q) * gf;
        }
        flux.face_values(f) = F;
    }
    return flux;
}

double stable_dt(const SolverState& state, const Scenario& scenario) {
    const double eps = scenario.epsilon;
    const double max_u = state.u.values.size() ? state.u.values.maxCoeff() : 0.0;
    const double dx = scenario.grid.dx;
    const double diff_coeff = 2.0 * scenario.m * std::pow(max_u + eps, scenario.m - 1.0);
    const double dt_diff = dx * dx / (diff_coeff + 1e-300);
    const double speed =
        std::pow(max_u + eps, scenario.q - 2.0) * state.dxv.values.abs().maxCoeff();
    const double dt_adv = dx / (speed + 1e-30);
    return scenario.cfl_sigma * std::min(dt_diff, dt_adv);
}

SolverState step(const SolverState& state, const Scenario& scenario, double dt,
                 double* clamped) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    if (dt > stable_dt(state, scenario) * (1.0 + 1e-9))
        throw std::invalid_argument("step: dt exceeds the stability bound");

    const auto flux = compute_flux(state, scenario);
    const int n = scenario.grid.n_cells;
    const double r = dt / scenario.grid.dx;

    SolverState next;
    next.t = state.t + dt;
    next.u = ScalarField{scenario.grid,
                         state.u.values + r * (flux.face_values.tail(n) -
                                               flux.face_values.head(n))};
    if (!next.u.values.allFinite()) throw run_abort("step: non-finite update");

    const double min_u = next.u.values.minCoeff();
    if (min_u < clamp_floor)
        throw run_abort("step: negative density below the clamp floor");
    if (min_u < 0.0) {
        const double before = next.u.values.sum();
        next.u.values = next.u.values.max(0.0);
        if (clamped) *clamped += scenario.grid.dx * (next.u.values.sum() - before);
    }

    next.v = elliptic::solve(next.u, scenario.gamma);
    next.dxv = elliptic::gradient(next.u, next.v, scenario.gamma);
    return next;
}

SolverState initial_state(const Scenario& scenario) {
    SolverState st;
    st.t = 0.0;
    st.u = sample_initial_data(scenario.u0, scenario.grid, scenario.m);
    st.v = elliptic::solve(st.u, scenario.gamma);
    st.dxv = elliptic::gradient(st.u, st.v, scenario.gamma);
    return st;
}

Trajectory run(const Scenario& scenario) {
    validate(scenario);

    Trajectory traj;
    traj.scenario = scenario;

    SolverState state = initial_state(scenario);
    traj.sup_u0 = state.u.values.maxCoeff();
    traj.mass_u0 = mass(state.u);
    traj.t_guaranteed = std::pow(traj.sup_u0 + 2.0, -scenario.q);

    traj.frames.push_back(state);
    traj.diagnostics.push_back(
        frame_diagnostics(state, scenario, traj.sup_u0, traj.t_guaranteed));

    const double frame_dt = scenario.t_end / scenario.n_frames;
    for (int k = 1; k <= scenario.n_frames; ++k) {
        const double t_frame = k * frame_dt;
        try {
            while (state.t < t_frame - 1e-14 * scenario.t_end) {
                const double dt = std::min(stable_dt(state, scenario), t_frame - state.t);
                state = step(state, scenario, dt, &traj.clamped_mass);
                ++traj.n_steps;
                const double drift = std::abs(mass(state.u) - traj.mass_u0);
                if (drift > 1e-10 * std::max(traj.mass_u0, 1e-300) + 1e-300)
                    throw run_abort("run: mass drift beyond tolerance");
            }
        } catch (const run_abort& e) {
            traj.aborted = true;
            traj.abort_reason = e.what();
            return traj;
        }
        state.t = t_frame;
        traj.frames.push_back(state);
        traj.diagnostics.push_back(
            frame_diagnostics(state, scenario, traj.sup_u0, traj.t_guaranteed));
    }
    return traj;
}

} // namespace ks::stepper
