#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ks/interface.hpp"
#include "ks/trajectory.hpp"

namespace ks::verify {

enum class Claim {
    linf_bound,
    mass_conservation,
    dxv_bound,
    lipschitz_uniformity,
    holder,
    cone_mass,
    vacuum,
    pme_convergence,
    psi_bounds,
    cutoff_bounds,
};

std::string to_string(Claim c);

/// Verdict for one checked inequality. `anchor` states the inequality the
/// claim stands for, independent of any particular run.
struct ClaimResult {
    Claim id = Claim::mass_conservation;
    CheckStatus status = CheckStatus::pass;
    std::string anchor;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
    int frames_outside_window = 0;
};

/// Centralized default tolerances, echoed into every report.
struct Tolerances {
    double linf_slack = 1e-10;
    double mass_rel = 1e-12;
    double dxv_slack = 1e-10;
    double holder_floor = -1e-12;
    double cone_mass_rel = 0.02;
    double vacuum_floor_cells = 5.0;
    double sweep_band_factor = 2.0;
    double sweep_noise = 0.10;
    double min_order = 0.8;
    double support_inflation_cells = 5.0;
    /// Exponent offset for the near-vacuum slope diagnostic.
    double delta = 0.5;
};

/// Runs every check applicable to a finished trajectory: sup-norm window,
/// mass conservation, dxv bound, the pointwise continuity estimate, and for
/// hole scenarios the cone-mass identity and vacuum persistence. Drift-free
/// runs started from the self-similar profile also get the support
/// containment check (recorded under pme_convergence).
std::vector<ClaimResult> run_scenario_checks(const Trajectory& traj,
                                             const Tolerances& tol = {});

/// Scenario-independent checks of the transformation and cutoff bounds.
std::vector<ClaimResult> formula_suite(const Tolerances& tol = {});

struct SweepRow {
    double epsilon = 0.0;
    double lipschitz = 0.0;
    double vacuum_interior_max = 0.0;
    double cone_drift = 0.0;
    bool aborted = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    ClaimResult verdict;
    bool pass = false;
};

/// Reruns the scenario for each epsilon (>= 3 values) concurrently and
/// checks that the Lipschitz diagnostic stays inside a factor-2 band with no
/// monotone growth as eps decreases, and that the vacuum interior max is
/// non-increasing up to the noise tolerance.
SweepReport sweep_epsilon(const Scenario& base, const std::vector<double>& eps,
                          const Tolerances& tol = {});

struct ConvergenceReport {
    std::vector<int> n;
    std::vector<double> l1_self_diff;
    std::vector<double> cone_drift;
    std::vector<double> orders_u;
    std::vector<double> orders_cone;
    bool pass = false;
    std::string detail;
};

/// Self-convergence study over doubling grid sizes (>= 3, each exactly twice
/// the previous). Reports pairwise observed L1 orders of u at t_end and,
/// for hole scenarios, cone-mass drift orders; passes iff all orders >= 0.8.
ConvergenceReport convergence_study(const Scenario& base, const std::vector<int>& sizes,
                                    const Tolerances& tol = {});

bool all_pass(const std::vector<ClaimResult>& results);

} // namespace ks::verify
