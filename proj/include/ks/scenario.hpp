#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ks/grid.hpp"
#include "ks/initial_data.hpp"

namespace ks {

struct Hole {
    double a = 0.0;
    double b = 0.0;
};

/// Full problem description: exponents, regularization, grid, initial data
/// and numerics knobs. Immutable once validated.
struct Scenario {
    double m = 2.0;
    double gamma = 1.0;
    double q = 4.0;
    double epsilon = 1e-4;
    bool drift_enabled = true;
    Grid1D grid;
    InitialData u0 = ZeroData{};
    double t_end = 0.0;
    double cfl_sigma = 0.4;
    std::optional<Hole> hole;
    int n_frames = 128;

    /// The a-priori estimates assume q >= 2m; runs outside that range are
    /// reported as exploratory.
    bool theory_applies() const { return q >= 2.0 * m; }
};

/// Throws config_error if the scenario violates its invariants
/// (parameter ranges, support placement, hole inside the vacuum set).
void validate(const Scenario& s);

/// Flat key = value config. Recognized keys: m, gamma, q, epsilon,
/// drift_enabled, x_min, x_max, n_cells, t_end, cfl_sigma, u0.kind,
/// u0.params, hole.a, hole.b, n_frames.
Scenario scenario_from_config(std::istream& in);
Scenario scenario_from_config_text(const std::string& text);
Scenario load_scenario(const std::string& path);
std::string scenario_to_config(const Scenario& s);

} // namespace ks
