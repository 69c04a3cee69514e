#pragma once

#include <variant>

#include "ks/grid.hpp"

namespace ks {

/// Compactly supported cap h * (1 - ((x-c)/w)^2)_+^{1/(m-1)}.
/// Its (m-1)-power is a parabola cap, so it has a finite Lipschitz constant
/// for every m > 1.
struct BumpData {
    double center = 0.0;
    double width = 1.0;
    double height = 1.0;
};

/// Two disjoint bumps with a vacuum interval between them.
struct TwoBumpsData {
    double c1 = -3.0;
    double c2 = 3.0;
    double width = 1.0;
    double height = 1.0;
};

/// Self-similar source profile of the m-diffusion equation, sampled at
/// time t0 > 0 and normalized to the given total mass.
struct BarenblattData {
    double t0 = 1.0;
    double mass = 1.0;
};

struct ZeroData {};

using InitialData = std::variant<BumpData, TwoBumpsData, BarenblattData, ZeroData>;

/// Pointwise value of the descriptor; m fixes the bump cap exponent.
double initial_value(const InitialData& data, double x, double m);

/// Samples the descriptor at cell centers (no cell averaging).
/// Throws std::invalid_argument on bad parameters (height <= 0,
/// overlapping two-bump supports, t0 <= 0, ...).
ScalarField sample_initial_data(const InitialData& data, const Grid1D& grid, double m);

/// Support interval [lo, hi] of the descriptor; zero data reports
/// an empty interval with lo > hi.
struct SupportInterval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty() const { return lo > hi; }
};
SupportInterval analytic_support(const InitialData& data, double m);

} // namespace ks
