#pragma once

#include <string>
#include <vector>

#include "ks/scenario.hpp"

namespace ks {

/// One snapshot of the coupled pair (u, v) plus the cached gradient of v.
struct SolverState {
    double t = 0.0;
    ScalarField u;
    ScalarField v;
    ScalarField dxv;
};

enum class CheckStatus { pass, fail, outside_window };

std::string to_string(CheckStatus s);

struct FrameDiagnostics {
    double t = 0.0;
    double mass = 0.0;
    double max_u = 0.0;
    /// max over faces of |d/dx (u+eps)^{m-1}|.
    double lip_w = 0.0;
    double sup_dxv = 0.0;
    /// sup-norm bound max_u <= sup_u0 + 2, evaluated while t < t_guaranteed.
    CheckStatus linf_ok = CheckStatus::pass;
    /// Numerical support at least 10 cells away from the domain boundary.
    bool support_ok = true;
};

struct Trajectory {
    Scenario scenario;
    double sup_u0 = 0.0;
    double mass_u0 = 0.0;
    /// Existence window (sup_u0 + 2)^{-q} of the sup-norm estimate.
    double t_guaranteed = 0.0;
    std::vector<SolverState> frames;
    std::vector<FrameDiagnostics> diagnostics;
    /// Total mass added by clamping tiny negative cell values to zero.
    double clamped_mass = 0.0;
    long long n_steps = 0;
    bool aborted = false;
    std::string abort_reason;
};

/// Cells with u above this threshold count as numerical support (explicit
/// schemes shed a short tail of rapidly collapsing values past the front).
inline constexpr double support_threshold = 1e-13;

} // namespace ks
