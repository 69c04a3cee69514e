#pragma once

#include <string>
#include <vector>

#include "ks/grid.hpp"
#include "ks/trajectory.hpp"

namespace ks::analysis {

/// Concave transformation psi(r) = L (r/3)(4 - r) on [0, 1] with
/// L = (m/(m-1)) (sup_u0 + 2 + eps)^{m-1}.
struct PsiTransform {
    double m = 2.0;
    double L = 0.0;
};

PsiTransform make_psi(double m, double sup_u0, double epsilon);

struct PsiValues {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// value = L (r/3)(4-r), psi' = (2L/3)(2-r), psi'' = -2L/3.
/// r outside [0,1] is rejected.
PsiValues psi_eval(const PsiTransform& p, double r);

/// m (11m - 3) / (12 (m - 1)); positive for every m > 1.
double barrier_constant(double m);

struct RatioBoundsReport {
    int samples = 0;
    double worst_margin = 0.0;
    std::vector<std::pair<double, std::string>> violations;
    bool pass = false;
};

/// Verifies at uniformly sampled r in [0, 1]:
///   2L/3 <= psi' <= 4L/3,
///   1/2 <= |psi''/psi'| <= 1,
///   -1 <= (psi''/psi')' = -(psi''/psi')^2 <= -1/4,
///   (m-1) psi (psi''/psi')' + m psi'' <= -barrier_constant(m).
RatioBoundsReport ratio_bounds_check(const PsiTransform& p, int samples);

/// Piecewise-quartic cutoff translated by k: 1 on [k-1, k+1], supported on
/// [k-2, k+2], quartic blend with the given edge coefficient in between.
/// Coefficient 8 is the continuous family; coefficient 2 evaluates the
/// discontinuous variant (one-sided values 7/8 and 1/8 at |x-k| = 3/2).
double cutoff_eval(int k, double x, double coefficient);

struct CutoffDerivs {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

CutoffDerivs cutoff_derivatives(int k, double x, double coefficient);

struct CutoffConstants {
    double c1 = 0.0; ///< smallest c with |eta'| <= c eta^{3/4}
    double c2 = 0.0; ///< smallest c with -c eta <= eta''
    double c3 = 0.0; ///< smallest c with eta'' <= c
    bool finite = false;
    bool k_independent = false;
};

/// Dense sampling over k in {-2..2}. Requires coefficient == 8 (the
/// discontinuous family admits no finite c1).
CutoffConstants cutoff_property_check(double coefficient, int samples);

struct HolderReport {
    double worst_margin = 0.0;
    int pairs_checked = 0;
    bool pass = false;
};

/// Checks |u(x)-u(y)| <= |u^{m-1}(x)-u^{m-1}(y)|^{1/(m-1)}        (m >= 2)
///        |u(x)-u(y)| <= (2^{1/(m-1)}/(m-1)) sup^{2-m} |u^{m-1}(x)-u^{m-1}(y)|
///                                                                (1 < m < 2)
/// on all adjacent-cell pairs and a seeded random sample of distant pairs.
/// margin = rhs - lhs; pass iff worst margin >= -1e-12.
HolderReport holder_check(const ScalarField& field, double m, double u_sup);

/// max over faces of |(u_{i+1}+eps)^{m-1} - (u_i+eps)^{m-1}| / dx.
double lipschitz_sup(const ScalarField& u, double epsilon, double m);

/// Same quantity maximized over all frames of a trajectory.
double lipschitz_sup(const Trajectory& traj);

/// max slope of u^{m-1+delta} over faces adjacent to a vacuum cell
/// (u <= floor). Decays near vacuum points as the grid refines.
double vacuum_slope_sup(const ScalarField& u, double m, double delta, double floor);

} // namespace ks::analysis
