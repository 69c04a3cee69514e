#include "ks/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ks::analysis {

PsiTransform make_psi(double m, double sup_u0, double epsilon) {
    if (!(m > 1.0)) throw std::invalid_argument("make_psi: m must be > 1");
    if (!(sup_u0 >= 0.0)) throw std::invalid_argument("make_psi: sup_u0 must be >= 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("make_psi: epsilon must be >= 0");
    const double L = m / (m - 1.0) * std::pow(sup_u0 + 2.0 + epsilon, m - 1.0);
    return PsiTransform{m, L};
}

PsiValues psi_eval(const PsiTransform& p, double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::invalid_argument("psi_eval: r must lie in [0, 1]");
    PsiValues v;
    v.value = p.L * (r / 3.0) * (4.0 - r);
    v.d1 = (2.0 * p.L / 3.0) * (2.0 - r);
    v.d2 = -2.0 * p.L / 3.0;
    return v;
}

double barrier_constant(double m) {
    if (!(m > 1.0)) throw std::invalid_argument("barrier_constant: m must be > 1");
    return m * (11.0 * m - 3.0) / (12.0 * (m - 1.0));
}

RatioBoundsReport ratio_bounds_check(const PsiTransform& p, int samples) {
    if (samples < 100)
        throw std::invalid_argument("ratio_bounds_check: need at least 100 samples");
    RatioBoundsReport rep;
    rep.samples = samples;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double M = barrier_constant(p.m);
    const double tol = 1e-12 * std::max(1.0, p.L);

    auto record = [&](double r, double margin, const char* what) {
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -tol) {
            std::ostringstream os;
            os << what << " margin " << margin;
            rep.violations.emplace_back(r, os.str());
        }
    };

    for (int i = 0; i < samples; ++i) {
        const double r = static_cast<double>(i) / (samples - 1);
        const auto v = psi_eval(p, r);
        record(r, v.d1 - 2.0 * p.L / 3.0, "psi' lower");
        record(r, 4.0 * p.L / 3.0 - v.d1, "psi' upper");

        const double ratio = std::abs(v.d2 / v.d1);
        record(r, ratio - 0.5, "|psi''/psi'| lower");
        record(r, 1.0 - ratio, "|psi''/psi'| upper");

        const double dratio = -ratio * ratio; // (psi''/psi')' for this family
        record(r, dratio + 1.0, "(psi''/psi')' lower");
        record(r, -0.25 - dratio, "(psi''/psi')' upper");

        const double coeff = (p.m - 1.0) * v.value * dratio + p.m * v.d2;
        record(r, -M - coeff, "barrier coefficient");
    }
    rep.pass = rep.violations.empty();
    return rep;
}

namespace {

/// Quartic blend on |x| in (1, 2), coefficient A at the edges.
CutoffDerivs cutoff_profile(double xi, double sgn, double A) {
    CutoffDerivs d;
    if (xi >= 2.0) {
        return d;
    } else if (xi > 1.5) {
        const double s = 2.0 - xi;
        d.value = A * s * s * s * s;
        d.d1 = -4.0 * A * s * s * s * sgn;
        d.d2 = 12.0 * A * s * s;
    } else if (xi > 1.0) {
        const double s = xi - 1.0;
        d.value = 1.0 - A * s * s * s * s;
        d.d1 = -4.0 * A * s * s * s * sgn;
        d.d2 = -12.0 * A * s * s;
    } else {
        d.value = 1.0;
    }
    return d;
}

} // namespace

double cutoff_eval(int k, double x, double coefficient) {
    return cutoff_derivatives(k, x, coefficient).value;
}

CutoffDerivs cutoff_derivatives(int k, double x, double coefficient) {
    if (coefficient != 2.0 && coefficient != 8.0)
        throw std::invalid_argument("cutoff: coefficient must be 2 or 8");
    const double y = x - k;
    return cutoff_profile(std::abs(y), y >= 0.0 ? 1.0 : -1.0, coefficient);
}

CutoffConstants cutoff_property_check(double coefficient, int samples) {
    if (coefficient != 8.0)
        throw std::invalid_argument(
            "cutoff_property_check: only the continuous family (coefficient 8) "
            "admits finite constants");
    if (samples < 100)
        throw std::invalid_argument("cutoff_property_check: need at least 100 samples");

    CutoffConstants out;
    double ref_c1 = 0.0, ref_c2 = 0.0, ref_c3 = 0.0;
    bool first = true;
    out.k_independent = true;

    for (int k = -2; k <= 2; ++k) {
        double c1 = 0.0, c2 = 0.0, c3 = 0.0;
        auto visit = [&](double x) {
            const auto d = cutoff_derivatives(k, x, coefficient);
            if (d.value > 0.0)
                c1 = std::max(c1, std::abs(d.d1) / std::pow(d.value, 0.75));
            if (d.d2 < 0.0 && d.value > 0.0) c2 = std::max(c2, -d.d2 / d.value);
            c3 = std::max(c3, d.d2);
        };
        for (int i = 0; i <= samples; ++i)
            visit(k - 2.0 + 4.0 * static_cast<double>(i) / samples);
        // junction points carry the extremal ratios
        for (double j : {-1.5, -1.0, 1.0, 1.5}) visit(k + j);

        if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
            out.finite = false;
            return out;
        }
        if (first) {
            ref_c1 = c1;
            ref_c2 = c2;
            ref_c3 = c3;
            first = false;
        } else if (std::abs(c1 - ref_c1) > 1e-12 || std::abs(c2 - ref_c2) > 1e-12 ||
                   std::abs(c3 - ref_c3) > 1e-12) {
            out.k_independent = false;
        }
    }
    out.c1 = ref_c1;
    out.c2 = ref_c2;
    out.c3 = ref_c3;
    out.finite = true;
    return out;
}

HolderReport holder_check(const ScalarField& field, double m, double u_sup) {
    if (!(m > 1.0)) throw std::invalid_argument("holder_check: m must be > 1");
    const auto& u = field.values;
    const int n = static_cast<int>(u.size());
    if (u.size() && u.minCoeff() < 0.0)
        throw std::invalid_argument("holder_check: field must be nonnegative");
    if (u.size() && !(u_sup >= u.maxCoeff()))
        throw std::invalid_argument("holder_check: u_sup below the field maximum");

    HolderReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();

    const double p = m - 1.0;
    auto margin = [&](double a, double b) {
        const double lhs = std::abs(a - b);
        const double dp = std::abs(std::pow(a, p) - std::pow(b, p));
        double rhs = 0.0;
        if (m >= 2.0) {
            rhs = std::pow(dp, 1.0 / p);
        } else {
            const double sup_factor = u_sup > 0.0 ? std::pow(u_sup, 2.0 - m) : 0.0;
            rhs = std::pow(2.0, 1.0 / p) / p * sup_factor * dp;
        }
        return rhs - lhs;
    };

    for (int i = 0; i + 1 < n; ++i) {
        rep.worst_margin = std::min(rep.worst_margin, margin(u(i), u(i + 1)));
        ++rep.pairs_checked;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < 2000 && n > 1; ++k) {
        const int i = pick(rng), j = pick(rng);
        rep.worst_margin = std::min(rep.worst_margin, margin(u(i), u(j)));
        ++rep.pairs_checked;
    }
    rep.pass = rep.worst_margin >= -1e-12;
    return rep;
}

double lipschitz_sup(const ScalarField& u, double epsilon, double m) {
    const int n = static_cast<int>(u.values.size());
    if (n < 2) return 0.0;
    const Eigen::ArrayXd wm1 = (u.values + epsilon).pow(m - 1.0);
    return (wm1.tail(n - 1) - wm1.head(n - 1)).abs().maxCoeff() / u.grid.dx;
}

double lipschitz_sup(const Trajectory& traj) {
    double sup = 0.0;
    for (const auto& d : traj.diagnostics) sup = std::max(sup, d.lip_w);
    return sup;
}

double vacuum_slope_sup(const ScalarField& u, double m, double delta, double floor) {
    if (!(delta > 0.0)) throw std::invalid_argument("vacuum_slope_sup: delta must be > 0");
    const int n = static_cast<int>(u.values.size());
    const double p = m - 1.0 + delta;
    double sup = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        if (u.values(i) <= floor || u.values(i + 1) <= floor) {
            const double d =
                std::abs(std::pow(u.values(i + 1), p) - std::pow(u.values(i), p));
            sup = std::max(sup, d / u.grid.dx);
        }
    }
    return sup;
}

} // namespace ks::analysis
