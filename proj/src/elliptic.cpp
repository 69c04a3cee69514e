#include "ks/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace ks::elliptic {

namespace {

struct Sweeps {
    Eigen::ArrayXd left;  // sum_{j<i} e^{-a(i-j)} u_j
    Eigen::ArrayXd right; // sum_{j>i} e^{-a(j-i)} u_j
};

Sweeps exp_sweeps(const Eigen::ArrayXd& u, double a) {
    const int n = static_cast<int>(u.size());
    const double decay = std::exp(-a);
    Sweeps s{Eigen::ArrayXd::Zero(n), Eigen::ArrayXd::Zero(n)};
    for (int i = 1; i < n; ++i) s.left(i) = decay * (s.left(i - 1) + u(i - 1));
    for (int i = n - 2; i >= 0; --i) s.right(i) = decay * (s.right(i + 1) + u(i + 1));
    return s;
}

Eigen::ArrayXd checked_source(const ScalarField& u) {
    if (u.values.size() != u.grid.n_cells)
        throw std::invalid_argument("solve: field size does not match grid");
    if (u.values.minCoeff() < -1e-14)
        throw std::invalid_argument("solve: u has negative entries beyond -1e-14");
    return u.values.max(0.0);
}

} // namespace

BesselKernel make_kernel(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("kernel: gamma must be > 0");
    return BesselKernel{gamma, std::sqrt(gamma)};
}

double kernel_value(const BesselKernel& k, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("kernel_value: x must be finite");
    return std::exp(-k.sqrt_gamma * std::abs(x)) / (2.0 * k.gamma);
}

ScalarField solve(const ScalarField& u, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("solve: gamma must be > 0");
    const Eigen::ArrayXd src = checked_source(u);
    const double s = std::sqrt(gamma);
    const double a = s * u.grid.dx;
    const auto sweeps = exp_sweeps(src, a);
    // Exact integration of the kernel over each source cell:
    //   self cell  (1 - e^{-a/2}) / gamma,
    //   |i-j| = k  e^{-a k} sinh(a/2) / gamma.
    ScalarField v{u.grid,
                  ((1.0 - std::exp(-0.5 * a)) * src +
                   std::sinh(0.5 * a) * (sweeps.left + sweeps.right)) /
                      gamma};
    return v;
}

ScalarField gradient(const ScalarField& u, const ScalarField& v, double gamma) {
    require_same_grid(u, v);
    if (!(gamma > 0.0)) throw std::invalid_argument("gradient: gamma must be > 0");
    const Eigen::ArrayXd src = checked_source(u);
    const double s = std::sqrt(gamma);
    const double a = s * u.grid.dx;
    const auto sweeps = exp_sweeps(src, a);
    // Same quadrature applied to the kernel derivative -sign(x) e^{-s|x|}/2;
    // the self-cell integral vanishes by oddness.
    ScalarField g{u.grid, (std::sinh(0.5 * a) / s) * (sweeps.right - sweeps.left)};
    return g;
}

ScalarField second_derivative(const ScalarField& u, const ScalarField& v, double gamma) {
    require_same_grid(u, v);
    if (!(gamma > 0.0)) throw std::invalid_argument("second_derivative: gamma must be > 0");
    return ScalarField{u.grid, gamma * v.values - u.values};
}

double residual_tolerance(double dx) {
    // Measured 0.23 dx^2 on a smooth manufactured solution (Gaussian source,
    // gamma = 1); frozen with margin for Lipschitz-kinked sources, whose kink
    // cells contribute ~Lip(u) dx / 4 to the 3-point second difference.
    constexpr double c_res = 10.0;
    return c_res * dx * dx;
}

} // namespace ks::elliptic
