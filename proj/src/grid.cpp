#include "ks/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ks {

Eigen::ArrayXd Grid1D::centers() const {
    Eigen::ArrayXd c(n_cells);
    for (int i = 0; i < n_cells; ++i) c(i) = center(i);
    return c;
}

Grid1D build_grid(double x_min, double x_max, int n_cells) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw std::invalid_argument("build_grid: bounds must be finite");
    if (!(x_min < x_max))
        throw std::invalid_argument("build_grid: x_min must be < x_max");
    if (n_cells < 16)
        throw std::invalid_argument("build_grid: n_cells must be >= 16");
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n_cells = n_cells;
    g.dx = (x_max - x_min) / n_cells;
    return g;
}

ScalarField make_field(const Grid1D& grid) {
    return ScalarField{grid, Eigen::ArrayXd::Zero(grid.n_cells)};
}

void require_same_grid(const ScalarField& a, const ScalarField& b) {
    if (!(a.grid == b.grid))
        throw std::invalid_argument("fields live on different grids");
}

double max_slope(const ScalarField& f) {
    const int n = f.grid.n_cells;
    if (n < 2) return 0.0;
    return (f.values.tail(n - 1) - f.values.head(n - 1)).abs().maxCoeff() / f.grid.dx;
}

} // namespace ks
