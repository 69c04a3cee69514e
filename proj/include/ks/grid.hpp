#pragma once

#include <Eigen/Core>

namespace ks {

/// Uniform cell-centered mesh on [x_min, x_max]. Cell i has its center at
/// x_min + (i + 1/2) * dx; faces sit at x_min + f * dx for f = 0..n_cells.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_cells = 0;
    double dx = 0.0;

    double center(int i) const { return x_min + (i + 0.5) * dx; }
    double face(int f) const { return x_min + f * dx; }
    int n_faces() const { return n_cells + 1; }

    Eigen::ArrayXd centers() const;

    bool operator==(const Grid1D&) const = default;
};

/// Validating factory. Rejects non-finite bounds, x_min >= x_max and
/// n_cells < 16.
Grid1D build_grid(double x_min, double x_max, int n_cells);

/// Cell values of one scalar quantity (u, v, a derivative, ...) on a Grid1D.
struct ScalarField {
    Grid1D grid;
    Eigen::ArrayXd values;
};

ScalarField make_field(const Grid1D& grid);

inline double mass(const ScalarField& f) { return f.grid.dx * f.values.sum(); }

/// Throws std::invalid_argument unless both fields live on the same grid.
void require_same_grid(const ScalarField& a, const ScalarField& b);

/// Largest face difference quotient max_f |w_{i+1} - w_i| / dx.
double max_slope(const ScalarField& f);

} // namespace ks
