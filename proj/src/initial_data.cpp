#include "ks/initial_data.hpp"

#include <cmath>
#include <stdexcept>

#include "ks/pme.hpp"

namespace ks {

namespace {

double bump_value(const BumpData& b, double x, double m) {
    const double xi = (x - b.center) / b.width;
    const double cap = 1.0 - xi * xi;
    if (cap <= 0.0) return 0.0;
    return b.height * std::pow(cap, 1.0 / (m - 1.0));
}

void check_bump(const BumpData& b) {
    if (!(b.height > 0.0)) throw std::invalid_argument("bump: height must be > 0");
    if (!(b.width > 0.0)) throw std::invalid_argument("bump: width must be > 0");
}

void check_two_bumps(const TwoBumpsData& d) {
    if (!(d.height > 0.0)) throw std::invalid_argument("two_bumps: height must be > 0");
    if (!(d.width > 0.0)) throw std::invalid_argument("two_bumps: width must be > 0");
    if (!(d.c1 < d.c2)) throw std::invalid_argument("two_bumps: c1 must be < c2");
    if (!(d.c2 - d.c1 > 2.0 * d.width))
        throw std::invalid_argument("two_bumps: supports overlap");
}

void check_barenblatt(const BarenblattData& d) {
    if (!(d.t0 > 0.0)) throw std::invalid_argument("barenblatt: t0 must be > 0");
    if (!(d.mass > 0.0)) throw std::invalid_argument("barenblatt: mass must be > 0");
}

} // namespace

double initial_value(const InitialData& data, double x, double m) {
    if (!(m > 1.0)) throw std::invalid_argument("initial_value: m must be > 1");
    return std::visit(
        [&](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BumpData>) {
                check_bump(d);
                return bump_value(d, x, m);
            } else if constexpr (std::is_same_v<T, TwoBumpsData>) {
                check_two_bumps(d);
                return bump_value({d.c1, d.width, d.height}, x, m) +
                       bump_value({d.c2, d.width, d.height}, x, m);
            } else if constexpr (std::is_same_v<T, BarenblattData>) {
                check_barenblatt(d);
                const auto p = pme::make_profile(m, d.mass);
                return pme::barenblatt_value(p, x, d.t0);
            } else {
                return 0.0;
            }
        },
        data);
}

ScalarField sample_initial_data(const InitialData& data, const Grid1D& grid, double m) {
    ScalarField f = make_field(grid);
    for (int i = 0; i < grid.n_cells; ++i)
        f.values(i) = initial_value(data, grid.center(i), m);
    return f;
}

SupportInterval analytic_support(const InitialData& data, double m) {
    return std::visit(
        [&](const auto& d) -> SupportInterval {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, BumpData>) {
                return {d.center - d.width, d.center + d.width};
            } else if constexpr (std::is_same_v<T, TwoBumpsData>) {
                return {d.c1 - d.width, d.c2 + d.width};
            } else if constexpr (std::is_same_v<T, BarenblattData>) {
                const auto p = pme::make_profile(m, d.mass);
                const double e = pme::support_edge(p, d.t0);
                return {-e, e};
            } else {
                return SupportInterval{};
            }
        },
        data);
}

} // namespace ks
