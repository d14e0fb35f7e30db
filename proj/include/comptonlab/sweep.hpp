#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "comptonlab/angle_solver.hpp"

namespace comptonlab {

struct Axis {
    std::string name;
    std::string units;
    std::vector<double> values;
};

// Labeled 2-D grid of scalars, row-major: values[i * x.size() + j] belongs to
// (y.values[i], x.values[j]). All values are finite; rows that cannot be
// computed are omitted from the axis rather than padded.
struct SweepGrid {
    Axis x;
    Axis y;
    std::string value_name = "value";
    std::vector<double> values;
    std::map<std::string, std::string> metadata;

    double at(std::size_t i, std::size_t j) const {
        return values[i * x.values.size() + j];
    }
};

struct ContourPolyline {
    double target = 0.0;
    std::vector<double> theta0;
    std::vector<double> theta1;
    std::size_t skipped = 0; // grid points the contour does not reach
};

// Everything one (theta0, theta1)-plane panel carries: the cross-section
// curve over theta, the equiprobable curve, and constant-delta_lambda_rel
// contours, all restricted to theta1 > theta0.
struct Fig3Panel {
    double epsilon = 0.0;
    std::vector<double> theta;
    std::vector<double> xsection;
    EquiprobableCurve equiprobable;
    std::vector<ContourPolyline> contours;
};

struct Fig4Surface {
    SweepGrid grid;                         // y: theta1 rows, x: phi
    std::vector<double> theta0;             // equiprobable partner per kept row
    std::vector<double> overlap_magnitude;  // |A| per kept row
    std::size_t omitted = 0;
};

namespace defaults {
inline constexpr std::size_t phi_points = 256;
inline constexpr std::size_t zeta_points = 128;
inline constexpr std::size_t theta_points = 512;
inline constexpr std::size_t theta1_rows = 128;
inline constexpr double zeta_max = 5.0;
} // namespace defaults

/// Inclusive linear grid; last point lands on b exactly.
std::vector<double> linspace(double a, double b, std::size_t n);

/// Detection probability over (phi, zeta) with |A| = exp(-zeta^2/4), delta = 0.
SweepGrid fig2_surface(std::span<const double> phi_grid,
                       std::span<const double> zeta_grid);

/// Dimensionless cross-section values on a (epsilon, theta) grid.
SweepGrid xsection_family(std::span<const double> epsilons,
                          std::span<const double> theta_grid);

/// One panel: cross-section curve, equiprobable curve, contour polylines.
Fig3Panel fig3_panel(double epsilon, std::span<const double> theta_grid,
                     std::span<const double> contour_targets);

/// Detection probability over (phi, theta1) along the equiprobable curve,
/// with marker width sigma_over_lambda0 * lambda0 on both arms. Rows outside
/// [theta_min, pi] are omitted and counted.
Fig4Surface fig4_surface(double epsilon, double sigma_over_lambda0,
                         std::span<const double> phi_grid,
                         std::span<const double> theta1_grid);

/// Default fig4 row grid: rows points in (theta_min, pi].
std::vector<double> default_theta1_grid(double epsilon,
                                        std::size_t rows = defaults::theta1_rows);

/// Thread cap from COMPTON_LAB_THREADS (0 means unset / use hardware default).
unsigned sweep_thread_cap();

} // namespace comptonlab
