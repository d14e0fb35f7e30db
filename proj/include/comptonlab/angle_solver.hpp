#pragma once

#include <cstddef>
#include <vector>

namespace comptonlab {

// Bisection interval width for every angle root in this module; comfortably
// below the 1e-9 rad the results are quoted at.
inline constexpr double kAngleRootTolerance = 1e-12;

// One interferometer-arm configuration: two scattering angles with equal
// differential cross section (when produced by the equiprobable solver),
// canonicalized to theta1 > theta0.
struct AnglePair {
    double theta0 = 0.0;
    double theta1 = 0.0;
    double epsilon = 0.0;
    double xsection = 0.0;         // shared dimensionless cross-section value
    double delta_lambda_rel = 0.0; // |l1 - l0| / mean(l1, l0)
    double lambda_theta0 = 0.0;    // [m], for lambda0 = lambda_C / epsilon
    double lambda_theta1 = 0.0;    // [m]
};

struct EquiprobableCurve {
    std::vector<AnglePair> pairs; // ordered by theta0, closed at the minimum
    std::size_t skipped = 0;      // theta0 samples with no far-branch partner
};

struct CurveMaximum {
    double value = 0.0;
    AnglePair at_pair{};
};

/// Assemble an AnglePair for two arbitrary angles (no equiprobability implied).
AnglePair angle_pair(double epsilon, double theta0, double theta1);

/// The unique theta1 in (theta_min, pi] with the same cross section as theta0.
/// Throws no_solution_error where the equiprobable curve has terminated
/// (cross section at theta0 above the value at pi).
double equiprobable_partner(double epsilon, double theta0);

/// Inverse solve: the near-branch pair of a far-branch angle. Always exists
/// for theta1 in [theta_min, pi].
AnglePair equiprobable_pair_from_theta1(double epsilon, double theta1);

/// Sample the equiprobable curve at n_points uniform theta0 values in
/// [0, theta_min), dropping no-partner samples, closing at the degenerate
/// pair (theta_min, theta_min).
EquiprobableCurve equiprobable_curve(double epsilon, std::size_t n_points);

/// Relative wavelength difference between the two arms (unsigned, symmetric).
double delta_lambda_rel(double epsilon, double theta0, double theta1);

/// Solve delta_lambda_rel(epsilon, theta0, theta1) = target for theta1 > theta0
/// in closed form. Throws no_solution_error when the contour does not reach
/// this theta0.
double contour_theta1(double epsilon, double theta0, double target);

/// The point on the equiprobable curve whose delta_lambda_rel equals the
/// target, found by bisection in theta0 (the value decreases monotonically
/// along the curve toward the degenerate point).
AnglePair select_pair(double epsilon, double target_dlrel);

/// Largest delta_lambda_rel attained on the equiprobable curve, at the curve
/// terminus where the far-branch partner is exactly pi.
CurveMaximum max_delta_lambda_rel(double epsilon);

} // namespace comptonlab
