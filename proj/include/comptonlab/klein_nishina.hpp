#pragma once

namespace comptonlab {

// Unpolarized differential cross section at one (epsilon, theta).
// value_dimensionless is (1/r0^2) dSigma/dOmega; the absolute value attaches
// r0^2 only here, at the output boundary.
struct CrossSectionValue {
    double value_dimensionless = 0.0;
    double value_absolute = 0.0; // [m^2/sr]
    double epsilon = 0.0;
    double theta = 0.0;
};

struct XsectionMinimum {
    double theta_min = 0.0;
    double value = 0.0; // dimensionless
};

/// Klein-Nishina differential cross section,
/// (1/2) (lambda0/lambda_theta)^2 [lambda0/lambda_theta + lambda_theta/lambda0 - sin^2 theta].
CrossSectionValue diff_cross_section(double epsilon, double theta);

/// Thomson limit (1 + cos^2 theta)/2; the epsilon -> 0 reference.
double thomson_reference(double theta);

/// Unique minimizer of the cross section on [0, pi], by golden section.
/// Unimodality holds for the epsilon range supported here (<= 0.25).
XsectionMinimum xsection_minimum(double epsilon);

namespace detail {

// Hot kernel without validation; callers guarantee epsilon > 0, theta in [0, pi].
double kn_dimensionless(double epsilon, double theta);

} // namespace detail
} // namespace comptonlab
