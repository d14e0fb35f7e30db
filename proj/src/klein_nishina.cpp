#include "comptonlab/klein_nishina.hpp"

#include <cmath>
#include <string>

#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"
#include "comptonlab/numerics.hpp"

namespace comptonlab {

namespace detail {

double kn_dimensionless(double epsilon, double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double ratio = 1.0 + epsilon * (1.0 - c);
    const double inv = 1.0 / ratio;
    return 0.5 * inv * inv * (inv + ratio - s * s);
}

} // namespace detail

namespace {

void validate(double epsilon, double theta, const char* where) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error(std::string(where) + ": epsilon must be finite and positive");
    if (!(theta >= 0.0 && theta <= M_PI))
        throw domain_error(std::string(where) + ": theta must lie in [0, pi]");
}

} // namespace

CrossSectionValue diff_cross_section(double epsilon, double theta) {
    validate(epsilon, theta, "diff_cross_section");
    CrossSectionValue v;
    v.value_dimensionless = detail::kn_dimensionless(epsilon, theta);
    const double r0 = PhysicalConstants{}.classical_electron_radius();
    v.value_absolute = v.value_dimensionless * r0 * r0;
    v.epsilon = epsilon;
    v.theta = theta;
    return v;
}

double thomson_reference(double theta) {
    if (!(theta >= 0.0 && theta <= M_PI))
        throw domain_error("thomson_reference: theta must lie in [0, pi]");
    const double c = std::cos(theta);
    return 0.5 * (1.0 + c * c);
}

XsectionMinimum xsection_minimum(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error("xsection_minimum: epsilon must be finite and positive");
#ifndef NDEBUG
    // Unimodality pre-scan: no interior local minimum other than the global one.
    {
        const int n = 2048;
        int sign_changes = 0;
        double prev = detail::kn_dimensionless(epsilon, 0.0);
        double prev_delta = 0.0;
        for (int i = 1; i <= n; ++i) {
            const double cur = detail::kn_dimensionless(epsilon, M_PI * i / n);
            const double delta = cur - prev;
            if (delta * prev_delta < 0.0) ++sign_changes;
            if (delta != 0.0) prev_delta = delta;
            prev = cur;
        }
        if (sign_changes > 1)
            throw tolerance_error("xsection_minimum: cross section is not unimodal here");
    }
#endif
    XsectionMinimum m;
    m.theta_min = numerics::golden_min(
        [epsilon](double th) { return detail::kn_dimensionless(epsilon, th); }, 0.0,
        M_PI, 1e-10);
    m.value = detail::kn_dimensionless(epsilon, m.theta_min);
    return m;
}

} // namespace comptonlab
