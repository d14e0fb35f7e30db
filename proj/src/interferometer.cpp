#include "comptonlab/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "comptonlab/constants.hpp"
#include "comptonlab/errors.hpp"

namespace comptonlab {

double ReducedState::purity() const {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sum += std::norm(m[i][j]);
    return sum;
}

std::array<double, 2> ReducedState::eigenvalues() const {
    const double half_trace = 0.5 * (m[0][0].real() + m[1][1].real());
    const double det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).real();
    const double disc = std::sqrt(std::max(0.0, half_trace * half_trace - det));
    return {half_trace - disc, half_trace + disc};
}

InterferometerModel build_model(double epsilon, const AnglePair& pair,
                                double sigma_over_lambda0) {
    if (!std::isfinite(sigma_over_lambda0) || sigma_over_lambda0 <= 0.0)
        throw domain_error("build_model: sigma_over_lambda0 must be finite and positive");
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error("build_model: epsilon must be finite and positive");

    const double lambda0 = PhysicalConstants{}.compton_wavelength() / epsilon;
    InterferometerModel model;
    model.pair = pair;
    model.line0 = make_line(pair.lambda_theta0, sigma_over_lambda0 * lambda0);
    model.line1 = make_line(pair.lambda_theta1, sigma_over_lambda0 * lambda0);
    model.overlap = overlap_closed(model.line0, model.line1);
    return model;
}

ReducedState reduced_density(const MarkerOverlap& overlap, double phi) {
    const double s = overlap.magnitude * std::sin(phi + overlap.phase);
    const double c = overlap.magnitude * std::cos(phi + overlap.phase);
    ReducedState rho;
    rho.m[0][0] = 0.5 * (1.0 - s);
    rho.m[0][1] = 0.5 * c;
    rho.m[1][0] = 0.5 * c;
    rho.m[1][1] = 0.5 * (1.0 + s);
    return rho;
}

double detection_probability(const MarkerOverlap& overlap, double phi) {
    const double p =
        0.5 * (1.0 - overlap.magnitude * std::sin(phi + overlap.phase));
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw tolerance_error("detection_probability: probability out of [0, 1]");
    return std::clamp(p, 0.0, 1.0);
}

double visibility_from_scan(std::span<const PhiSample> samples) {
    if (samples.size() < 32)
        throw domain_error("visibility_from_scan: need at least 32 samples");
    double phi_lo = std::numeric_limits<double>::infinity();
    double phi_hi = -phi_lo;
    double p_lo = std::numeric_limits<double>::infinity();
    double p_hi = -p_lo;
    for (const PhiSample& s : samples) {
        phi_lo = std::min(phi_lo, s.phi);
        phi_hi = std::max(phi_hi, s.phi);
        p_lo = std::min(p_lo, s.p);
        p_hi = std::max(p_hi, s.p);
    }
    const double n = static_cast<double>(samples.size());
    // A uniform n-point grid over [0, 2 pi) spans 2 pi (n-1)/n; accept any
    // scan at least that dense about a full period.
    if (phi_hi - phi_lo < 2.0 * M_PI * (n - 2.0) / n)
        throw domain_error("visibility_from_scan: samples must span a full 2 pi period");
    const double denom = p_hi + p_lo;
    if (denom <= 0.0) return 0.0;
    return (p_hi - p_lo) / denom;
}

double distinguishability(const MarkerOverlap& overlap) {
    const double a = overlap.magnitude;
    return std::sqrt(std::max(0.0, 1.0 - a * a));
}

} // namespace comptonlab
