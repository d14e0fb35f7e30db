#include "comptonlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "comptonlab/errors.hpp"
#include "comptonlab/numerics.hpp"

namespace comptonlab {

namespace {

constexpr double kQuadTol = kOverlapQuadTolerance;

void validate_line(const SpectralLine& line, const char* where) {
    if (!std::isfinite(line.center) || !std::isfinite(line.sigma) ||
        line.sigma <= 0.0 || line.center <= 8.0 * line.sigma)
        throw domain_error(std::string(where) +
                           ": line requires sigma > 0 and center > 8 sigma");
}

double zeta_of(const SpectralLine& a, const SpectralLine& b) {
    return std::abs(a.center - b.center) / (0.5 * (a.sigma + b.sigma));
}

} // namespace

SpectralLine make_line(double center, double sigma) {
    SpectralLine line{center, sigma, LineShape::gaussian};
    validate_line(line, "make_line");
    return line;
}

double amplitude(const SpectralLine& line, double lambda) {
    validate_line(line, "amplitude");
    if (!(lambda > 0.0))
        throw domain_error("amplitude: lambda must be positive");
    const double peak = 1.0 / std::sqrt(line.sigma * std::sqrt(M_PI));
    const double d = (lambda - line.center) / line.sigma;
    return peak * std::exp(-0.5 * d * d);
}

MarkerOverlap overlap_closed(const SpectralLine& a, const SpectralLine& b) {
    validate_line(a, "overlap_closed");
    validate_line(b, "overlap_closed");
    const double sigma = 0.5 * (a.sigma + b.sigma);
    if (std::abs(a.sigma - b.sigma) > 1e-12 * sigma)
        throw unsupported_error(
            "overlap_closed: widths differ; use overlap_quadrature");

    MarkerOverlap o;
    o.zeta = zeta_of(a, b);
    const double d = std::abs(a.center - b.center);
    o.magnitude = std::exp(-d * d / (4.0 * sigma * sigma));
    o.phase = 0.0;
    return o;
}

MarkerOverlap overlap_quadrature(const SpectralLine& a, const SpectralLine& b) {
    validate_line(a, "overlap_quadrature");
    validate_line(b, "overlap_quadrature");

    const double sigma_max = std::max(a.sigma, b.sigma);
    const double lo = std::min(a.center, b.center) - 8.0 * sigma_max;
    const double hi = std::max(a.center, b.center) + 8.0 * sigma_max;
    // Work in units of sigma_max so the integrand is O(1) on an O(1) interval.
    const double peak_a = 1.0 / std::sqrt(a.sigma * std::sqrt(M_PI));
    const double peak_b = 1.0 / std::sqrt(b.sigma * std::sqrt(M_PI));
    const double scale = peak_a * peak_b * sigma_max;
    const auto product = [&](double u) {
        const double lambda = lo + u * sigma_max;
        const double da = (lambda - a.center) / a.sigma;
        const double db = (lambda - b.center) / b.sigma;
        return scale * std::exp(-0.5 * (da * da + db * db));
    };

    MarkerOverlap o;
    o.zeta = zeta_of(a, b);
    o.magnitude =
        numerics::integrate(product, 0.0, (hi - lo) / sigma_max, kQuadTol);
    // The product of real positive amplitudes cannot integrate negative;
    // tolerate quadrature noise around zero for far-separated lines.
    o.magnitude = std::clamp(o.magnitude, 0.0, 1.0);
    o.phase = 0.0;
    return o;
}

} // namespace comptonlab
