#pragma once

namespace comptonlab {

// Absolute tolerance of the adaptive overlap quadrature.
inline constexpr double kOverlapQuadTolerance = 1e-10;

enum class LineShape { gaussian };

// L2-normalized wavelength amplitude of one marker state. The positivity of
// lambda is handled by requiring center > 8 sigma, which keeps the neglected
// tail mass below 1e-14.
struct SpectralLine {
    double center = 0.0; // [m]
    double sigma = 0.0;  // [m]
    LineShape shape = LineShape::gaussian;
};

// Overlap <a|b> of two marker amplitudes. zeta is the center separation in
// units of the mean width; for equal widths it is |dc|/sigma.
struct MarkerOverlap {
    double magnitude = 0.0; // in [0, 1]
    double phase = 0.0;     // [rad]; zero for real amplitudes
    double zeta = 0.0;
};

/// Validated constructor; throws domain_error unless sigma > 0 and center > 8 sigma.
SpectralLine make_line(double center, double sigma);

/// Amplitude value (sigma sqrt(pi))^{-1/2} exp[-(lambda-center)^2/(2 sigma^2)],
/// in m^{-1/2}.
double amplitude(const SpectralLine& line, double lambda);

/// Equal-width Gaussian overlap in closed form: exp[-(dc)^2/(4 sigma^2)].
/// Unequal widths raise unsupported_error; use overlap_quadrature for those.
MarkerOverlap overlap_closed(const SpectralLine& a, const SpectralLine& b);

/// Overlap by adaptive quadrature of the amplitude product over
/// [min(center) - 8 sigma_max, max(center) + 8 sigma_max], to 1e-10 absolute.
MarkerOverlap overlap_quadrature(const SpectralLine& a, const SpectralLine& b);

} // namespace comptonlab
