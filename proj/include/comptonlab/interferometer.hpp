#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "comptonlab/angle_solver.hpp"
#include "comptonlab/spectral.hpp"

namespace comptonlab {

// Two equiprobable arms with their marker lines and overlap. Reflections at
// the beam-splitters contribute a fixed factor i; the device phase mismatch
// is absorbed into the relative phase phi.
struct InterferometerModel {
    AnglePair pair{};
    SpectralLine line0{};
    SpectralLine line1{};
    MarkerOverlap overlap{};
    std::complex<double> reflection_phase{0.0, 1.0};
};

// 2x2 density matrix over the path basis {|0>, |1>}.
struct ReducedState {
    std::array<std::array<std::complex<double>, 2>, 2> m{};

    std::complex<double> trace() const { return m[0][0] + m[1][1]; }
    /// Tr rho^2; equals (1 + |A|^2)/2 for this family of states.
    double purity() const;
    /// Eigenvalues in ascending order (the state is Hermitian).
    std::array<double, 2> eigenvalues() const;
};

struct PhiSample {
    double phi = 0.0;
    double p = 0.0;
};

/// Arm lines centered on the pair's wavelengths, width sigma_over_lambda0 *
/// lambda0 shared by both arms, overlap in closed form.
InterferometerModel build_model(double epsilon, const AnglePair& pair,
                                double sigma_over_lambda0);

/// Path-basis state after tracing out the marker:
/// (1/2) [[1 - |A| sin(phi+d), |A| cos(phi+d)], [|A| cos(phi+d), 1 + |A| sin(phi+d)]].
ReducedState reduced_density(const MarkerOverlap& overlap, double phi);

/// Probability of detection on path 0: (1/2)[1 - |A| sin(phi + d)].
double detection_probability(const MarkerOverlap& overlap, double phi);

/// Fringe contrast (max - min)/(max + min) of a full-period phase scan.
/// Requires at least 32 samples spanning (about) a 2 pi period.
double visibility_from_scan(std::span<const PhiSample> samples);

/// Which-way information measure sqrt(1 - |A|^2); D^2 + V^2 = 1 with V = |A|.
double distinguishability(const MarkerOverlap& overlap);

} // namespace comptonlab
