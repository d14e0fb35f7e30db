#pragma once

#include "comptonlab/constants.hpp"

namespace comptonlab {

// Incident-photon configuration. epsilon is the photon energy in units of the
// electron rest energy, (hc/lambda0)/(m_e c^2) = lambda_C/lambda0.
struct ScatteringConfig {
    double lambda0 = 0.0; // incident wavelength [m]
    double epsilon = 0.0;
    PhysicalConstants constants{};
};

struct PhotonOut {
    double lambda = 0.0; // scattered wavelength [m]
    double theta = 0.0;  // scattering polar angle [rad]
};

// Electron recoil for a photon scattered into theta. theta_m is measured from
// the incident direction, on the opposite side of the scattered photon.
struct RecoilResult {
    double p_m = 0.0;     // electron momentum magnitude [kg m/s]
    double theta_m = 0.0; // recoil polar angle [rad]
    double E_m = 0.0;     // total electron energy [J]
    PhotonOut photon_out{};
};

struct ConservationResidual {
    double energy = 0.0;   // |E_in - E_out| / E_in
    double momentum = 0.0; // |p_in - p_out| / |p_in|
};

/// Build a configuration from the incident wavelength [m].
ScatteringConfig make_config(double lambda0);

/// Build a configuration from epsilon; lambda0 = lambda_C / epsilon.
ScatteringConfig config_from_epsilon(double epsilon);

/// Scattered wavelength lambda_theta = lambda0 + lambda_C (1 - cos theta).
double compton_shift(const ScatteringConfig& cfg, double theta);

/// lambda_theta / lambda0 = 1 + epsilon (1 - cos theta).
double wavelength_ratio(double epsilon, double theta);

/// Electron recoil from componentwise energy-momentum conservation.
RecoilResult recoil(const ScatteringConfig& cfg, double theta);

/// Relative conservation residuals of a recoil result; both vanish (to
/// rounding) for recoil() output and grow for any perturbed record.
ConservationResidual conservation_residual(const ScatteringConfig& cfg,
                                           double theta, const RecoilResult& r);

} // namespace comptonlab
