#include "comptonlab/kinematics.hpp"

#include <cmath>
#include <string>

#include "comptonlab/errors.hpp"

namespace comptonlab {

namespace {

void require_polar_angle(double theta, const char* where) {
    if (!(theta >= 0.0 && theta <= M_PI))
        throw domain_error(std::string(where) + ": theta must lie in [0, pi], got " +
                           std::to_string(theta));
}

} // namespace

ScatteringConfig make_config(double lambda0) {
    if (!std::isfinite(lambda0) || lambda0 <= 0.0)
        throw domain_error("make_config: lambda0 must be finite and positive");
    ScatteringConfig cfg;
    cfg.lambda0 = lambda0;
    cfg.epsilon = cfg.constants.compton_wavelength() / lambda0;
    return cfg;
}

ScatteringConfig config_from_epsilon(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error("config_from_epsilon: epsilon must be finite and positive");
    PhysicalConstants constants;
    return make_config(constants.compton_wavelength() / epsilon);
}

double compton_shift(const ScatteringConfig& cfg, double theta) {
    require_polar_angle(theta, "compton_shift");
    return cfg.lambda0 +
           cfg.constants.compton_wavelength() * (1.0 - std::cos(theta));
}

double wavelength_ratio(double epsilon, double theta) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw domain_error("wavelength_ratio: epsilon must be finite and positive");
    require_polar_angle(theta, "wavelength_ratio");
    return 1.0 + epsilon * (1.0 - std::cos(theta));
}

RecoilResult recoil(const ScatteringConfig& cfg, double theta) {
    require_polar_angle(theta, "recoil");
    const PhysicalConstants& k = cfg.constants;

    RecoilResult r;
    if (theta == 0.0) {
        // Forward scattering: photon unchanged, electron exactly at rest.
        r.p_m = 0.0;
        r.theta_m = 0.0;
        r.E_m = k.electron_rest_energy();
        r.photon_out = {cfg.lambda0, 0.0};
        return r;
    }

    const double lambda_theta = compton_shift(cfg, theta);
    // Incident photon along +z; scattered photon in the x>0 half-plane.
    const double p_in = k.h / cfg.lambda0;
    const double p_out = k.h / lambda_theta;
    const double ex = -p_out * std::sin(theta); // electron transverse component
    const double ez = p_in - p_out * std::cos(theta);

    r.p_m = std::hypot(ex, ez);
    r.theta_m = std::atan2(-ex, ez);
    r.E_m = k.h * k.c / cfg.lambda0 + k.electron_rest_energy() -
            k.h * k.c / lambda_theta;
    r.photon_out = {lambda_theta, theta};
    return r;
}

ConservationResidual conservation_residual(const ScatteringConfig& cfg,
                                           double theta, const RecoilResult& r) {
    require_polar_angle(theta, "conservation_residual");
    const PhysicalConstants& k = cfg.constants;

    const double e_in = k.h * k.c / cfg.lambda0 + k.electron_rest_energy();
    const double e_out = k.h * k.c / r.photon_out.lambda + r.E_m;

    const double p_in = k.h / cfg.lambda0;
    const double p_photon = k.h / r.photon_out.lambda;
    // Electron reconstructed on the opposite side of the scattered photon.
    const double out_x =
        p_photon * std::sin(theta) - r.p_m * std::sin(r.theta_m);
    const double out_z =
        p_photon * std::cos(theta) + r.p_m * std::cos(r.theta_m);

    ConservationResidual res;
    res.energy = std::abs(e_in - e_out) / e_in;
    res.momentum = std::hypot(out_x, out_z - p_in) / p_in;
    return res;
}

} // namespace comptonlab
