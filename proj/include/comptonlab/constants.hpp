#pragma once

namespace comptonlab {

// CODATA-2018 values. h, c and e are exact by the 2019 SI redefinition; the
// electron mass and vacuum permittivity carry their CODATA uncertainty.
struct PhysicalConstants {
    double h = 6.62607015e-34;                  // Planck constant [J s]
    double c = 299792458.0;                     // speed of light in vacuum [m/s]
    double m_e = 9.1093837015e-31;              // electron mass [kg]
    double elementary_charge = 1.602176634e-19; // [C]
    double vacuum_permittivity = 8.8541878128e-12; // [F/m]

    /// Compton wavelength h/(m_e c) [m], about 2.42631 pm.
    double compton_wavelength() const { return h / (m_e * c); }

    /// Electron rest energy m_e c^2 [J].
    double electron_rest_energy() const { return m_e * c * c; }

    /// Classical electron radius e^2 / (4 pi eps0 m_e c^2) [m].
    double classical_electron_radius() const {
        constexpr double four_pi = 12.566370614359172;
        return elementary_charge * elementary_charge /
               (four_pi * vacuum_permittivity * electron_rest_energy());
    }
};

} // namespace comptonlab
