#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "iondesign/constants.hpp"

namespace iondesign::core {

/// Angular frequency of light at vacuum wavelength lambda.
inline double omega_from_wavelength(double lambda) {
    if (lambda <= 0.0) throw std::domain_error("wavelength must be positive");
    return constants::two_pi * constants::c_light / lambda;
}

inline double wavelength_from_omega(double omega) {
    if (omega <= 0.0) throw std::domain_error("omega must be positive");
    return constants::two_pi * constants::c_light / omega;
}

/// Spontaneous decay rate of a two-level dipole transition,
/// Gamma = omega^3 d^2 / (3 pi eps0 hbar c^3).
inline double gamma_from_dipole(double dipole, double omega) {
    if (dipole <= 0.0) throw std::domain_error("dipole must be positive");
    if (omega <= 0.0) throw std::domain_error("omega must be positive");
    const double c3 = constants::c_light * constants::c_light * constants::c_light;
    return omega * omega * omega * dipole * dipole /
           (3.0 * constants::pi * constants::epsilon0 * constants::hbar * c3);
}

/// Inverse of gamma_from_dipole; round-trip is the identity.
inline double dipole_from_gamma(double gamma, double omega) {
    if (gamma <= 0.0) throw std::domain_error("gamma must be positive");
    if (omega <= 0.0) throw std::domain_error("omega must be positive");
    const double c3 = constants::c_light * constants::c_light * constants::c_light;
    return std::sqrt(gamma * 3.0 * constants::pi * constants::epsilon0 *
                     constants::hbar * c3 / (omega * omega * omega));
}

/// Atomic species driven on its strong dipole transition. All rates are
/// angular (rad/s); external files quote nu = omega/2pi instead.
struct IonSpecies {
    std::string name;
    double mass = 0.0;                 // kg
    double lambda = 0.0;               // m, strong transition wavelength
    double gamma = 0.0;                // rad/s, natural linewidth (full width)
    double dipole = 0.0;               // C m, derived from gamma
    double hyperfine_splitting = 0.0;  // rad/s, 0 when the isotope has none

    double transition_omega() const { return omega_from_wavelength(lambda); }
};

/// Builds a species record deriving the dipole moment from the linewidth.
inline IonSpecies make_species(std::string name, double mass_kg, double lambda,
                               double gamma, double hyperfine = 0.0) {
    if (mass_kg <= 0.0) throw std::domain_error("mass must be positive");
    IonSpecies s;
    s.name = std::move(name);
    s.mass = mass_kg;
    s.lambda = lambda;
    s.gamma = gamma;
    s.dipole = dipole_from_gamma(gamma, omega_from_wavelength(lambda));
    s.hyperfine_splitting = hyperfine;
    return s;
}

/// Relative defect of the gamma <-> dipole round trip; 0 for a consistent record.
inline double species_dipole_defect(const IonSpecies& s) {
    const double back = gamma_from_dipole(s.dipole, s.transition_omega());
    return std::abs(back - s.gamma) / s.gamma;
}

}  // namespace iondesign::core
