#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "iondesign/constants.hpp"
#include "iondesign/species.hpp"

namespace iondesign::core {

// Closest-ion spacing in an N-ion harmonic string, s_min = 2.018 l N^-0.559
// with l^3 = e^2/(4 pi eps0 m omega_z^2). Fit constants from the ion-string
// literature; they reproduce quoted trap frequencies to ~10%.
inline constexpr double string_spacing_prefactor = 2.018;
inline constexpr double string_spacing_exponent = 0.559;

/// Coulomb length scale of an ion string, l = (e^2/(4 pi eps0 m w^2))^(1/3).
inline double string_length_scale(double mass, double omega_z) {
    if (mass <= 0.0 || omega_z <= 0.0)
        throw std::domain_error("string_length_scale: inputs must be positive");
    return std::cbrt(constants::coulomb_e2 / (mass * omega_z * omega_z));
}

/// Minimum spacing of the N-ion string at axial frequency omega_z.
inline double min_string_spacing(double mass, double omega_z, int n_ions) {
    if (n_ions < 2) throw std::domain_error("min_string_spacing: need n_ions >= 2");
    return string_spacing_prefactor * string_length_scale(mass, omega_z) *
           std::pow(static_cast<double>(n_ions), -string_spacing_exponent);
}

/// Largest axial frequency keeping the closest ions at least
/// spacing_multiple * lambda apart.
inline double axial_freq_for_spacing(const IonSpecies& species, int n_ions,
                                     double spacing_multiple) {
    if (n_ions < 2) throw std::domain_error("axial_freq_for_spacing: need n_ions >= 2");
    if (spacing_multiple <= 0.0)
        throw std::domain_error("axial_freq_for_spacing: spacing must be positive");
    const double target = spacing_multiple * species.lambda;
    const double reach = string_spacing_prefactor *
                         std::pow(static_cast<double>(n_ions), -string_spacing_exponent);
    // s_min = reach * l(omega) with l ∝ omega^(-2/3); solve s_min = target.
    return std::sqrt(constants::coulomb_e2 / species.mass) *
           std::pow(reach / target, 1.5);
}

inline constexpr double default_geometry_factor = 1.4142135623730951;  // two beams at 90 deg

/// Ion string in a linear trap, with the Lamb-Dicke parameter of the
/// N-ion centre-of-mass mode.
struct TrapConfig {
    IonSpecies species;
    int n_ions = 1;
    double omega_z = 0.0;           // rad/s, axial COM frequency
    double spacing_multiple = 5.0;  // s = c_s * lambda
    double geometry_factor = default_geometry_factor;  // effective-wavevector multiplier
    double eta = 0.0;               // Lamb-Dicke parameter, derived
};

/// Lamb-Dicke parameter of the COM mode,
/// eta = geometry_factor * (2 pi / lambda) * sqrt(hbar / (2 N m omega_z)).
inline double lamb_dicke(const TrapConfig& trap) {
    if (trap.n_ions < 1) throw std::domain_error("lamb_dicke: need n_ions >= 1");
    if (trap.omega_z <= 0.0) throw std::domain_error("lamb_dicke: omega_z must be positive");
    const double total_mass = static_cast<double>(trap.n_ions) * trap.species.mass;
    return trap.geometry_factor * (constants::two_pi / trap.species.lambda) *
           std::sqrt(constants::hbar / (2.0 * total_mass * trap.omega_z));
}

/// Builds a trap at the largest omega_z allowed by the spacing rule.
inline TrapConfig make_trap_for_spacing(const IonSpecies& species, int n_ions,
                                        double spacing_multiple,
                                        double geometry_factor = default_geometry_factor) {
    TrapConfig t;
    t.species = species;
    t.n_ions = n_ions;
    t.spacing_multiple = spacing_multiple;
    t.geometry_factor = geometry_factor;
    t.omega_z = axial_freq_for_spacing(species, n_ions, spacing_multiple);
    t.eta = lamb_dicke(t);
    return t;
}

inline TrapConfig make_trap_at_frequency(const IonSpecies& species, int n_ions,
                                         double omega_z,
                                         double geometry_factor = default_geometry_factor) {
    TrapConfig t;
    t.species = species;
    t.n_ions = n_ions;
    t.omega_z = omega_z;
    t.geometry_factor = geometry_factor;
    t.eta = lamb_dicke(t);
    return t;
}

inline bool lamb_dicke_regime_ok(const TrapConfig& t) {
    return t.eta > 0.0 && t.eta < 1.0;
}

/// Addressing-beam waist for a given intensity crosstalk on the neighbour ion,
/// crosstalk = exp(-2 s^2 / w^2)  =>  w = s sqrt(2 / ln(1/crosstalk)).
inline double addressing_waist(double spacing, double crosstalk) {
    if (spacing <= 0.0) throw std::domain_error("addressing_waist: spacing must be positive");
    if (crosstalk <= 0.0 || crosstalk >= 1.0)
        throw std::domain_error("addressing_waist: crosstalk must be in (0,1)");
    return spacing * std::sqrt(2.0 / std::log(1.0 / crosstalk));
}

}  // namespace iondesign::core
