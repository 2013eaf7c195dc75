#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "iondesign/constants.hpp"
#include "iondesign/species.hpp"

namespace iondesign::core {

/// Single-photon (vacuum) Rabi frequency g = d sqrt(2 omega / (eps0 hbar V)).
inline double single_photon_g(double dipole, double omega, double mode_volume) {
    if (dipole <= 0.0 || omega <= 0.0 || mode_volume <= 0.0)
        throw std::domain_error("single_photon_g: inputs must be positive");
    return dipole * std::sqrt(2.0 * omega /
                              (constants::epsilon0 * constants::hbar * mode_volume));
}

/// Cavity field decay rate kappa = c pi / (F L).
inline double cavity_kappa(double finesse, double length) {
    if (finesse <= 0.0 || length <= 0.0)
        throw std::domain_error("cavity_kappa: inputs must be positive");
    return constants::c_light * constants::pi / (finesse * length);
}

/// Waist of the fundamental Gaussian mode of a symmetric two-mirror resonator,
/// w0^2 = (lambda/2pi) sqrt(L (2R - L)). Valid for 0 < L < 2R.
inline double gaussian_waist(double lambda, double length, double mirror_curvature) {
    if (lambda <= 0.0 || length <= 0.0 || mirror_curvature <= 0.0)
        throw std::domain_error("gaussian_waist: inputs must be positive");
    if (length >= 2.0 * mirror_curvature)
        throw std::domain_error("gaussian_waist: unstable resonator (L >= 2R)");
    return std::sqrt(lambda / constants::two_pi *
                     std::sqrt(length * (2.0 * mirror_curvature - length)));
}

/// g^2/Gamma figure of merit, 3 c lambda^2 / (2 pi V). Identical to combining
/// single_photon_g with gamma_from_dipole for any dipole moment.
inline double g_squared_over_gamma(double lambda, double mode_volume) {
    if (lambda <= 0.0 || mode_volume <= 0.0)
        throw std::domain_error("g_squared_over_gamma: inputs must be positive");
    return 3.0 * constants::c_light * lambda * lambda /
           (constants::two_pi * mode_volume);
}

enum class CavityKind { fabry_perot, microsphere };

/// Resolved cavity geometry with the derived coupling figures. Fabry-Perot
/// cavities derive everything from (L, F, R, species); microspheres are
/// specified through the measured ratios g/Gamma and g/kappa of a reference
/// sphere, scaled as g, kappa ∝ reference_radius/radius.
struct CavityConfig {
    CavityKind kind = CavityKind::fabry_perot;
    std::string species_name;

    // Fabry-Perot geometry
    double length = 0.0;            // m
    double finesse = 0.0;
    double mirror_curvature = 0.0;  // m

    // Microsphere geometry
    double sphere_radius = 0.0;     // m
    double reference_radius = 0.0;  // m, sphere for which the ratios are quoted
    double quality_factor = 0.0;
    double g_over_gamma = 0.0;      // at the reference radius
    double g_over_kappa = 0.0;

    // Derived fields
    double waist = 0.0;        // m
    double mode_volume = 0.0;  // m^3 (L w^2 for Fabry-Perot)
    double g = 0.0;            // rad/s
    double kappa = 0.0;        // rad/s

    double mode_ion_capacity = 0.0;  // ions the mode can address, 0 = unspecified
};

inline CavityConfig make_fabry_perot(const IonSpecies& species, double length,
                                     double finesse, double mirror_curvature) {
    CavityConfig c;
    c.kind = CavityKind::fabry_perot;
    c.species_name = species.name;
    c.length = length;
    c.finesse = finesse;
    c.mirror_curvature = mirror_curvature;
    c.waist = gaussian_waist(species.lambda, length, mirror_curvature);
    c.mode_volume = length * c.waist * c.waist;
    c.kappa = cavity_kappa(finesse, length);
    c.g = single_photon_g(species.dipole, species.transition_omega(), c.mode_volume);
    return c;
}

inline CavityConfig make_microsphere(const IonSpecies& species, double radius,
                                     double reference_radius, double g_over_gamma,
                                     double g_over_kappa, double quality_factor = 0.0) {
    if (radius <= 0.0 || reference_radius <= 0.0)
        throw std::domain_error("make_microsphere: radii must be positive");
    if (g_over_gamma <= 0.0 || g_over_kappa <= 0.0)
        throw std::domain_error("make_microsphere: coupling ratios must be positive");
    CavityConfig c;
    c.kind = CavityKind::microsphere;
    c.species_name = species.name;
    c.sphere_radius = radius;
    c.reference_radius = reference_radius;
    c.quality_factor = quality_factor;
    const double scale = reference_radius / radius;
    c.g_over_gamma = g_over_gamma * scale;
    c.g_over_kappa = g_over_kappa;  // g and kappa scale together
    c.g = c.g_over_gamma * species.gamma;
    c.kappa = c.g / c.g_over_kappa;
    return c;
}

/// Rescales a microsphere to a new radius, g and kappa ∝ reference/radius.
inline CavityConfig microsphere_config(double radius, const CavityConfig& reference,
                                       const IonSpecies& species) {
    if (reference.kind != CavityKind::microsphere)
        throw std::domain_error("microsphere_config: reference must be a microsphere");
    return make_microsphere(species, radius, reference.sphere_radius,
                            reference.g_over_gamma, reference.g_over_kappa,
                            reference.quality_factor);
}

}  // namespace iondesign::core
