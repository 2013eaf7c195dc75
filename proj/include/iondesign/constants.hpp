#pragma once

#include <numbers>

namespace iondesign::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double epsilon0 = 8.8541878128e-12;      // F/m
inline constexpr double c_light = 299792458.0;            // m/s (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double bohr_radius = 5.29177210903e-11;  // m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double seconds_per_week = 604800.0;

// Coulomb prefactor e^2/(4 pi eps0), J m
inline constexpr double coulomb_e2 =
    elementary_charge * elementary_charge / (4.0 * pi * epsilon0);

}  // namespace iondesign::constants
