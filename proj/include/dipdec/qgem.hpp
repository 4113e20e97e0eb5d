// Experiment-scenario helpers: induced-dipole channels in both directions,
// the dipole-bound inversion, crystal-size scaling, and the built-in gas
// species catalog.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "dipdec/rates.hpp"
#include "dipdec/species.hpp"

namespace dipdec {

// The interferometer test mass.  density/mass/dipole are optional because
// scenarios rarely need all of them; validate_crystal checks the
// mass–density–radius consistency when all three are present.
struct CrystalSpec {
    double radius = 0.0;  // m
    std::optional<double> density;  // kg·m⁻³
    std::optional<double> mass;     // kg
    double relative_permittivity = 0.0;  // ε_r
    std::optional<double> dipole;  // permanent dipole d1, C·m
};

// Throws ConfigError if ε_r ≤ 1, radius ≤ 0, or (when density, mass and
// radius are all given) mass differs from density·(4π/3)·radius³ by more
// than rel_tol.
void validate_crystal(const CrystalSpec& crystal, double rel_tol = 0.02);

// Dipole induced on the crystal by an environmental dipole d2 at the
// worst-case distance r̄ = R, via the Clausius–Mossotti polarizability:
//   d1 = (3 d2)/(2π ε_r) · (ε_r − 1)/(ε_r + 2).
double induced_crystal_dipole(double d2, double eps_r);

// Field of the environmental dipole inside the dielectric at distance r̄,
// maximal mutual orientation: E_loc = d2/(2π ε₀ ε_r r̄³), N/C.
double local_field(double d2, double eps_r, double r_bar);

// Field of the crystal's permanent dipole at its own radius:
//   E = d1/(2π ε₀ R³), N/C.
double permanent_dipole_field(double d1, double radius);

// Dipole induced on a gas particle by a field: d2 = 4π ε₀ α′ E.
double induced_environment_dipole(const GasSpecies& species, double field);

// Largest crystal dipole keeping the short-wavelength rate at or below
// gamma_target: d1 = sqrt(Γ_target/K) with K the rate at d1 = 1 C·m.
// ctx.pair.d1 is ignored; ctx.pair.d2 must be > 0.  Propagates the
// RegimeError of gamma_short_approx outside its validity window.
double max_crystal_dipole(double gamma_target, const ScatteringContext& ctx,
                          const EnvironmentSpec& env);

// Volume scaling of a displaced-lattice dipole: d_ref·(R/R_ref)³.
double dipole_volume_scaling(double d_ref, double radius_ref, double radius);

// N₂, O₂, Ar, CO₂ with polarizability volumes; He with the hydrogen-like
// permanent-dipole estimate 1e-29 C·m; H₂O with its permanent 6.19e-30 C·m.
// Masses are standard molecular masses (catalog data, not model output).
const std::vector<GasSpecies>& builtin_species_catalog();

// Catalog lookup by name; std::nullopt when absent.
std::optional<GasSpecies> find_species(const std::string& name);

}  // namespace dipdec
