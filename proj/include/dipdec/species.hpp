// The environmental gas particle: mass, optional permanent dipole, and
// polarizability volume.  Shared by the rate and scenario modules.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

namespace dipdec {

struct GasSpecies {
    std::string name;
    double mass = 0.0;  // kg
    std::optional<double> permanent_dipole;  // C·m
    double polarizability_volume = 0.0;      // m³ (α' converted from Å³)
};

}  // namespace dipdec
