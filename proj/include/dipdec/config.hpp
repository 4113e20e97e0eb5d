// Scenario configuration: the flat key-value config format, validation,
// and resolution of a scenario into the scattering context, environment,
// and superposition the rate functions consume.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipdec/qgem.hpp"
#include "dipdec/rates.hpp"

namespace dipdec {

// Which pair of dipoles interacts.
enum class Channel {
    PermanentPermanent,         // crystal.dipole × environment dipole
    EnvironmentInducesCrystal,  // environment dipole polarizes the crystal
    CrystalInducesEnvironment   // crystal.dipole polarizes the gas particle
};

enum class DistributionKind { Delta, MaxwellBoltzmann };

// Which rate path to evaluate; Auto picks by wavelength/separation regime.
enum class RateMethod { Auto, Short, ShortApprox, Long, Generic };

struct SweepSpec {
    enum class Scale { Linear, Log };
    std::string variable;  // dotted config key to sweep
    Scale scale = Scale::Log;
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    std::string overlay_variable;  // empty: no overlay
    std::vector<std::string> overlay_values;
    // Presets may attach a display label per overlay value (e.g. the nominal
    // pressure a number density corresponds to); not part of config files.
    std::string overlay_label_column;
    std::vector<std::string> overlay_labels;
};

struct ScenarioConfig {
    CrystalSpec crystal;
    std::optional<std::string> species_name;  // catalog lookup when present
    std::optional<double> environment_mass;   // kg; overrides catalog
    std::optional<double> environment_dipole;  // C·m; overrides catalog
    std::optional<double> environment_polarizability;  // m³; overrides catalog
    std::optional<double> temperature;         // K
    std::optional<double> pressure;            // Pa
    std::optional<double> number_density;      // m⁻³
    SuperpositionSpec superposition;
    Channel channel = Channel::PermanentPermanent;
    DistributionKind distribution = DistributionKind::Delta;
    RateMethod method = RateMethod::Auto;
    std::optional<SweepSpec> sweep;
};

// Everything a rate evaluation needs, with the channel's dipole pair
// resolved and the number density derived from pressure when needed.
struct ResolvedScenario {
    ScatteringContext ctx;  // mass is the gas-particle mass
    EnvironmentSpec env;
    SuperpositionSpec sup;
    DistributionKind distribution = DistributionKind::Delta;
    RateMethod method = RateMethod::Auto;
};

// Parse the flat key-value format: one "key = value" per line, '#'
// comments, dotted section keys, optional unit suffix tokens (Debye,
// angstrom3, Pa, K) on the keys that carry those dimensions.  Unknown
// keys, malformed lines, and unit/dimension mismatches throw ConfigError
// with the 1-based line number.
ScenarioConfig parse_config(const std::string& text);

// parse_config over the file's contents; missing/unreadable file throws
// ConfigError.
ScenarioConfig load_config(const std::string& path);

// Set one dotted key on an existing config (sweep machinery re-uses the
// parser's key table).  Unknown key or bad value throws ConfigError.
void set_config_value(ScenarioConfig& config, const std::string& key,
                      const std::string& value);

// Validate cross-field invariants (temperature present and > 0, exactly
// one of pressure/number_density, sweep ranges well-formed, crystal
// consistency) and resolve the channel's dipole pair.  Throws ConfigError
// naming the offending field.
ResolvedScenario resolve_scenario(const ScenarioConfig& config);

// Shape checks on a sweep block (variable set, points >= 2, lo < hi, log
// scale positive, overlays consistent); ConfigError on violation.
void validate_sweep(const SweepSpec& sweep);

std::string channel_name(Channel c);
std::string distribution_name(DistributionKind d);
std::string method_name(RateMethod m);

}  // namespace dipdec
