// Config parsing and scenario resolution.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dipdec/errors.hpp"

namespace dipdec {

namespace {

enum class UnitClass { None, Dipole, Polarizability, Pressure, Temperature };

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ConfigError(where.empty() ? message : where + ": " + message);
}

double to_double(const std::string& token, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        fail(where, "cannot parse number '" + token + "'");
    return v;
}

// A value is a number optionally followed by one unit token; the token must
// match the key's dimension.
double parse_number(const std::string& raw, UnitClass unit,
                    const std::string& where) {
    const std::vector<std::string> tokens = split_whitespace(raw);
    if (tokens.empty()) fail(where, "empty value");
    if (tokens.size() > 2)
        fail(where, "expected '<number> [unit]', got '" + raw + "'");
    const double v = to_double(tokens[0], where);
    if (tokens.size() == 1) return v;

    const std::string& u = tokens[1];
    struct Entry {
        const char* token;
        UnitClass unit;
        double scale;
    };
    static const Entry units[] = {
        {"Debye", UnitClass::Dipole, si.debye},
        {"angstrom3", UnitClass::Polarizability, 1e-30},
        {"Pa", UnitClass::Pressure, 1.0},
        {"K", UnitClass::Temperature, 1.0},
    };
    for (const Entry& e : units) {
        if (u == e.token) {
            if (unit != e.unit)
                fail(where, "unit '" + u + "' does not apply to this key");
            return v * e.scale;
        }
    }
    fail(where, "unrecognized unit token '" + u + "'");
}

int parse_int(const std::string& raw, const std::string& where) {
    const double v = parse_number(raw, UnitClass::None, where);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) fail(where, "expected an integer");
    return i;
}

std::vector<std::string> split_commas(const std::string& raw) {
    std::vector<std::string> out;
    std::string current;
    std::istringstream is(raw);
    while (std::getline(is, current, ',')) out.push_back(trim(current));
    return out;
}

SweepSpec& sweep_of(ScenarioConfig& c) {
    if (!c.sweep) c.sweep.emplace();
    return *c.sweep;
}

void apply_key(ScenarioConfig& c, const std::string& key,
               const std::string& value, const std::string& where) {
    auto num = [&](UnitClass u) { return parse_number(value, u, where); };
    const auto bare = UnitClass::None;

    if (key == "crystal.radius_m") {
        c.crystal.radius = num(bare);
    } else if (key == "crystal.density_kg_m3") {
        c.crystal.density = num(bare);
    } else if (key == "crystal.mass_kg") {
        c.crystal.mass = num(bare);
    } else if (key == "crystal.relative_permittivity") {
        c.crystal.relative_permittivity = num(bare);
    } else if (key == "crystal.dipole") {
        c.crystal.dipole = num(UnitClass::Dipole);
    } else if (key == "environment.species") {
        c.species_name = value;
    } else if (key == "environment.mass_kg") {
        c.environment_mass = num(bare);
    } else if (key == "environment.dipole") {
        c.environment_dipole = num(UnitClass::Dipole);
    } else if (key == "environment.polarizability_volume") {
        c.environment_polarizability = num(UnitClass::Polarizability);
    } else if (key == "environment.temperature") {
        c.temperature = num(UnitClass::Temperature);
    } else if (key == "environment.pressure") {
        c.pressure = num(UnitClass::Pressure);
    } else if (key == "environment.number_density") {
        c.number_density = num(bare);
    } else if (key == "superposition.delta_x_m") {
        c.superposition.delta_x = num(bare);
    } else if (key == "superposition.hold_time_s") {
        c.superposition.hold_time = num(bare);
    } else if (key == "channel") {
        if (value == "permanent_permanent")
            c.channel = Channel::PermanentPermanent;
        else if (value == "environment_induces_crystal")
            c.channel = Channel::EnvironmentInducesCrystal;
        else if (value == "crystal_induces_environment")
            c.channel = Channel::CrystalInducesEnvironment;
        else
            fail(where, "unknown channel '" + value + "'");
    } else if (key == "distribution") {
        if (value == "delta")
            c.distribution = DistributionKind::Delta;
        else if (value == "mb")
            c.distribution = DistributionKind::MaxwellBoltzmann;
        else
            fail(where, "unknown distribution '" + value + "' (delta | mb)");
    } else if (key == "method") {
        if (value == "auto")
            c.method = RateMethod::Auto;
        else if (value == "short")
            c.method = RateMethod::Short;
        else if (value == "short_approx")
            c.method = RateMethod::ShortApprox;
        else if (value == "long")
            c.method = RateMethod::Long;
        else if (value == "generic")
            c.method = RateMethod::Generic;
        else
            fail(where, "unknown method '" + value + "'");
    } else if (key == "sweep.variable") {
        sweep_of(c).variable = value;
    } else if (key == "sweep.scale") {
        if (value == "linear")
            sweep_of(c).scale = SweepSpec::Scale::Linear;
        else if (value == "log")
            sweep_of(c).scale = SweepSpec::Scale::Log;
        else
            fail(where, "unknown sweep scale '" + value + "' (linear | log)");
    } else if (key == "sweep.lo") {
        sweep_of(c).lo = num(bare);
    } else if (key == "sweep.hi") {
        sweep_of(c).hi = num(bare);
    } else if (key == "sweep.points") {
        sweep_of(c).points = parse_int(value, where);
    } else if (key == "sweep.overlay_variable") {
        sweep_of(c).overlay_variable = value;
    } else if (key == "sweep.overlay_values") {
        sweep_of(c).overlay_values = split_commas(value);
    } else {
        fail(where, "unknown key '" + key + "'");
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig config;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        const std::string where = "line " + std::to_string(line_no);
        if (eq == std::string::npos)
            fail(where, "expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) fail(where, "empty key");
        apply_key(config, key, value, where);
    }
    return config;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void set_config_value(ScenarioConfig& config, const std::string& key,
                      const std::string& value) {
    apply_key(config, key, value, "key '" + key + "'");
}

ResolvedScenario resolve_scenario(const ScenarioConfig& config) {
    // Crystal geometry.
    if (config.crystal.radius <= 0.0)
        throw ConfigError("crystal.radius_m must be set > 0");
    if (config.crystal.density && config.crystal.mass) {
        CrystalSpec probe = config.crystal;
        if (probe.relative_permittivity <= 1.0)
            probe.relative_permittivity = 2.0;  // consistency check only
        validate_crystal(probe);
    }

    // Environment species, with field-level overrides.
    GasSpecies species;
    if (config.species_name) {
        const auto found = find_species(*config.species_name);
        if (!found)
            throw ConfigError("environment.species: unknown species '" +
                              *config.species_name + "'");
        species = *found;
    } else {
        species.name = "custom";
    }
    if (config.environment_mass) species.mass = *config.environment_mass;
    if (config.environment_dipole)
        species.permanent_dipole = *config.environment_dipole;
    if (config.environment_polarizability)
        species.polarizability_volume = *config.environment_polarizability;
    if (species.mass <= 0.0)
        throw ConfigError(
            "environment.mass_kg must be set > 0 (or pick a catalog species)");
    if (species.polarizability_volume < 0.0)
        throw ConfigError("environment.polarizability_volume must be >= 0");

    // Thermodynamic state.
    if (!config.temperature)
        throw ConfigError("environment.temperature must be set");
    const double temperature = *config.temperature;
    if (temperature <= 0.0)
        throw ConfigError("environment.temperature must be > 0");
    if (config.pressure && config.number_density)
        throw ConfigError(
            "set exactly one of environment.pressure and "
            "environment.number_density, not both");
    if (!config.pressure && !config.number_density)
        throw ConfigError(
            "set exactly one of environment.pressure and "
            "environment.number_density");
    double number_density;
    if (config.number_density) {
        number_density = *config.number_density;
        if (number_density < 0.0)
            throw ConfigError("environment.number_density must be >= 0");
    } else {
        if (*config.pressure < 0.0)
            throw ConfigError("environment.pressure must be >= 0");
        number_density =
            pressure_to_number_density(*config.pressure, temperature).value();
    }

    // Channel-resolved dipole pair.
    double d1 = 0.0, d2 = 0.0;
    switch (config.channel) {
        case Channel::PermanentPermanent:
            if (!config.crystal.dipole)
                throw ConfigError(
                    "channel permanent_permanent requires crystal.dipole");
            if (!species.permanent_dipole)
                throw ConfigError(
                    "channel permanent_permanent requires an environment "
                    "dipole (environment.dipole or a species carrying one)");
            d1 = *config.crystal.dipole;
            d2 = *species.permanent_dipole;
            break;
        case Channel::EnvironmentInducesCrystal:
            if (!species.permanent_dipole)
                throw ConfigError(
                    "channel environment_induces_crystal requires an "
                    "environment dipole (environment.dipole or a species "
                    "carrying one)");
            if (config.crystal.relative_permittivity <= 1.0)
                throw ConfigError(
                    "channel environment_induces_crystal requires "
                    "crystal.relative_permittivity > 1");
            d2 = *species.permanent_dipole;
            d1 = induced_crystal_dipole(d2,
                                        config.crystal.relative_permittivity);
            break;
        case Channel::CrystalInducesEnvironment:
            if (!config.crystal.dipole)
                throw ConfigError(
                    "channel crystal_induces_environment requires "
                    "crystal.dipole");
            if (species.polarizability_volume <= 0.0)
                throw ConfigError(
                    "channel crystal_induces_environment requires a species "
                    "with polarizability (environment.polarizability_volume)");
            d1 = *config.crystal.dipole;
            d2 = induced_environment_dipole(
                species,
                permanent_dipole_field(d1, config.crystal.radius));
            break;
    }

    // Superposition.
    if (config.superposition.delta_x < 0.0)
        throw ConfigError("superposition.delta_x_m must be >= 0");
    if (config.superposition.hold_time < 0.0)
        throw ConfigError("superposition.hold_time_s must be >= 0");

    // Sweep block shape (the grid itself is consumed by the sweep command).
    if (config.sweep) validate_sweep(*config.sweep);

    ResolvedScenario out;
    out.ctx = ScatteringContext{DipolePair{d1, d2}, species.mass,
                                config.crystal.radius};
    out.env = EnvironmentSpec{species, temperature, number_density};
    out.sup = config.superposition;
    out.distribution = config.distribution;
    out.method = config.method;
    return out;
}

void validate_sweep(const SweepSpec& sweep) {
    if (sweep.variable.empty()) throw ConfigError("sweep.variable must be set");
    if (sweep.points < 2) throw ConfigError("sweep.points must be >= 2");
    if (!(sweep.lo < sweep.hi)) throw ConfigError("sweep requires lo < hi");
    if (sweep.scale == SweepSpec::Scale::Log && sweep.lo <= 0.0)
        throw ConfigError("log-scale sweep requires lo > 0");
    if (!sweep.overlay_variable.empty() && sweep.overlay_values.empty())
        throw ConfigError(
            "sweep.overlay_variable set without sweep.overlay_values");
    if (!sweep.overlay_labels.empty() &&
        sweep.overlay_labels.size() != sweep.overlay_values.size())
        throw ConfigError("sweep overlay labels must parallel overlay values");
}

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::PermanentPermanent: return "permanent_permanent";
        case Channel::EnvironmentInducesCrystal:
            return "environment_induces_crystal";
        case Channel::CrystalInducesEnvironment:
            return "crystal_induces_environment";
    }
    return "unknown";
}

std::string distribution_name(DistributionKind d) {
    return d == DistributionKind::Delta ? "delta" : "mb";
}

std::string method_name(RateMethod m) {
    switch (m) {
        case RateMethod::Auto: return "auto";
        case RateMethod::Short: return "short";
        case RateMethod::ShortApprox: return "short_approx";
        case RateMethod::Long: return "long";
        case RateMethod::Generic: return "generic";
    }
    return "unknown";
}

}  // namespace dipdec
