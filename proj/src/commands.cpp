// Command implementations and the CLI front end.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "dipdec/errors.hpp"
#include "dipdec/quadrature.hpp"
#include "dipdec/special.hpp"

namespace dipdec {

namespace {

// Full-precision rendering for values round-tripped through the config
// key machinery (grid points must survive the string detour exactly).
std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_number_token(const std::string& s) {
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0';
}

double diag_or_nan(const RateResult& r, const char* key) {
    const auto it = r.diagnostics.find(key);
    return it == r.diagnostics.end()
               ? std::numeric_limits<double>::quiet_NaN()
               : it->second;
}

std::vector<double> build_grid(const SweepSpec& sweep) {
    std::vector<double> grid(sweep.points);
    for (int i = 0; i < sweep.points; ++i) {
        const double t = static_cast<double>(i) / (sweep.points - 1);
        grid[i] = sweep.scale == SweepSpec::Scale::Log
                      ? sweep.lo * std::pow(sweep.hi / sweep.lo, t)
                      : sweep.lo + (sweep.hi - sweep.lo) * t;
    }
    return grid;
}

Table::Cell cell_from_token(const std::string& token) {
    if (is_number_token(token)) return std::strtod(token.c_str(), nullptr);
    return token;
}

// Rethrow a worker exception with grid coordinates prefixed, preserving
// the error family (and hence the exit code).
[[noreturn]] void rethrow_with_context(const std::exception_ptr& ep,
                                       const std::string& context) {
    try {
        std::rethrow_exception(ep);
    } catch (const ConfigError& e) {
        throw ConfigError(context + e.what());
    } catch (const RegimeError& e) {
        throw RegimeError(context + e.what());
    } catch (const NumericError& e) {
        throw NumericError(context + e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(context + e.what());
    } catch (const std::exception& e) {
        throw NumericError(context + e.what());
    }
}

}  // namespace

std::string render_table(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

RateResult evaluate_rate(const ResolvedScenario& s) {
    const MomentumDistribution dist =
        s.distribution == DistributionKind::Delta
            ? MomentumDistribution::delta_at_mean(s.ctx.mass,
                                                  s.env.temperature)
            : MomentumDistribution::maxwell_boltzmann(s.ctx.mass,
                                                      s.env.temperature);
    switch (s.method) {
        case RateMethod::Short:
            return gamma_short(s.ctx, s.env, dist);
        case RateMethod::ShortApprox:
            return gamma_short_approx(s.ctx, s.env);
        case RateMethod::Long:
            return gamma_long(s.ctx, s.env, s.sup, dist);
        case RateMethod::Generic:
            return gamma_generic(s.ctx, s.env, s.sup.delta_x, dist);
        case RateMethod::Auto:
            break;
    }
    // Without a superposition size only the total scattering rate is
    // defined; with one, dispatch on the wavelength/separation regime.
    if (s.sup.delta_x <= 0.0) return gamma_short(s.ctx, s.env, dist);
    switch (classify_regime(s.env, s.sup)) {
        case RegimeClass::Short:
            return gamma_short(s.ctx, s.env, dist);
        case RegimeClass::Long:
            return gamma_long(s.ctx, s.env, s.sup, dist);
        case RegimeClass::Intermediate:
            break;
    }
    return gamma_generic(s.ctx, s.env, s.sup.delta_x, dist);
}

Table rate_table(const ScenarioConfig& config, double budget_hz) {
    if (budget_hz <= 0.0) throw ConfigError("budget must be > 0 Hz");
    const RateResult r = evaluate_rate(resolve_scenario(config));
    Table table;
    table.columns = {"gamma_hz", "regime",        "coherence_time_s",
                     "budget_hz", "budget_status", "p_bar",
                     "lambda0",   "a"};
    table.add_row({r.gamma, regime_name(r.regime), r.coherence_time,
                   budget_hz,
                   std::string(r.gamma <= budget_hz ? "pass" : "fail"),
                   diag_or_nan(r, "p_bar"), diag_or_nan(r, "lambda0"),
                   diag_or_nan(r, "a")});
    return table;
}

Table sweep_table(const ScenarioConfig& config) {
    if (!config.sweep)
        throw ConfigError("sweep requires a sweep block in the config");
    const SweepSpec& sweep = *config.sweep;
    validate_sweep(sweep);
    const std::vector<double> grid = build_grid(sweep);
    const bool has_overlay = !sweep.overlay_variable.empty();
    const bool has_labels = !sweep.overlay_labels.empty();
    const size_t overlays = has_overlay ? sweep.overlay_values.size() : 1;

    // Probe the first grid point up front so key and scenario errors
    // surface before the worker pool spins up.
    {
        ScenarioConfig probe = config;
        probe.sweep.reset();
        if (has_overlay)
            set_config_value(probe, sweep.overlay_variable,
                             sweep.overlay_values[0]);
        set_config_value(probe, sweep.variable, format_full(grid[0]));
        resolve_scenario(probe);
    }

    Table table;
    if (has_overlay) table.columns.push_back(sweep.overlay_variable);
    if (has_labels) table.columns.push_back(sweep.overlay_label_column);
    table.columns.insert(table.columns.end(),
                         {sweep.variable, "gamma_hz", "regime",
                          "coherence_time_s", "p_bar", "lambda0", "a"});

    struct Job {
        size_t overlay;
        size_t point;
    };
    std::vector<Job> jobs;
    jobs.reserve(overlays * grid.size());
    for (size_t o = 0; o < overlays; ++o)
        for (size_t g = 0; g < grid.size(); ++g) jobs.push_back({o, g});

    std::vector<std::vector<Table::Cell>> rows(jobs.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    size_t error_row = jobs.size();
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            const Job job = jobs[j];
            try {
                ScenarioConfig point = config;
                point.sweep.reset();
                if (has_overlay)
                    set_config_value(point, sweep.overlay_variable,
                                     sweep.overlay_values[job.overlay]);
                set_config_value(point, sweep.variable,
                                 format_full(grid[job.point]));
                const RateResult r = evaluate_rate(resolve_scenario(point));

                std::vector<Table::Cell> row;
                if (has_overlay)
                    row.push_back(
                        cell_from_token(sweep.overlay_values[job.overlay]));
                if (has_labels)
                    row.push_back(
                        cell_from_token(sweep.overlay_labels[job.overlay]));
                row.emplace_back(grid[job.point]);
                row.emplace_back(r.gamma);
                row.emplace_back(regime_name(r.regime));
                row.emplace_back(r.coherence_time);
                row.emplace_back(diag_or_nan(r, "p_bar"));
                row.emplace_back(diag_or_nan(r, "lambda0"));
                row.emplace_back(diag_or_nan(r, "a"));
                rows[j] = std::move(row);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (j < error_row) {
                    error_row = j;
                    error = std::current_exception();
                }
            }
        }
    };

    const size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t thread_count = std::min(jobs.size(), hw);
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    if (error) {
        const Job job = jobs[error_row];
        std::string context = "sweep row " + std::to_string(error_row) +
                              " (" + sweep.variable + " = " +
                              format_full(grid[job.point]);
        if (has_overlay)
            context += ", " + sweep.overlay_variable + " = " +
                       sweep.overlay_values[job.overlay];
        context += "): ";
        rethrow_with_context(error, context);
    }

    for (auto& row : rows) table.add_row(std::move(row));
    return table;
}

Table table1_rows(double field) {
    if (field < 0.0) throw ConfigError("table1: field must be >= 0");
    Table table;
    table.columns = {"species", "alpha_prime_A3", "alpha_SI", "E_N_per_C",
                     "d2_Cm"};
    for (const GasSpecies& s : builtin_species_catalog()) {
        if (s.polarizability_volume <= 0.0) continue;
        const double alpha_si =
            4.0 * std::numbers::pi * si.eps0 * s.polarizability_volume;
        table.add_row({s.name, s.polarizability_volume / 1e-30, alpha_si,
                       field, induced_environment_dipole(s, field)});
    }
    return table;
}

Table table1_from_crystal(double d1, double radius) {
    return table1_rows(permanent_dipole_field(d1, radius));
}

std::vector<ValidationCheck> run_validation_suite() {
    std::vector<ValidationCheck> checks;
    // Each check runs isolated: a throwing check reports as failed with the
    // error in its name instead of aborting the rest of the suite.
    auto run = [&](std::string name, double tolerance,
                   const std::function<double()>& body) {
        double achieved;
        try {
            achieved = body();
        } catch (const std::exception& e) {
            achieved = std::numeric_limits<double>::infinity();
            name += std::string(" [") + e.what() + "]";
        }
        checks.push_back({name, achieved, tolerance, achieved < tolerance});
    };

    const ScatteringContext ctx{DipolePair{2e-24, 5e-30}, 4.65e-26, 1e-6};
    auto p0_of_a = [&](double a) { return a * si.hbar / (2.0 * ctx.radius); };

    // Total cross section: closed form vs direct angular quadrature.
    run("sigma_cm_closed_vs_quadrature", 1e-6, [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double a = 1e-2 * std::pow(1e6, i / 19.0);
            const Kinematics kin = Kinematics::from_momentum(ctx, p0_of_a(a));
            const double closed = sigma_cm_closed(ctx, kin).value();
            const double quad = sigma_cm_quadrature(ctx, kin).value();
            worst = std::max(worst, std::abs(closed / quad - 1.0));
        }
        return worst;
    });
    // Effective cross section likewise.
    run("sigma_eff_closed_vs_quadrature", 1e-6, [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double a = 1e-1 * std::pow(1e5, i / 19.0);
            const Kinematics kin = Kinematics::from_momentum(ctx, p0_of_a(a));
            const double closed = sigma_eff_closed(ctx, kin).value();
            const double quad = sigma_eff_quadrature(ctx, kin).value();
            worst = std::max(worst, std::abs(closed / quad - 1.0));
        }
        return worst;
    });
    // Form-factor kernel branches agree at the switchover.
    run("form_factor_branch_agreement", 1e-10, [&] {
        const double x = detail::kernel_series_switch;
        const double series = detail::form_factor_kernel_series(x);
        const double direct = detail::form_factor_kernel_direct(x);
        return std::abs(series / direct - 1.0);
    });
    // Cosine integral: both branches vs the tail-quadrature oracle.
    run("cosine_integral_vs_quadrature", 1e-9, [&] {
        double worst = 0.0;
        for (const double x : {0.5, 2.0, 20.0, 200.0})
            worst = std::max(worst, std::abs(cosine_integral(x) -
                                             cosine_integral_quadrature(x)));
        return worst;
    });
    // Potential Fourier transform: closed form vs radial quadrature.
    run("fourier_transform_vs_quadrature", 1e-8, [&] {
        double worst = 0.0;
        for (const double x0 : {0.7, 3.0}) {
            const double q = x0 * si.hbar / ctx.radius;
            const double closed =
                potential_fourier_transform(ctx, q, ctx.pair.d2).value();
            const double quad =
                potential_fourier_transform_quadrature(ctx, q, ctx.pair.d2)
                    .value();
            worst = std::max(worst, std::abs(closed / quad - 1.0));
        }
        return worst;
    });
    // Maxwell-Boltzmann momentum density normalizes to 1.
    run("mb_momentum_pdf_normalization", 1e-10, [&] {
        const MomentumDistribution mb =
            MomentumDistribution::maxwell_boltzmann(ctx.mass, 1.0);
        return std::abs(
            expectation_over_momentum(mb, [](double) { return 1.0; }) - 1.0);
    });

    // Generic-rate limits at the a = 2 kinematics (p0 = hbar/R).
    const double p0 = si.hbar / ctx.radius;
    const double t_a2 = p0 * p0 / (2.0 * ctx.mass * si.k_B);
    const EnvironmentSpec env{GasSpecies{"probe", ctx.mass, std::nullopt, 0.0},
                              t_a2, 1e8};
    const MomentumDistribution delta =
        MomentumDistribution::delta_at_mean(ctx.mass, t_a2);
    // Large-separation plateau at twice the scattering rate.
    run("generic_rate_short_plateau", 0.05, [&] {
        const double gamma_s = gamma_short(ctx, env, delta).gamma;
        const double sep = 100.0 * si.hbar / p0;
        const double gam = gamma_generic(ctx, env, sep, delta).gamma;
        return std::abs(gam / gamma_s - 1.0);
    });
    // Small-separation quadratic limit against the sigma_eff route.
    run("generic_rate_long_limit", 0.05, [&] {
        const double gamma_s = gamma_short(ctx, env, delta).gamma;
        const double z = 0.01;
        const double sep = z * si.hbar / p0;
        const double gam = gamma_generic(ctx, env, sep, delta).gamma;
        const Kinematics kin = Kinematics::from_momentum(ctx, p0);
        const double expected = gamma_s * z * z *
                                sigma_eff_closed(ctx, kin).value() /
                                sigma_cm_closed(ctx, kin).value();
        return std::abs(gam / expected - 1.0);
    });
    // Short-rate prefactor: grouped and ungrouped assemblies agree.
    run("short_rate_prefactor_consistency", 1e-10, [&] {
        const EnvironmentSpec warm{
            GasSpecies{"probe", ctx.mass, std::nullopt, 0.0}, 1.0, 1e8};
        const MomentumDistribution d =
            MomentumDistribution::delta_at_mean(ctx.mass, 1.0);
        return std::abs(
            gamma_short(ctx, warm, d).diagnostics.at("prefactor_ratio") - 1.0);
    });
    return checks;
}

Table validation_table(const std::vector<ValidationCheck>& checks) {
    Table table;
    table.columns = {"check", "achieved", "tolerance", "status"};
    for (const ValidationCheck& c : checks)
        table.add_row({c.name, c.achieved, c.tolerance,
                       std::string(c.pass ? "pass" : "fail")});
    return table;
}

ScenarioConfig preset_config(const std::string& name) {
    if (name == "fig2") {
        // Rate vs temperature for an environmental dipole polarizing the
        // crystal, one curve per vacuum quality (number density decade,
        // labeled with the pressure it corresponds to at ~1 K).
        ScenarioConfig c;
        c.crystal.radius = 1e-6;
        c.crystal.relative_permittivity = 5.7;
        c.environment_mass = 1e-27;
        c.environment_dipole = 1e-29;
        c.temperature = 1.0;
        c.number_density = 1e8;
        c.channel = Channel::EnvironmentInducesCrystal;
        c.method = RateMethod::ShortApprox;
        SweepSpec s;
        s.variable = "environment.temperature";
        s.scale = SweepSpec::Scale::Log;
        s.lo = 0.1;
        s.hi = 10.0;
        s.points = 25;
        s.overlay_variable = "environment.number_density";
        s.overlay_values = {"1e8", "1e9", "1e10", "1e11"};
        s.overlay_label_column = "nominal_pressure_Pa";
        s.overlay_labels = {"1e-15", "1e-14", "1e-13", "1e-12"};
        c.sweep = s;
        return c;
    }
    if (name == "fig4") {
        // Rate vs crystal dipole when the crystal's field polarizes the
        // gas particle, one curve per catalog species.
        ScenarioConfig c;
        c.crystal.radius = 1e-6;
        c.crystal.dipole = 1e-23;
        c.species_name = "N2";
        c.temperature = 1.0;
        c.number_density = 1e8;
        c.channel = Channel::CrystalInducesEnvironment;
        c.method = RateMethod::ShortApprox;
        SweepSpec s;
        s.variable = "crystal.dipole";
        s.scale = SweepSpec::Scale::Log;
        s.lo = 1e-26;
        s.hi = 1e-23;
        s.points = 25;
        s.overlay_variable = "environment.species";
        s.overlay_values = {"N2", "O2", "Ar", "CO2"};
        c.sweep = s;
        return c;
    }
    throw ConfigError("unknown preset config '" + name + "' (fig2 | fig4)");
}

namespace {

// Largest admissible crystal dipole vs the environmental dipole it pairs
// with, one curve per decoherence-rate budget.
Table fig3_table() {
    Table table;
    table.columns = {"gamma_target_Hz", "d2_Cm", "d1_max_Cm"};
    ScatteringContext ctx{DipolePair{0.0, 0.0}, 1e-27, 1e-6};
    const EnvironmentSpec env{
        GasSpecies{"baseline", 1e-27, std::nullopt, 0.0}, 1.0, 1e8};
    for (const double target : {1e-5, 1e-4, 1e-3, 1e-2}) {
        for (int i = 0; i < 25; ++i) {
            const double d2 = 1e-31 * std::pow(1e3, i / 24.0);
            ctx.pair.d2 = d2;
            table.add_row(
                {target, d2, max_crystal_dipole(target, ctx, env)});
        }
    }
    return table;
}

}  // namespace

Table preset_table(const std::string& name) {
    if (name == "fig2" || name == "fig4")
        return sweep_table(preset_config(name));
    if (name == "fig3") return fig3_table();
    if (name == "table1") return table1_from_crystal(1e-23, 1e-6);
    throw ConfigError("unknown preset '" + name +
                      "' (fig2 | fig3 | fig4 | table1)");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    // --enforce-budget takes an optional value; give the bare form its
    // default before CLI parsing so the option can be a plain double.
    std::vector<std::string> argv_strings;
    argv_strings.reserve(args.size() + 2);
    argv_strings.push_back("dipdec");
    for (size_t i = 0; i < args.size(); ++i) {
        argv_strings.push_back(args[i]);
        if (args[i] == "--enforce-budget" &&
            (i + 1 >= args.size() || !is_number_token(args[i + 1])))
            argv_strings.push_back("1e-2");
    }

    CLI::App app{"Collisional dipole-dipole decoherence rates"};
    app.require_subcommand(1);

    std::string config_path, out_path, distribution_override;
    std::string format_name = "csv";
    double budget = 1e-2;

    app.add_option("--config", config_path, "scenario config file");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--distribution", distribution_override,
                   "override the configured momentum distribution")
        ->check(CLI::IsMember({"delta", "mb"}));
    CLI::Option* budget_opt =
        app.add_option("--enforce-budget", budget,
                       "exit 5 if the rate exceeds this budget in Hz "
                       "(bare flag: 1e-2)");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* rate_cmd =
        app.add_subcommand("rate", "evaluate one scenario");
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep a config variable");
    CLI::App* table1_cmd = app.add_subcommand(
        "table1", "induced environment dipoles per species");
    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "run the closed-form/quadrature cross-checks");
    CLI::App* preset_cmd =
        app.add_subcommand("preset", "emit a built-in study table");
    std::string preset_name;
    preset_cmd->add_option("name", preset_name, "fig2 | fig3 | fig4 | table1")
        ->required();
    for (CLI::App* sub :
         {rate_cmd, sweep_cmd, table1_cmd, validate_cmd, preset_cmd})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(argv_strings.size());
    for (const std::string& s : argv_strings) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const OutputFormat format =
        format_name == "json" ? OutputFormat::Json : OutputFormat::Csv;
    const bool enforce_budget = budget_opt->count() > 0;

    auto emit = [&](const Table& table) {
        const std::string rendered = render_table(table, format);
        if (out_path.empty()) {
            out << rendered;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file)
                throw ConfigError("cannot open output file '" + out_path +
                                  "'");
            file << rendered;
        }
    };
    auto load_scenario = [&]() {
        if (config_path.empty())
            throw ConfigError("this command requires --config");
        ScenarioConfig config = load_config(config_path);
        if (!distribution_override.empty())
            config.distribution = distribution_override == "mb"
                                      ? DistributionKind::MaxwellBoltzmann
                                      : DistributionKind::Delta;
        return config;
    };

    try {
        if (rate_cmd->parsed()) {
            const Table table = rate_table(load_scenario(), budget);
            emit(table);
            const double gamma = std::get<double>(table.rows.at(0).at(0));
            if (enforce_budget && gamma > budget) return 5;
            return 0;
        }
        if (sweep_cmd->parsed()) {
            emit(sweep_table(load_scenario()));
            return 0;
        }
        if (table1_cmd->parsed()) {
            if (config_path.empty()) {
                emit(table1_from_crystal(1e-23, 1e-6));
                return 0;
            }
            const ScenarioConfig config = load_config(config_path);
            if (!config.crystal.dipole)
                throw ConfigError("table1 requires crystal.dipole");
            if (config.crystal.radius <= 0.0)
                throw ConfigError("table1 requires crystal.radius_m > 0");
            emit(table1_from_crystal(*config.crystal.dipole,
                                     config.crystal.radius));
            return 0;
        }
        if (validate_cmd->parsed()) {
            const std::vector<ValidationCheck> checks =
                run_validation_suite();
            emit(validation_table(checks));
            for (const ValidationCheck& c : checks)
                if (!c.pass) return 4;
            return 0;
        }
        if (preset_cmd->parsed()) {
            emit(preset_table(preset_name));
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace dipdec
