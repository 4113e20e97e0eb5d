// Command layer behind the CLI: single-rate evaluation with budget
// comparison, parallel parameter sweeps, the species table, the
// numerical cross-check suite, built-in presets, and the argv front end.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dipdec/config.hpp"
#include "dipdec/table.hpp"

namespace dipdec {

enum class OutputFormat { Csv, Json };

std::string render_table(const Table& table, OutputFormat format);

// Evaluate one resolved scenario by its method; Auto dispatches on
// classify_regime (short when no superposition size is set).
RateResult evaluate_rate(const ResolvedScenario& scenario);

// One-row table: gamma_hz, regime, coherence_time_s, budget_hz,
// budget_status, p_bar, lambda0, a.  The budget comparison is always
// reported; enforcement is the CLI's concern.
Table rate_table(const ScenarioConfig& config, double budget_hz);

// Grid × overlay sweep per config.sweep; rows are computed in parallel
// and assembled in deterministic (outer overlay, inner grid) order.
// A failing row aborts the sweep with its grid coordinates in the message.
Table sweep_table(const ScenarioConfig& config);

// Induced environment dipoles for the catalog's polarizable species:
// species, alpha_prime_A3, alpha_SI, E_N_per_C, d2_Cm.
Table table1_rows(double field);

// Same, with the field derived from a crystal dipole at the crystal
// radius.
Table table1_from_crystal(double d1, double radius);

struct ValidationCheck {
    std::string name;
    double achieved = 0.0;   // worst deviation observed
    double tolerance = 0.0;  // limit it must stay under
    bool pass = false;
};

// Cross-checks every closed form against its independent quadrature
// oracle and the generic rate against both limits.
std::vector<ValidationCheck> run_validation_suite();
Table validation_table(const std::vector<ValidationCheck>& checks);

// Built-in sweep configs ("fig2", "fig4"); unknown name throws
// ConfigError.
ScenarioConfig preset_config(const std::string& name);

// Full preset tables: "fig2", "fig3", "fig4", "table1".
Table preset_table(const std::string& name);

// argv-style entry point (no program name in args).  Returns the process
// exit code: 0 success, 2 config/usage error, 3 regime error, 4 numeric
// error, 5 budget exceeded under --enforce-budget.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace dipdec
