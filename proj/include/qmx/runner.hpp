#pragma once

// Executes a parsed scenario end to end: initial data, sources, evolution,
// CSV/snapshot output, and a short summary log. Thermo scenarios (Thomson
// reversal, Seebeck jump, heated ball) evaluate their closed forms and write
// small tables instead of evolving fields.

#include <iosfwd>

#include "qmx/config.hpp"

namespace qmx {

// Returns the process exit code: 0 on success, 2 when the evolution produced
// non-finite values (the diagnostics rows up to the abort are still written).
// Configuration and precondition failures throw ConfigError.
int run_scenario(const ScenarioConfig& cfg, bool quiet, std::ostream& log);

// Initial data and sources for an evolution scenario, exposed for tests.
FieldState scenario_initial_state(const ScenarioConfig& cfg);
Sources scenario_sources(const ScenarioConfig& cfg);

}  // namespace qmx
