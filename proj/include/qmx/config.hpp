#pragma once

// JSON scenario configuration: parsing plus total validation (every module
// precondition is checked here, with the offending key named, before any
// compute starts; unknown keys are rejected at every nesting level).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qmx/dynamics.hpp"
#include "qmx/grid.hpp"
#include "qmx/quaternion.hpp"
#include "qmx/thermo.hpp"

namespace qmx {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputConfig {
  std::string csv_path;                      // empty: no CSV
  std::string snapshot_path;                 // empty: no snapshots
  int snapshot_every = 0;                    // 0: final snapshot only
};

// Per-scenario parameters; only the group for the named scenario is read.
struct ScenarioParams {
  // from_potential
  std::uint64_t seed = 1;
  int max_wavenumber = 2;
  int modes_per_component = 3;
  double amp_scale = 1.0;
  double omega_max = 1.0;
  // transverse_wave / scalar_mode (mode, amplitude)
  int mode = 1;
  double amplitude = 1.0;
  // gaussian_T_pulse (amplitude, width) and static_charge (amplitude, width)
  double width = 0.1;
  // thomson_reversal
  Vec3 J{};
  Vec3 gradK{};
  // seebeck_jump
  double delta_T = 0.0;
  double v = 0.0;
  // heated_ball
  double radius = 1.0;
  double Kdot = 0.0;
  double r_max = 2.0;
  int samples = 64;
};

struct ScenarioConfig {
  Grid grid;
  double c = 1.0;
  std::optional<double> dt;  // absent: cfl_safety * cfl_limit(grid, c)
  int steps = 1;
  Scheme scheme = Scheme::RK4;
  double cfl_safety = 1.0;
  std::optional<double> spectral_filter;
  std::string scenario;
  ScenarioParams params;
  SourceMode source_mode = SourceMode::IdentifiedWithT;
  std::optional<MaterialPoint> material;
  OutputConfig output;

  double effective_dt() const {
    return dt ? *dt : cfl_safety * cfl_limit(grid, c);
  }
};

ScenarioConfig parse_config_text(const std::string& json_text);
ScenarioConfig parse_config_file(const std::string& path);

}  // namespace qmx
