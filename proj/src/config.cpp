#include "qmx/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string>

#include "json.hpp"

namespace qmx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail("unknown key \"" + it.key() + "\" in " + where);
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double require_number(const json& obj, const std::string& where, const char* key) {
  const json* v = find(obj, key);
  if (!v) fail(where + "." + key + " is required");
  if (!v->is_number()) fail(where + "." + key + " must be a number");
  return v->get<double>();
}

double number_or(const json& obj, const std::string& where, const char* key,
                 double fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number()) fail(where + "." + key + " must be a number");
  return v->get<double>();
}

int require_int(const json& obj, const std::string& where, const char* key) {
  const json* v = find(obj, key);
  if (!v) fail(where + "." + key + " is required");
  if (!v->is_number_integer()) fail(where + "." + key + " must be an integer");
  return v->get<int>();
}

int int_or(const json& obj, const std::string& where, const char* key, int fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number_integer()) fail(where + "." + key + " must be an integer");
  return v->get<int>();
}

std::string string_or(const json& obj, const std::string& where, const char* key,
                      const std::string& fallback) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_string()) fail(where + "." + key + " must be a string");
  return v->get<std::string>();
}

Vec3 require_vec3(const json& obj, const std::string& where, const char* key) {
  const json* v = find(obj, key);
  if (!v) fail(where + "." + key + " is required");
  if (!v->is_array() || v->size() != 3) fail(where + "." + key + " must be [x, y, z]");
  for (const auto& e : *v)
    if (!e.is_number()) fail(where + "." + key + " components must be numbers");
  return {(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
}

Grid parse_grid(const json& obj) {
  check_keys(obj, "grid", {"nx", "ny", "nz", "dx", "dy", "dz"});
  const int nx = require_int(obj, "grid", "nx");
  const int ny = require_int(obj, "grid", "ny");
  const int nz = require_int(obj, "grid", "nz");
  const double dx = require_number(obj, "grid", "dx");
  const double dy = require_number(obj, "grid", "dy");
  const double dz = require_number(obj, "grid", "dz");
  try {
    return make_grid(nx, ny, nz, dx, dy, dz);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

void parse_scenario(const json& obj, ScenarioConfig& cfg) {
  const json* name = find(obj, "name");
  if (!name || !name->is_string()) fail("scenario.name is required and must be a string");
  cfg.scenario = name->get<std::string>();
  ScenarioParams& p = cfg.params;
  const std::string where = "scenario(" + cfg.scenario + ")";

  if (cfg.scenario == "zero") {
    check_keys(obj, where, {"name"});
  } else if (cfg.scenario == "transverse_wave") {
    check_keys(obj, where, {"name", "mode", "amplitude"});
    p.mode = require_int(obj, where, "mode");
    p.amplitude = require_number(obj, where, "amplitude");
  } else if (cfg.scenario == "scalar_mode") {
    check_keys(obj, where, {"name", "mode", "epsilon"});
    p.mode = require_int(obj, where, "mode");
    p.amplitude = require_number(obj, where, "epsilon");
  } else if (cfg.scenario == "gaussian_T_pulse") {
    check_keys(obj, where, {"name", "amplitude", "width"});
    p.amplitude = require_number(obj, where, "amplitude");
    p.width = require_number(obj, where, "width");
    if (!(p.width > 0.0)) fail(where + ".width must be > 0");
  } else if (cfg.scenario == "from_potential") {
    check_keys(obj, where,
               {"name", "seed", "max_wavenumber", "modes_per_component", "amp_scale",
                "omega_max"});
    const json* seed = find(obj, "seed");
    if (!seed || !seed->is_number_integer() ||
        (seed->is_number_integer() && !seed->is_number_unsigned() &&
         seed->get<long long>() < 0))
      fail(where + ".seed is required and must be a nonnegative integer");
    p.seed = seed->get<std::uint64_t>();
    p.max_wavenumber = int_or(obj, where, "max_wavenumber", 2);
    if (p.max_wavenumber < 1) fail(where + ".max_wavenumber must be >= 1");
    p.modes_per_component = int_or(obj, where, "modes_per_component", 3);
    if (p.modes_per_component < 1) fail(where + ".modes_per_component must be >= 1");
    p.amp_scale = number_or(obj, where, "amp_scale", 1.0);
    p.omega_max = number_or(obj, where, "omega_max", 1.0);
    if (p.omega_max < 0.0) fail(where + ".omega_max must be >= 0");
  } else if (cfg.scenario == "static_charge") {
    check_keys(obj, where, {"name", "amplitude", "width"});
    p.amplitude = require_number(obj, where, "amplitude");
    p.width = require_number(obj, where, "width");
    if (!(p.width > 0.0)) fail(where + ".width must be > 0");
  } else if (cfg.scenario == "thomson_reversal") {
    check_keys(obj, where, {"name", "J", "gradK"});
    p.J = require_vec3(obj, where, "J");
    p.gradK = require_vec3(obj, where, "gradK");
    if (dot(p.J, p.gradK) == 0.0)
      fail(where + ": J . gradK must be nonzero to isolate the Thomson heat");
  } else if (cfg.scenario == "seebeck_jump") {
    check_keys(obj, where, {"name", "delta_T", "width", "v"});
    p.delta_T = require_number(obj, where, "delta_T");
    p.width = require_number(obj, where, "width");
    p.v = require_number(obj, where, "v");
  } else if (cfg.scenario == "heated_ball") {
    check_keys(obj, where, {"name", "radius", "Kdot", "r_max", "samples"});
    p.radius = require_number(obj, where, "radius");
    if (!(p.radius > 0.0)) fail(where + ".radius must be > 0");
    p.Kdot = require_number(obj, where, "Kdot");
    p.r_max = number_or(obj, where, "r_max", 2.0 * p.radius);
    if (!(p.r_max > 0.0)) fail(where + ".r_max must be > 0");
    p.samples = int_or(obj, where, "samples", 64);
    if (p.samples < 2) fail(where + ".samples must be >= 2");
  } else {
    fail("unknown scenario name \"" + cfg.scenario + "\"");
  }
}

bool scenario_evolves(const std::string& name) {
  return name == "zero" || name == "transverse_wave" || name == "scalar_mode" ||
         name == "gaussian_T_pulse" || name == "from_potential" ||
         name == "static_charge";
}

void validate(ScenarioConfig& cfg) {
  if (!(cfg.c > 0.0)) fail("c must be > 0");
  if (cfg.steps < 1) fail("steps must be >= 1");
  if (cfg.dt && !(*cfg.dt > 0.0)) fail("dt must be > 0");
  if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
    fail("cfl_safety must lie in (0, 1]");
  if (cfg.spectral_filter &&
      (!(*cfg.spectral_filter > 0.0) || *cfg.spectral_filter > 1.0))
    fail("spectral_filter must lie in (0, 1]");
  if (cfg.material && !(cfg.material->sigma > 0.0)) fail("material.sigma must be > 0");
  if (cfg.output.snapshot_every < 0) fail("output.snapshot_every must be >= 0");

  if (scenario_evolves(cfg.scenario)) {
    const double bound = cfg.cfl_safety * cfl_limit(cfg.grid, cfg.c);
    if (cfg.effective_dt() > bound * (1.0 + 1e-12))
      fail("dt " + std::to_string(cfg.effective_dt()) +
           " violates the CFL bound cfl_safety * min(d)/ (c sqrt 3) = " +
           std::to_string(bound));
  }

  const std::string& s = cfg.scenario;
  if (s == "transverse_wave" || s == "scalar_mode") {
    if (cfg.params.mode == 0) fail("scenario.mode must be nonzero");
    if (cfg.grid.nx < 4) fail("scenario " + s + " needs a resolved x axis (nx >= 4)");
    if (2 * std::abs(cfg.params.mode) >= cfg.grid.nx)
      fail("scenario.mode is unresolvable on nx cells");
  }
  if (s == "static_charge" && cfg.source_mode != SourceMode::Explicit)
    fail("static_charge requires source_mode \"explicit\"");
  if (s == "thomson_reversal" || s == "heated_ball") {
    if (!cfg.material) fail("scenario " + s + " requires a material block");
  }
  if (s == "seebeck_jump") {
    if (cfg.grid.nx < 8) fail("seebeck_jump needs nx >= 8");
    if (!(cfg.params.width >= 4.0 * cfg.grid.dx))
      fail("seebeck_jump.width must cover at least 4 cells");
    if (!(std::fabs(cfg.params.v) < cfg.c)) fail("seebeck_jump requires |v| < c");
  }
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  check_keys(root, "top level",
             {"grid", "c", "dt", "steps", "scheme", "cfl_safety", "spectral_filter",
              "scenario", "source_mode", "material", "output"});

  ScenarioConfig cfg;
  const json* grid = find(root, "grid");
  if (!grid) fail("grid is required");
  cfg.grid = parse_grid(*grid);

  cfg.c = number_or(root, "top level", "c", 1.0);
  if (const json* dt = find(root, "dt")) {
    if (!dt->is_number()) fail("dt must be a number");
    cfg.dt = dt->get<double>();
  }
  cfg.steps = int_or(root, "top level", "steps", 1);

  const std::string scheme = string_or(root, "top level", "scheme", "RK4");
  if (scheme != "RK4") fail("scheme must be \"RK4\"");
  cfg.scheme = Scheme::RK4;

  cfg.cfl_safety = number_or(root, "top level", "cfl_safety", 1.0);
  if (const json* f = find(root, "spectral_filter")) {
    if (!f->is_number()) fail("spectral_filter must be a number");
    cfg.spectral_filter = f->get<double>();
  }

  const json* scenario = find(root, "scenario");
  if (!scenario) fail("scenario is required");
  parse_scenario(*scenario, cfg);

  const std::string mode = string_or(root, "top level", "source_mode", "identified");
  if (mode == "identified")
    cfg.source_mode = SourceMode::IdentifiedWithT;
  else if (mode == "explicit")
    cfg.source_mode = SourceMode::Explicit;
  else
    fail("source_mode must be \"identified\" or \"explicit\"");

  if (const json* m = find(root, "material")) {
    check_keys(*m, "material", {"sigma", "dTdK"});
    MaterialPoint mp;
    mp.sigma = require_number(*m, "material", "sigma");
    mp.dTdK = require_number(*m, "material", "dTdK");
    cfg.material = mp;
  }

  if (const json* o = find(root, "output")) {
    check_keys(*o, "output", {"csv_path", "snapshot_path", "snapshot_every"});
    cfg.output.csv_path = string_or(*o, "output", "csv_path", "");
    cfg.output.snapshot_path = string_or(*o, "output", "snapshot_path", "");
    cfg.output.snapshot_every = int_or(*o, "output", "snapshot_every", 0);
  }

  validate(cfg);
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config_text(text);
}

}  // namespace qmx
