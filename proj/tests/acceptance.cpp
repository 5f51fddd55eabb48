// Standalone acceptance harness. Each check exercises one end-to-end claim of
// the library with its tolerance pinned inline, prints exactly one line
// (PASS/FAIL plus the measured numbers), and the process exits nonzero when
// any check fails. No check may be weakened to pass: tolerances here are the
// published contract of the project.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmx/config.hpp"
#include "qmx/dynamics.hpp"
#include "qmx/field_engine.hpp"
#include "qmx/field_ops.hpp"
#include "qmx/fields.hpp"
#include "qmx/grid.hpp"
#include "qmx/potential.hpp"
#include "qmx/quaternion.hpp"
#include "qmx/runner.hpp"
#include "qmx/thermo.hpp"

#ifndef QMX_CONFIG_DIR
#error "QMX_CONFIG_DIR must name the directory with the shipped scenario configs"
#endif
#ifndef QMX_CLI_PATH
#error "QMX_CLI_PATH must name the qmx command-line binary"
#endif

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return std::string(buf);
}

double rel_gap(const qmx::Quaternion& a, const qmx::Quaternion& b) {
  return qmx::norm(a - b) / std::max(1.0, std::max(qmx::norm(a), qmx::norm(b)));
}

qmx::ScenarioConfig load_config(const char* name) {
  return qmx::parse_config_file(std::string(QMX_CONFIG_DIR) + "/" + name);
}

qmx::EvolutionConfig evolution_of(const qmx::ScenarioConfig& cfg) {
  return {cfg.effective_dt(), cfg.steps, cfg.scheme, cfg.cfl_safety, cfg.spectral_filter};
}

// ---- 1: quaternion algebra over random triples -----------------------------

bool quaternion_algebra(std::string& detail) {
  const double kTol = 1e-12;
  const int kTriples = 100000;
  std::mt19937_64 rng(0x51ac5eedULL);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto draw = [&] { return qmx::Quaternion{u(rng), u(rng), u(rng), u(rng)}; };

  double worst = 0.0;
  for (int i = 0; i < kTriples; ++i) {
    const qmx::Quaternion a = draw(), b = draw(), c = draw();
    // associativity of the right action
    worst = std::max(worst,
                     rel_gap(qmx::hamilton_right(qmx::hamilton_right(a, b), c),
                             qmx::hamilton_right(a, qmx::hamilton_right(b, c))));
    // |ab| = |a| |b|
    const double nab = qmx::norm(qmx::hamilton_right(a, b));
    const double nanb = qmx::norm(a) * qmx::norm(b);
    worst = std::max(worst, std::abs(nab - nanb) / std::max(1.0, nanb));
    // left action of a equals the right action written in the other order
    worst = std::max(worst, rel_gap(qmx::hamilton_left(a, b), qmx::hamilton_right(b, a)));
    // symmetric + antisymmetric halves reassemble the full product
    worst = std::max(worst, rel_gap(qmx::sym_product(a, b) + qmx::antisym_product(a, b),
                                    qmx::hamilton_right(a, b)));
  }
  detail = "100000 triples, worst rel gap " + fmt(worst) + ", tol 1e-12";
  return worst <= kTol;
}

// ---- 2: identities at rounding vs laws O(1) on random potentials -----------

bool potential_residual_split(std::string& detail) {
  const double kIdTol = 1e-12;
  const double kLawFloor = 1e-2;
  const qmx::Grid g =
      qmx::make_grid(16, 16, 16, kTau / 16, kTau / 16, kTau / 16);
  const double c = 1.3;

  double worst_id = 0.0;
  double min_law = std::numeric_limits<double>::infinity();
  int law_above = 0;
  const int kCount = 20;
  for (int i = 0; i < kCount; ++i) {
    const qmx::TrigPotential spec =
        qmx::random_trig_potential(9000 + i, 2, 3, 1.0, 1.0);
    const qmx::PotentialField P =
        qmx::sampled_series(spec, g, c, 0.3 + 0.01 * i, 1e-3, 5);
    const qmx::FieldState F = qmx::fields_from_potential(P);
    worst_id = std::max(worst_id, qmx::linf_norm(qmx::identity_residual(F)));
    worst_id = std::max(worst_id, qmx::linf_norm(qmx::potential_identity_residual(P)));
    const double law = qmx::l2_norm(qmx::law_residual(F));
    min_law = std::min(min_law, law);
    if (law > kLawFloor) ++law_above;
  }
  detail = "20 potentials: worst identity Linf " + fmt(worst_id) +
           " (tol 1e-12), law L2 above 1e-2 on " + std::to_string(law_above) +
           "/20 (min " + fmt(min_law) + ", need >= 19)";
  return worst_id <= kIdTol && law_above >= 19;
}

// ---- 3: direct vs combinator field extraction -------------------------------

bool extraction_equivalence(std::string& detail) {
  const double kTol = 1e-13;
  const qmx::Grid g =
      qmx::make_grid(16, 16, 16, kTau / 16, kTau / 16, kTau / 16);
  const double c = 1.3;

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const qmx::TrigPotential spec =
        qmx::random_trig_potential(9000 + i, 2, 3, 1.0, 1.0);
    const qmx::PotentialField P =
        qmx::sampled_series(spec, g, c, 0.3 + 0.01 * i, 1e-3, 5);
    const qmx::FieldState d = qmx::fields_direct(P);
    const qmx::FieldState v = qmx::fields_via_combinators(P);
    worst = std::max(worst, qmx::l2_norm(d.T - v.T) / std::max(1.0, qmx::l2_norm(d.T)));
    worst = std::max(worst, qmx::l2_norm(d.E - v.E) / std::max(1.0, qmx::l2_norm(d.E)));
    worst = std::max(worst, qmx::l2_norm(d.B - v.B) / std::max(1.0, qmx::l2_norm(d.B)));
  }
  detail = "20 potentials, worst rel gap " + fmt(worst) + ", tol 1e-13";
  return worst <= kTol;
}

// ---- 4: transverse wave round trip and second-order decay -------------------

bool transverse_wave_period(std::string& detail) {
  struct Outcome {
    double err;
    double maxT;
  };
  auto one_period = [](int n) -> Outcome {
    const qmx::Grid g = qmx::make_grid(n, 1, 1, kTau / n, 1.0, 1.0);
    const qmx::FieldState F0 = qmx::init_transverse_wave(g, 1.0, 1, 1.0);
    qmx::EvolutionConfig cfg;
    cfg.steps = (15 * n) / 8;  // 240 at n = 128, so dt scales with dx
    cfg.dt = kTau / cfg.steps;
    const qmx::RunResult r = qmx::run(F0, qmx::zero_sources(), cfg);
    double maxT = 0.0;
    for (const qmx::DiagnosticsRow& row : r.rows) maxT = std::max(maxT, row.maxT);
    const double de = qmx::l2_norm(r.state.E - F0.E);
    const double db = qmx::l2_norm(r.state.B - F0.B);
    const double ne = qmx::l2_norm(F0.E);
    const double nb = qmx::l2_norm(F0.B);
    return {std::sqrt((de * de + db * db) / (ne * ne + nb * nb)), maxT};
  };
  const Outcome lo = one_period(128);
  const Outcome hi = one_period(256);
  const double ratio = lo.err / hi.err;
  detail = "rel L2 error " + fmt(lo.err) + " at n=128 (tol 0.02), refinement ratio " +
           fmt(ratio) + " (need 4 +- 0.5), max |T| " +
           fmt(std::max(lo.maxT, hi.maxT)) + " (tol 1e-10)";
  return lo.err < 0.02 && ratio >= 3.5 && ratio <= 4.5 && lo.maxT <= 1e-10 &&
         hi.maxT <= 1e-10;
}

// ---- 5: scalar mode envelope and growth rate --------------------------------

bool scalar_mode_growth(std::string& detail) {
  const qmx::Grid g = qmx::make_grid(128, 1, 1, kTau / 128, 1.0, 1.0);
  const double c = 1.0;
  const double eps = 0.01;
  const qmx::FieldState F0 = qmx::init_scalar_mode(g, c, 1, eps);
  qmx::EvolutionConfig cfg;
  cfg.dt = std::numbers::pi / 250.0;  // 250 steps reach c k t = pi for k = 1
  cfg.steps = 250;
  cfg.spectral_filter = 0.05;
  const qmx::RunResult r = qmx::run(F0, qmx::zero_sources(), cfg);

  double worst_env = 0.0;
  for (const qmx::DiagnosticsRow& row : r.rows) {
    const double ref = eps * std::cosh(c * row.t);
    worst_env = std::max(worst_env, std::abs(row.maxT - ref) / ref);
  }
  const qmx::DiagnosticsRow& a = r.rows.at(200);
  const qmx::DiagnosticsRow& b = r.rows.at(250);
  const double rate = std::log(b.maxT / a.maxT) / (b.t - a.t);
  const double rate_gap = std::abs(rate - c) / c;
  detail = "worst envelope gap " + fmt(worst_env) + " (tol 0.01), late growth rate " +
           fmt(rate) + " vs c|k| = 1 (gap " + fmt(rate_gap) + ", tol 0.02)";
  return worst_env <= 0.01 && rate_gap <= 0.02;
}

// ---- 6: pseudo-energy drift on vacuum runs and dt refinement ----------------

bool pseudo_energy_drift(std::string& detail) {
  const double kDriftTol = 1e-6;
  const char* vacuum[] = {"zero.json", "transverse_wave_n128.json",
                          "scalar_mode_n128.json", "gaussian_pulse_filtered.json",
                          "from_potential_3d.json"};
  double worst_drift = 0.0;
  for (const char* name : vacuum) {
    const qmx::ScenarioConfig cfg = load_config(name);
    const qmx::RunResult r = qmx::run(qmx::scenario_initial_state(cfg),
                                      qmx::scenario_sources(cfg), evolution_of(cfg));
    const double q0 = r.rows.front().pseudo_energy_q;
    double drift = 0.0;
    for (const qmx::DiagnosticsRow& row : r.rows)
      drift = std::max(drift, std::abs(row.pseudo_energy_q - q0));
    worst_drift = std::max(worst_drift, drift / std::max(std::abs(q0), 1e-30));
  }

  // Refinement at a deliberately coarse step: the drift after a fixed time
  // must fall by about 2^4 when dt is halved (accept a factor-2 band).
  const qmx::Grid g = qmx::make_grid(32, 1, 1, kTau / 32, 1.0, 1.0);
  const qmx::FieldState W = qmx::init_transverse_wave(g, 1.0, 7, 1.0);
  auto drift_of = [&](double dt, int steps) {
    qmx::EvolutionConfig e;
    e.dt = dt;
    e.steps = steps;
    const qmx::RunResult r = qmx::run(W, qmx::zero_sources(), e);
    return std::abs(r.rows.back().pseudo_energy_q - r.rows.front().pseudo_energy_q) /
           std::abs(r.rows.front().pseudo_energy_q);
  };
  const double keff = std::sin(7.0 * g.dx) / g.dx;
  const double dt = 0.55 / keff;  // just under the explicit-step bound
  const double coarse = drift_of(dt, 20);
  const double fine = drift_of(dt / 2.0, 40);
  const double ratio = coarse / fine;
  detail = "worst shipped vacuum drift " + fmt(worst_drift) +
           " (tol 1e-6), halving ratio " + fmt(ratio) + " (need 16 within x2)";
  return worst_drift <= kDriftTol && ratio >= 8.0 && ratio <= 32.0 && fine > 1e-12;
}

// ---- 7: div B and charge continuity on every shipped evolution --------------

bool shipped_scenario_continuity(std::string& detail) {
  const double kDivTol = 1e-10;
  const double kFloor = 1e-10;  // residuals at rounding level are accepted as-is
  const char* evolving[] = {"zero.json",
                            "transverse_wave_n128.json",
                            "scalar_mode_n128.json",
                            "gaussian_pulse_filtered.json",
                            "from_potential_3d.json",
                            "static_charge.json"};
  double worst_div = 0.0;
  double worst_ratio_gap = 0.0;
  bool ok = true;
  std::string bad;
  for (const char* name : evolving) {
    const qmx::ScenarioConfig cfg = load_config(name);
    const qmx::FieldState F0 = qmx::scenario_initial_state(cfg);
    const qmx::Sources S = qmx::scenario_sources(cfg);

    const qmx::RunResult full = qmx::run(F0, S, evolution_of(cfg));
    for (const qmx::DiagnosticsRow& row : full.rows)
      worst_div = std::max(worst_div, row.divB_l2);

    // Continuity residual from five consecutive states, then again at dt/2
    // with the same center time; second-order means the coarse residual is
    // about 4x the fine one (or both sit at rounding).
    const double dt = cfg.effective_dt();
    std::vector<qmx::FieldState> coarse, fine;
    qmx::EvolutionConfig ec = evolution_of(cfg);
    ec.steps = 5;
    qmx::run(F0, S, ec, [&](int, const qmx::FieldState& s) { coarse.push_back(s); });
    qmx::EvolutionConfig ef = evolution_of(cfg);
    ef.dt = dt / 2.0;
    ef.steps = 10;
    qmx::run(F0, S, ef, [&](int, const qmx::FieldState& s) { fine.push_back(s); });

    const double rc = qmx::l2_norm(qmx::source_consistency_residual(
        {coarse[0], coarse[1], coarse[2], coarse[3], coarse[4]}, S, dt));
    const double rf = qmx::l2_norm(qmx::source_consistency_residual(
        {fine[3], fine[4], fine[5], fine[6], fine[7]}, S, dt / 2.0));
    const bool at_floor = rc <= kFloor;
    const double ratio = at_floor ? 4.0 : rc / rf;
    if (!at_floor) worst_ratio_gap = std::max(worst_ratio_gap, std::abs(ratio - 4.0));
    if (!(at_floor || (ratio >= 2.5 && ratio <= 6.0))) {
      ok = false;
      bad += std::string(" ") + name + " ratio " + fmt(ratio);
    }
  }
  detail = "6 scenarios: worst div B " + fmt(worst_div) +
           " (tol 1e-10), continuity halving ratios within " + fmt(worst_ratio_gap) +
           " of 4 (band 2.5..6, floor 1e-10)" + bad;
  return ok && worst_div <= kDivTol;
}

// ---- 8: heat ledger worked numbers, closure, reversal -----------------------

bool heat_ledger_numbers(std::string& detail) {
  const double kTol = 1e-12;
  const qmx::Vec3 J{3.0, 0.0, 0.0};
  const qmx::Vec3 gradK{0.2, 0.0, 0.0};
  const qmx::MaterialPoint m{2.0, 0.5};

  const qmx::ThomsonResult t = qmx::thomson_heat(J, gradK, m, 1.0);
  const double kDq = 4.5119366207318921;
  const double kHt = -0.019894367886486918;
  double worst = std::abs(t.dQ_dt - kDq) / std::abs(kDq);
  worst = std::max(worst, std::abs(t.h_T - kHt) / std::abs(kHt));
  worst = std::max(worst,
                   std::abs(qmx::thomson_reversal_experiment(J, gradK, m, 1.0) - t.h_T) /
                       std::abs(t.h_T));

  // Balance closure: choose curl B so the four rates cancel, here and at an
  // oblique operating point.
  struct Point {
    qmx::Vec3 J, gradK;
    qmx::MaterialPoint m;
    double c;
  };
  const Point points[] = {{J, gradK, m, 1.0},
                          {{1.0, 2.0, -0.5}, {0.3, 0.1, 0.2}, {1.7, 0.8}, 1.7}};
  for (const Point& p : points) {
    const qmx::Vec3 curlB = (4.0 * std::numbers::pi / p.c) * p.J + p.m.dTdK * p.gradK;
    const qmx::HeatBalanceTerms b =
        qmx::heat_balance(p.J, p.m, p.gradK, curlB, qmx::Vec3{}, p.c);
    worst = std::max(worst, std::abs(b.total()) / b.joule);
    const double h_ref = qmx::thomson_heat(p.J, p.gradK, p.m, p.c).h_T;
    worst = std::max(worst,
                     std::abs(qmx::thomson_reversal_experiment(p.J, p.gradK, p.m, p.c) -
                              h_ref) /
                         std::abs(h_ref));
  }
  detail = "dQ/dt " + fmt(t.dQ_dt) + ", h_T " + fmt(t.h_T) +
           ", worst rel gap across numbers/closure/reversal " + fmt(worst) +
           ", tol 1e-12";
  return worst <= kTol;
}

// ---- 9: the working-field split and two-source recovery ---------------------

bool working_field_split(std::string& detail) {
  const double kTol = 1e-10;
  const qmx::Grid g =
      qmx::make_grid(16, 16, 16, kTau / 16, kTau / 16, kTau / 16);

  double worst_div = 0.0, worst_curl = 0.0, worst_mean = 0.0;
  for (int i = 0; i < 3; ++i) {
    const qmx::TrigPotential spec =
        qmx::random_trig_potential(301 + i, 2, 3, 1.0, 1.0);
    const qmx::PotentialField P =
        qmx::sampled_series(spec, g, 1.3, 0.25 + 0.05 * i, 1e-3, 5);
    const qmx::FieldState F = qmx::fields_from_potential(P);
    const qmx::ETSplit split = qmx::split_ET(F);
    qmx::ScalarField res = qmx::div(split.E_T) - (1.0 / F.c) * F.Tt;
    for (std::size_t cidx = 0; cidx < res.size(); ++cidx)
      res[cidx] += split.source_mean;
    worst_div = std::max(worst_div, qmx::l2_norm(res));
    worst_curl = std::max(worst_curl, qmx::l2_norm(qmx::curl(split.E_T)));
    worst_mean = std::max(worst_mean, std::abs(split.source_mean));
  }

  // Two sources: a temporal-field drive plus an independent charge. The
  // working field absorbs the drive, and div(E - E_T) recovers 4 pi rho at
  // second order in the spacing.
  auto recover = [](int n) {
    const qmx::Grid gn = qmx::make_grid(n, n, n, kTau / n, kTau / n, kTau / n);
    const double c = 1.3;
    qmx::FieldState F = qmx::zero_state(gn, c);
    F.has_rates = true;
    F.Tt = qmx::ScalarField(gn);
    F.Et = qmx::VectorField(gn);
    F.Bt = qmx::VectorField(gn);
    qmx::ScalarField fourpirho(gn);
    for (int k = 0; k < gn.nz; ++k)
      for (int j = 0; j < gn.ny; ++j)
        for (int i = 0; i < gn.nx; ++i) {
          const double x = i * gn.dx, y = j * gn.dy, z = k * gn.dz;
          const std::size_t c0 = gn.idx(i, j, k);
          // drive potential sin(x) cos(2y) sin(z): laplacian -6 phi
          F.Tt[c0] = c * (-6.0) * std::sin(x) * std::cos(2.0 * y) * std::sin(z);
          // charge potential cos(2x) sin(y) cos(z): 4 pi rho = -laplacian = 6 phi
          fourpirho[c0] = 6.0 * std::cos(2.0 * x) * std::sin(y) * std::cos(z);
          F.E.x[c0] = std::cos(x) * std::cos(2.0 * y) * std::sin(z) -
                      (-2.0 * std::sin(2.0 * x) * std::sin(y) * std::cos(z));
          F.E.y[c0] = -2.0 * std::sin(x) * std::sin(2.0 * y) * std::sin(z) -
                      std::cos(2.0 * x) * std::cos(y) * std::cos(z);
          F.E.z[c0] = std::sin(x) * std::cos(2.0 * y) * std::cos(z) -
                      (-std::cos(2.0 * x) * std::sin(y) * std::sin(z));
        }
    const qmx::ETSplit split = qmx::split_ET(F);
    const qmx::ScalarField res = qmx::div(F.E - split.E_T) - fourpirho;
    return qmx::l2_norm(res) / qmx::l2_norm(fourpirho);
  };
  const double r16 = recover(16);
  const double r32 = recover(32);
  const double ratio = r16 / r32;
  detail = "div residual " + fmt(worst_div) + ", curl " + fmt(worst_curl) +
           ", dropped mean " + fmt(worst_mean) +
           " (tol 1e-10 each); two-source refinement ratio " + fmt(ratio) +
           " (need 3..5)";
  return worst_div <= kTol && worst_curl <= kTol && worst_mean <= kTol &&
         ratio >= 3.0 && ratio <= 5.0;
}

// ---- 10: bit-identical CLI outputs across worker counts ---------------------

bool cli_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  const char* configs[] = {"zero.json",
                           "transverse_wave_n128.json",
                           "scalar_mode_n128.json",
                           "gaussian_pulse_filtered.json",
                           "from_potential_3d.json",
                           "static_charge.json",
                           "thomson_reversal.json",
                           "seebeck_jump.json",
                           "heated_ball.json"};
  if (!fs::exists(QMX_CLI_PATH)) {
    detail = std::string("missing CLI binary ") + QMX_CLI_PATH;
    return false;
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  int files_compared = 0;
  for (const char* name : configs) {
    const std::string cfg_path = std::string(QMX_CONFIG_DIR) + "/" + name;
    const std::string stem = fs::path(name).stem().string();
    std::array<fs::path, 2> dirs;
    const int workers[2] = {1, 7};
    for (int w = 0; w < 2; ++w) {
      dirs[w] = fs::temp_directory_path() /
                ("qmx_acceptance_" + stem + "_w" + std::to_string(workers[w]));
      fs::remove_all(dirs[w]);
      fs::create_directories(dirs[w]);
      const std::string cmd = "cd '" + dirs[w].string() + "' && '" + QMX_CLI_PATH +
                              "' --threads " + std::to_string(workers[w]) +
                              " --quiet run --config '" + cfg_path +
                              "' > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) {
        detail = std::string("run failed for ") + name + " with " +
                 std::to_string(workers[w]) + " workers";
        return false;
      }
    }
    std::vector<std::string> names;
    for (const fs::directory_entry& e : fs::directory_iterator(dirs[0]))
      names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    if (names.empty()) {
      detail = std::string("no outputs produced for ") + name;
      return false;
    }
    for (const std::string& f : names) {
      if (!fs::exists(dirs[1] / f)) {
        detail = f + " missing from the 7-worker run of " + name;
        return false;
      }
      if (slurp(dirs[0] / f) != slurp(dirs[1] / f)) {
        detail = f + " differs between 1 and 7 workers for " + name;
        return false;
      }
      ++files_compared;
    }
    std::size_t other_count = 0;
    for (const fs::directory_entry& e : fs::directory_iterator(dirs[1])) {
      (void)e;
      ++other_count;
    }
    if (other_count != names.size()) {
      detail = std::string("output file sets differ for ") + name;
      return false;
    }
    fs::remove_all(dirs[0]);
    fs::remove_all(dirs[1]);
  }
  detail = std::to_string(files_compared) +
           " output files across 9 scenarios byte-identical for 1 vs 7 workers";
  return files_compared > 0;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {
      {"quaternion algebra on random triples", quaternion_algebra},
      {"potential states: identities at rounding, laws O(1)", potential_residual_split},
      {"direct vs combinator field extraction", extraction_equivalence},
      {"transverse wave period error and refinement", transverse_wave_period},
      {"scalar mode cosh envelope and growth rate", scalar_mode_growth},
      {"pseudo-energy vacuum drift and dt refinement", pseudo_energy_drift},
      {"shipped scenarios: div B and charge continuity", shipped_scenario_continuity},
      {"heat ledger worked numbers, closure, reversal", heat_ledger_numbers},
      {"working-field split and two-source recovery", working_field_split},
      {"CLI determinism across worker counts", cli_determinism},
  };

  bool all_ok = true;
  for (const Entry& e : entries) {
    std::string detail;
    bool ok = false;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] %-52s %s\n", ok ? "PASS" : "FAIL", e.title, detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
