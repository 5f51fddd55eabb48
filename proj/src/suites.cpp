#include "qmx/suites.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include "qmx/dynamics.hpp"
#include "qmx/field_engine.hpp"
#include "qmx/field_ops.hpp"
#include "qmx/fields.hpp"
#include "qmx/potential.hpp"
#include "qmx/quaternion.hpp"
#include "qmx/thermo.hpp"

namespace qmx {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

CheckLine check_leq(std::string name, double value, double bound) {
  return {std::move(name), value, "<= " + fmt(bound), value <= bound};
}

CheckLine check_geq(std::string name, double value, double bound) {
  return {std::move(name), value, ">= " + fmt(bound), value >= bound};
}

CheckLine check_range(std::string name, double value, double lo, double hi) {
  return {std::move(name), value, "in [" + fmt(lo) + ", " + fmt(hi) + "]",
          value >= lo && value <= hi};
}

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  return {2.0 * unit_real(rng) - 1.0, 2.0 * unit_real(rng) - 1.0,
          2.0 * unit_real(rng) - 1.0, 2.0 * unit_real(rng) - 1.0};
}

// ---- algebra ----

SuiteReport algebra_suite() {
  SuiteReport rep{"algebra", {}};
  std::mt19937_64 rng(0x51a7e5u);

  double assoc = 0.0, norm_mult = 0.0, duality = 0.0, closure = 0.0, antisym_scalar = 0.0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    const double na = norm(a), nb = norm(b), nc = norm(c);
    const double tiny = 1e-300;

    const Quaternion ab = hamilton_right(a, b);
    assoc = std::max(assoc, norm(hamilton_right(ab, c) - hamilton_right(a, hamilton_right(b, c))) /
                                (na * nb * nc + tiny));
    norm_mult = std::max(norm_mult, std::fabs(norm(ab) - na * nb) / (na * nb + tiny));
    duality = std::max(duality, norm(hamilton_left(a, b) - hamilton_right(b, a)) / (na * nb + tiny));
    const Quaternion halves = sym_product(a, b) + antisym_product(a, b);
    closure = std::max(closure, norm(halves - ab) / (na * nb + tiny));
    antisym_scalar = std::max(antisym_scalar, std::fabs(antisym_product(a, b).w));
  }
  rep.lines.push_back(check_leq("associativity_rel_max", assoc, 1e-12));
  rep.lines.push_back(check_leq("norm_multiplicativity_rel_max", norm_mult, 1e-12));
  rep.lines.push_back(check_leq("left_right_duality_rel_max", duality, 1e-12));
  rep.lines.push_back(check_leq("sym_plus_antisym_closure_rel_max", closure, 1e-12));
  rep.lines.push_back(check_leq("antisym_scalar_part_max", antisym_scalar, 0.0));

  // Worked products of (1,2,3,4) and (5,6,7,8); small-integer arithmetic is
  // exact in doubles, so these hold bitwise.
  const Quaternion a{1, 2, 3, 4}, b{5, 6, 7, 8};
  rep.lines.push_back(
      check_leq("right_product_example_err", norm(hamilton_right(a, b) - Quaternion{-60, 12, 30, 24}), 0.0));
  rep.lines.push_back(
      check_leq("left_product_example_err", norm(hamilton_left(a, b) - Quaternion{-60, 20, 14, 32}), 0.0));
  rep.lines.push_back(
      check_leq("sym_product_example_err", norm(sym_product(a, b) - Quaternion{-60, 16, 22, 28}), 0.0));
  rep.lines.push_back(
      check_leq("antisym_product_example_err", norm(antisym_product(a, b) - Quaternion{0, -4, 8, -4}), 0.0));
  rep.lines.push_back(
      check_leq("norm_example_err", std::fabs(norm(a) - 5.477225575051661), 1e-15));
  return rep;
}

// ---- identities ----

double rel_linf_gap(const FieldState& a, const FieldState& b) {
  const double scale =
      std::max({linf_norm(a.T), linf_norm(a.E), linf_norm(a.B), 1e-30});
  double gap = std::max({linf_norm(a.T - b.T), linf_norm(a.E - b.E), linf_norm(a.B - b.B)});
  if (a.has_rates && b.has_rates) {
    gap = std::max({gap, linf_norm(a.Tt - b.Tt), linf_norm(a.Et - b.Et),
                    linf_norm(a.Bt - b.Bt)});
  }
  return gap / scale;
}

SuiteReport identities_suite() {
  SuiteReport rep{"identities", {}};
  const double d = 2.0 * kPi / 16.0;
  const Grid g = make_grid(16, 16, 16, d, d, d);
  const double c = 1.3;
  const double dt = 1e-3;

  double eq14_max = 0.0, eq23_max = 0.0, law_min = std::numeric_limits<double>::infinity();
  double gap_max = 0.0;
  int law_above = 0;
  const int trials = 20;
  for (int i = 0; i < trials; ++i) {
    const TrigPotential spec =
        random_trig_potential(9000 + static_cast<std::uint64_t>(i), 2, 3, 1.0, 2.0);
    const PotentialField P = sampled_series(spec, g, c, 0.3 + 0.1 * i, dt, 5);
    const FieldState F = fields_from_potential(P);

    eq14_max = std::max(eq14_max, linf_norm(identity_residual(F)));
    eq23_max = std::max(eq23_max, linf_norm(potential_identity_residual(P)));

    const double law = l2_norm(law_residual(F));
    law_min = std::min(law_min, law);
    if (law > 1e-2) ++law_above;

    gap_max = std::max(gap_max, rel_linf_gap(fields_direct(P), fields_via_combinators(P)));
  }
  rep.lines.push_back(check_leq("field_identity_residual_linf_max", eq14_max, 1e-12));
  rep.lines.push_back(check_leq("potential_identity_residual_linf_max", eq23_max, 1e-12));
  rep.lines.push_back(check_geq("law_residual_l2_min", law_min, 0.0));
  rep.lines.push_back(
      check_geq("law_residual_above_1e-2_count", static_cast<double>(law_above), 19.0));
  rep.lines.push_back(check_leq("extraction_path_gap_rel_max", gap_max, 1e-13));
  return rep;
}

// ---- convergence ----

SuiteReport convergence_suite() {
  SuiteReport rep{"convergence", {}};
  const std::vector<int> res{16, 32, 64};

  rep.lines.push_back(check_range(
      "grad_order", convergence_order(DiffOp::Grad, AnalyticCase::TrigScalar, res), 1.9, 2.1));
  rep.lines.push_back(check_range(
      "div_order", convergence_order(DiffOp::Div, AnalyticCase::TrigVector, res), 1.9, 2.1));
  rep.lines.push_back(check_range(
      "curl_order", convergence_order(DiffOp::Curl, AnalyticCase::TrigVector, res), 1.9, 2.1));
  rep.lines.push_back(check_range(
      "laplacian_order", convergence_order(DiffOp::Laplacian, AnalyticCase::TrigScalar, res),
      1.9, 2.1));

  // Structural operator identities at one resolution: these hold to rounding
  // for every field, which is what the divergence-free evolution and the
  // Poisson-based splits lean on.
  const double d = 2.0 * kPi / 32.0;
  const Grid g = make_grid(32, 32, 32, d, d, d);
  const PotentialSample smooth =
      sample_potential(random_trig_potential(777, 2, 3, 1.0, 1.0), g, 0.25);

  rep.lines.push_back(check_leq("curl_grad_l2", l2_norm(curl(grad(smooth.U))), 1e-12));
  rep.lines.push_back(check_leq("div_curl_l2", l2_norm(div(curl(smooth.A))), 1e-12));

  VectorField cc = curl(curl(smooth.A));
  const VectorField gd = grad(div(smooth.A));
  ScalarField ax(g), ay(g), az(g);
  ax.v = smooth.A.x;
  ay.v = smooth.A.y;
  az.v = smooth.A.z;
  const ScalarField lx = laplacian(ax), ly = laplacian(ay), lz = laplacian(az);
  for (std::size_t cidx = 0; cidx < cc.size(); ++cidx) {
    cc.x[cidx] -= gd.x[cidx] - lx.v[cidx];
    cc.y[cidx] -= gd.y[cidx] - ly.v[cidx];
    cc.z[cidx] -= gd.z[cidx] - lz.v[cidx];
  }
  rep.lines.push_back(check_leq("curl_curl_identity_l2", l2_norm(cc), 1e-12));
  return rep;
}

// ---- conservation ----

SuiteReport conservation_suite() {
  SuiteReport rep{"conservation", {}};
  const double c = 1.0;

  // Transverse eigenstate on a coarse 1-D grid; its single discrete frequency
  // makes the integrator's footprint on Q clean to read.
  const double dx = 2.0 * kPi / 32.0;
  const Grid g1 = make_grid(32, 1, 1, dx, 1.0, 1.0);
  const int mode = 4;
  const double keff = std::sin(mode * dx) / dx;

  {
    EvolutionConfig cfg;
    cfg.dt = 0.08 / (c * keff);
    cfg.steps = 24;
    const RunResult r = run(init_transverse_wave(g1, c, mode, 1.0), zero_sources(), cfg);
    const double u0 = r.rows.front().energy_u;
    const double drift =
        std::fabs(r.rows.back().pseudo_energy_q - r.rows.front().pseudo_energy_q) / u0;
    double max_t = 0.0, max_divb = 0.0;
    for (const DiagnosticsRow& row : r.rows) {
      max_t = std::max(max_t, row.maxT);
      max_divb = std::max(max_divb, row.divB_l2);
    }
    rep.lines.push_back(check_leq("vacuum_q_drift_rel", drift, 1e-6));
    rep.lines.push_back(check_leq("transverse_maxT", max_t, 1e-10));
    rep.lines.push_back(check_leq("transverse_divB_l2_max", max_divb, 1e-10));
  }

  {
    // Fixed total time, dt halved: Q drift must fall ~16x (fourth order).
    const double span = 0.35;  // |eigenvalue| * dt for the base run
    EvolutionConfig base;
    base.dt = span / (c * keff);
    base.steps = 18;
    EvolutionConfig half = base;
    half.dt = 0.5 * base.dt;
    half.steps = 36;
    const FieldState F0 = init_transverse_wave(g1, c, mode, 1.0);
    const RunResult rb = run(F0, zero_sources(), base);
    const RunResult rh = run(F0, zero_sources(), half);
    const double u0 = rb.rows.front().energy_u;
    const double db =
        std::fabs(rb.rows.back().pseudo_energy_q - rb.rows.front().pseudo_energy_q) / u0;
    const double dh =
        std::fabs(rh.rows.back().pseudo_energy_q - rh.rows.front().pseudo_energy_q) / u0;
    rep.lines.push_back(check_range("q_drift_halving_ratio", db / dh, 8.0, 32.0));
  }

  {
    // Scalar sector: U grows hyperbolically while Q stays put.
    const double dxs = 2.0 * kPi / 64.0;
    const Grid gs = make_grid(64, 1, 1, dxs, 1.0, 1.0);
    EvolutionConfig cfg;
    cfg.dt = kPi / 200.0;
    cfg.steps = 200;
    const RunResult r = run(init_scalar_mode(gs, c, 1, 0.01), zero_sources(), cfg);
    const double u0 = r.rows.front().energy_u;
    const double drift =
        std::fabs(r.rows.back().pseudo_energy_q - r.rows.front().pseudo_energy_q) / u0;
    rep.lines.push_back(check_leq("scalar_q_drift_rel", drift, 1e-6));
    rep.lines.push_back(check_geq("scalar_u_growth_factor", r.rows.back().energy_u / u0, 10.0));
  }

  {
    // Random band-limited 3-D state: div B stays at rounding level.
    const double d3 = 2.0 * kPi / 16.0;
    const Grid g3 = make_grid(16, 16, 16, d3, d3, d3);
    EvolutionConfig cfg;
    cfg.dt = 0.3 * cfl_limit(g3, c);
    cfg.steps = 10;
    const TrigPotential spec = random_trig_potential(0xC0FFEEu, 2, 2, 0.1, 1.0);
    const RunResult r =
        run(init_from_potential(spec, g3, c, cfg.dt), zero_sources(), cfg);
    double max_divb = 0.0;
    for (const DiagnosticsRow& row : r.rows) max_divb = std::max(max_divb, row.divB_l2);
    rep.lines.push_back(check_leq("potential_state_divB_l2_max", max_divb, 1e-10));
  }
  return rep;
}

// ---- thermo ----

// Analytic two-source construction shared by the Eq-33-style recovery check:
// a curl-free field from free charge plus a temporal part from dT/dt.
double two_source_recovery_residual(int n) {
  const double d = 2.0 * kPi / n;
  const Grid g = make_grid(n, n, n, d, d, d);
  const double c = 1.0;

  FieldState F = zero_state(g, c);
  ScalarField four_pi_rho(g);

  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const std::size_t cell = g.idx(i, j, k);
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        // phi_T = 0.7 sin x cos 2y sin z; phi_rho = 0.4 cos 2x sin y sin 2z.
        const double pt = 0.7 * std::sin(x) * std::cos(2.0 * y) * std::sin(z);
        F.Tt.v[cell] = c * (-6.0 * pt);  // lap phi_T = -6 phi_T
        // E = grad phi_T - grad phi_rho (analytic gradients).
        F.E.x[cell] = 0.7 * std::cos(x) * std::cos(2.0 * y) * std::sin(z) +
                      0.8 * std::sin(2.0 * x) * std::sin(y) * std::sin(2.0 * z);
        F.E.y[cell] = -1.4 * std::sin(x) * std::sin(2.0 * y) * std::sin(z) -
                      0.4 * std::cos(2.0 * x) * std::cos(y) * std::sin(2.0 * z);
        F.E.z[cell] = 0.7 * std::sin(x) * std::cos(2.0 * y) * std::cos(z) -
                      0.8 * std::cos(2.0 * x) * std::sin(y) * std::cos(2.0 * z);
        // div(-grad phi_rho) = 9 phi_rho plays the free-charge side.
        four_pi_rho.v[cell] = 9.0 * 0.4 * std::cos(2.0 * x) * std::sin(y) * std::sin(2.0 * z);
      }

  const ETSplit split = split_ET(F);
  return l2_norm(div(F.E - split.E_T) - four_pi_rho);
}

SuiteReport thermo_suite() {
  SuiteReport rep{"thermo", {}};
  const double c = 1.0;
  const MaterialPoint m{2.0, 0.5};
  const Vec3 J{3.0, 0.0, 0.0};
  const Vec3 gradK{0.2, 0.0, 0.0};

  const Vec3 curlB{m.dTdK * gradK.x + 4.0 * kPi * J.x / c,
                   m.dTdK * gradK.y + 4.0 * kPi * J.y / c,
                   m.dTdK * gradK.z + 4.0 * kPi * J.z / c};
  const HeatBalanceTerms hb = heat_balance(J, m, gradK, curlB, Vec3{}, c);
  const double term_scale = std::max(std::fabs(hb.joule), std::fabs(hb.curl_term));
  rep.lines.push_back(check_leq("heat_balance_sum_rel", std::fabs(hb.total()) / term_scale, 1e-12));
  rep.lines.push_back(check_leq("joule_worked_value_err", std::fabs(hb.joule - 4.5), 0.0));

  const HeatBalanceTerms hbr = heat_balance(-J, m, gradK,
                                            Vec3{m.dTdK * gradK.x + 4.0 * kPi * -J.x / c,
                                                 m.dTdK * gradK.y + 4.0 * kPi * -J.y / c,
                                                 m.dTdK * gradK.z + 4.0 * kPi * -J.z / c},
                                            Vec3{}, c);
  rep.lines.push_back(check_leq("joule_parity_gap", std::fabs(hbr.joule - hb.joule), 0.0));
  rep.lines.push_back(check_leq("thomson_parity_gap", std::fabs(hbr.thomson + hb.thomson), 0.0));

  const ThomsonResult th = thomson_heat(J, gradK, m, c);
  rep.lines.push_back(check_leq(
      "dQdt_worked_value_rel", std::fabs(th.dQ_dt - 4.5119366207318921) / 4.5119366207318921, 1e-12));
  rep.lines.push_back(check_leq(
      "hT_worked_value_rel", std::fabs(th.h_T + 0.019894367886486918) / 0.019894367886486918, 1e-12));
  const double ht_est = thomson_reversal_experiment(J, gradK, m, c);
  rep.lines.push_back(
      check_leq("hT_reversal_rel", std::fabs(ht_est - th.h_T) / std::fabs(th.h_T), 1e-12));

  {
    const ProbeCharge probe{1.0, {}, {}};
    const std::vector<double> flat(9, 1.0);  // T == 1 sampled over duration 2
    const double w = temporal_work(probe, flat, 0.25, c);
    rep.lines.push_back(check_leq("work_constant_T_err", std::fabs(w + 2.0), 0.0));
    const ProbeCharge neg{-1.0, {}, {}};
    rep.lines.push_back(
        check_leq("work_charge_parity_gap", std::fabs(temporal_work(neg, flat, 0.25, c) + w), 0.0));
  }

  {
    const SeebeckResult sj = seebeck_jump(256, 0.05, 0.0, 2.0, 0.25, 0.1, 1.0);
    rep.lines.push_back(check_leq("seebeck_kick_err", std::fabs(sj.kick - 0.2), 1e-15));
    const SeebeckResult sjr = seebeck_jump(256, 0.05, 0.0, 2.0, 0.25, -0.1, 1.0);
    rep.lines.push_back(check_leq("seebeck_kick_odd_in_v_gap", std::fabs(sjr.kick + sj.kick), 1e-15));
  }

  {
    const double inside = heated_ball_field(0.5, 1.0, 0.6, 2.0, 1.0);
    rep.lines.push_back(check_leq("ball_worked_value_rel", std::fabs(inside - 0.2) / 0.2, 1e-12));
    const double at_r = heated_ball_field(1.0, 1.0, 0.6, 2.0, 1.0);
    const double outside = heated_ball_field(1.0 + 1e-14, 1.0, 0.6, 2.0, 1.0);
    rep.lines.push_back(
        check_leq("ball_surface_continuity_rel", std::fabs(outside - at_r) / at_r, 1e-12));
    const double far = heated_ball_field(2.0, 1.0, 0.6, 2.0, 1.0);
    rep.lines.push_back(
        check_leq("ball_inverse_square_rel", std::fabs(4.0 * far - at_r) / at_r, 1e-12));
  }

  {
    // Temporal-source split: div E_T reproduces (1/c) dT/dt, curl-free.
    const double d = 2.0 * kPi / 32.0;
    const Grid g = make_grid(32, 32, 32, d, d, d);
    FieldState F = zero_state(g, c);
    for (int k = 0; k < g.nz; ++k)
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          F.Tt.v[g.idx(i, j, k)] =
              std::sin(i * g.dx) * std::cos(2.0 * j * g.dy) * std::sin(k * g.dz);
    const ETSplit split = split_ET(F);
    rep.lines.push_back(
        check_leq("split_div_match_l2", l2_norm(div(split.E_T) - (1.0 / c) * F.Tt), 1e-10));
    rep.lines.push_back(check_leq("split_curl_l2", l2_norm(curl(split.E_T)), 1e-10));

    FieldState F2 = F;
    F2.Tt = 2.0 * F.Tt;
    const ETSplit split2 = split_ET(F2);
    rep.lines.push_back(check_leq(
        "split_linearity_rel",
        l2_norm(split2.E_T - 2.0 * split.E_T) / l2_norm(split2.E_T), 1e-12));

    // Static sine-wave T: the curl system's right side is a pure gradient,
    // so its divergence-free part (and B_T) vanish while the incompatibility
    // norm reports the mismatch honestly.
    FieldState Fs = zero_state(g, c);
    for (int i = 0; i < g.nx; ++i)
      for (int k = 0; k < g.nz; ++k)
        for (int j = 0; j < g.ny; ++j) Fs.T.v[g.idx(i, j, k)] = 0.3 * std::sin(i * g.dx);
    const ETSplit split_s = split_ET(Fs);
    const DHSplit dh = build_DH(Fs, split_s.E_T, ScalarField(g));
    rep.lines.push_back(check_leq("dh_BT_l2", l2_norm(dh.B_T), 1e-10));
    rep.lines.push_back(check_geq("dh_incompatibility_reported", dh.incompatibility_l2, 1e-3));
  }

  {
    const double r16 = two_source_recovery_residual(16);
    const double r32 = two_source_recovery_residual(32);
    rep.lines.push_back(check_range("two_source_recovery_order_ratio", r16 / r32, 3.0, 5.0));
  }
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const CheckLine& line : lines)
    if (!line.ok) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"algebra", "identities", "convergence", "conservation", "thermo"};
}

SuiteReport run_suite(const std::string& name) {
  if (name == "algebra") return algebra_suite();
  if (name == "identities") return identities_suite();
  if (name == "convergence") return convergence_suite();
  if (name == "conservation") return conservation_suite();
  if (name == "thermo") return thermo_suite();
  throw std::invalid_argument("unknown suite: " + name);
}

void print_report(const SuiteReport& report, std::ostream& out) {
  out << "suite: " << report.suite << "\n";
  int ok_count = 0;
  for (const CheckLine& line : report.lines) {
    char value[32];
    std::snprintf(value, sizeof value, "%12.5e", line.value);
    out << "  [" << (line.ok ? "PASS" : "FAIL") << "] " << line.name;
    for (std::size_t pad = line.name.size(); pad < 36; ++pad) out << ' ';
    out << value << "   (" << line.bound << ")\n";
    if (line.ok) ++ok_count;
  }
  out << "result: " << (ok_count == static_cast<int>(report.lines.size()) ? "PASS" : "FAIL")
      << " (" << ok_count << "/" << report.lines.size() << ")\n";
}

}  // namespace qmx
