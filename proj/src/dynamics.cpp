#include "qmx/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmx/field_ops.hpp"
#include "qmx/parallel.hpp"
#include "qmx/spectral.hpp"

namespace qmx {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

}  // namespace

FieldRate evolution_rhs(const FieldState& F, const Sources& S) {
  require_same_grid(F.E.grid, F.B.grid);
  require_same_grid(F.E.grid, F.T.grid);
  const Grid& g = F.T.grid;
  const double c = F.c;

  const VectorField curlB = curl(F.B);
  const VectorField gradT = grad(F.T);
  const VectorField curlE = curl(F.E);
  const ScalarField divE = div(F.E);
  const ScalarField rho = rho_at(S, g, F.t);
  const VectorField J = current_at(S, g, F.t);

  FieldRate r{ScalarField(g), VectorField(g), VectorField(g)};
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      r.E.x[i] = c * curlB.x[i] - c * gradT.x[i] - kFourPi * J.x[i];
      r.E.y[i] = c * curlB.y[i] - c * gradT.y[i] - kFourPi * J.y[i];
      r.E.z[i] = c * curlB.z[i] - c * gradT.z[i] - kFourPi * J.z[i];
      r.B.x[i] = -c * curlE.x[i];
      r.B.y[i] = -c * curlE.y[i];
      r.B.z[i] = -c * curlE.z[i];
      r.T.v[i] = c * divE.v[i] - kFourPi * c * rho.v[i];
    }
  });
  return r;
}

double cfl_limit(const Grid& g, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("cfl_limit: c must be > 0");
  return g.min_spacing() / (c * std::sqrt(3.0));
}

double pseudo_energy(const FieldState& F) {
  double acc = 0.0;
  for (std::size_t i = 0; i < F.T.size(); ++i)
    acc += F.E.x[i] * F.E.x[i] + F.E.y[i] * F.E.y[i] + F.E.z[i] * F.E.z[i] +
           F.B.x[i] * F.B.x[i] + F.B.y[i] * F.B.y[i] + F.B.z[i] * F.B.z[i] -
           F.T.v[i] * F.T.v[i];
  return acc * F.T.grid.cell_volume() / (8.0 * std::numbers::pi);
}

double energy_u(const FieldState& F) {
  double acc = 0.0;
  for (std::size_t i = 0; i < F.T.size(); ++i)
    acc += F.E.x[i] * F.E.x[i] + F.E.y[i] * F.E.y[i] + F.E.z[i] * F.E.z[i] +
           F.B.x[i] * F.B.x[i] + F.B.y[i] * F.B.y[i] + F.B.z[i] * F.B.z[i] +
           F.T.v[i] * F.T.v[i];
  return acc * F.T.grid.cell_volume() / (8.0 * std::numbers::pi);
}

namespace {

FieldState state_plus(const FieldState& F, const FieldRate& k, double a, double t) {
  const Grid& g = F.T.grid;
  FieldState out;
  out.t = t;
  out.c = F.c;
  out.T = ScalarField(g);
  out.E = VectorField(g);
  out.B = VectorField(g);
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      out.T.v[i] = F.T.v[i] + a * k.T.v[i];
      out.E.x[i] = F.E.x[i] + a * k.E.x[i];
      out.E.y[i] = F.E.y[i] + a * k.E.y[i];
      out.E.z[i] = F.E.z[i] + a * k.E.z[i];
      out.B.x[i] = F.B.x[i] + a * k.B.x[i];
      out.B.y[i] = F.B.y[i] + a * k.B.y[i];
      out.B.z[i] = F.B.z[i] + a * k.B.z[i];
    }
  });
  return out;
}

void apply_filter(FieldState& F, const std::optional<double>& cutoff) {
  if (!cutoff) return;
  spectral_lowpass(F.T, *cutoff);
  spectral_lowpass(F.E, *cutoff);
  spectral_lowpass(F.B, *cutoff);
}

void validate_config(const EvolutionConfig& cfg, const Grid& g, double c) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("evolution: dt must be > 0");
  if (cfg.steps <= 0) throw std::invalid_argument("evolution: steps must be > 0");
  if (!(cfg.cfl_safety > 0.0) || cfg.cfl_safety > 1.0)
    throw std::invalid_argument("evolution: cfl_safety must lie in (0, 1]");
  if (cfg.spectral_filter &&
      (!(*cfg.spectral_filter > 0.0) || *cfg.spectral_filter > 1.0))
    throw std::invalid_argument("evolution: spectral_filter must lie in (0, 1]");
  const double bound = cfg.cfl_safety * cfl_limit(g, c);
  // Tiny headroom so dt computed as exactly cfl_safety * cfl_limit passes.
  if (cfg.dt > bound * (1.0 + 1e-12))
    throw std::invalid_argument("evolution: dt violates the CFL bound");
}

}  // namespace

FieldState step(const FieldState& F, const Sources& S, const EvolutionConfig& cfg) {
  const Grid& g = F.T.grid;
  const double dt = cfg.dt;

  const FieldRate k1 = evolution_rhs(F, S);
  const FieldState s2 = state_plus(F, k1, 0.5 * dt, F.t + 0.5 * dt);
  const FieldRate k2 = evolution_rhs(s2, S);
  const FieldState s3 = state_plus(F, k2, 0.5 * dt, F.t + 0.5 * dt);
  const FieldRate k3 = evolution_rhs(s3, S);
  const FieldState s4 = state_plus(F, k3, dt, F.t + dt);
  const FieldRate k4 = evolution_rhs(s4, S);

  FieldState out;
  out.t = F.t + dt;
  out.c = F.c;
  out.T = ScalarField(g);
  out.E = VectorField(g);
  out.B = VectorField(g);
  const double w = dt / 6.0;
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      out.T.v[i] =
          F.T.v[i] + w * (k1.T.v[i] + 2.0 * k2.T.v[i] + 2.0 * k3.T.v[i] + k4.T.v[i]);
      out.E.x[i] =
          F.E.x[i] + w * (k1.E.x[i] + 2.0 * k2.E.x[i] + 2.0 * k3.E.x[i] + k4.E.x[i]);
      out.E.y[i] =
          F.E.y[i] + w * (k1.E.y[i] + 2.0 * k2.E.y[i] + 2.0 * k3.E.y[i] + k4.E.y[i]);
      out.E.z[i] =
          F.E.z[i] + w * (k1.E.z[i] + 2.0 * k2.E.z[i] + 2.0 * k3.E.z[i] + k4.E.z[i]);
      out.B.x[i] =
          F.B.x[i] + w * (k1.B.x[i] + 2.0 * k2.B.x[i] + 2.0 * k3.B.x[i] + k4.B.x[i]);
      out.B.y[i] =
          F.B.y[i] + w * (k1.B.y[i] + 2.0 * k2.B.y[i] + 2.0 * k3.B.y[i] + k4.B.y[i]);
      out.B.z[i] =
          F.B.z[i] + w * (k1.B.z[i] + 2.0 * k2.B.z[i] + 2.0 * k3.B.z[i] + k4.B.z[i]);
    }
  });
  apply_filter(out, cfg.spectral_filter);
  return out;
}

namespace {

// Midpoint-in-time residual of dT/dt = c div E - 4 pi c rho between two
// consecutive states; the semi-discrete constraint is exact, so this isolates
// the O(dt^2) time-sampling error.
double gauss_residual(const FieldState& prev, const FieldState& cur,
                      const Sources& S, double dt) {
  const Grid& g = cur.T.grid;
  const double c = cur.c;
  VectorField e_mid(g);
  for (std::size_t i = 0; i < e_mid.size(); ++i) {
    e_mid.x[i] = 0.5 * (prev.E.x[i] + cur.E.x[i]);
    e_mid.y[i] = 0.5 * (prev.E.y[i] + cur.E.y[i]);
    e_mid.z[i] = 0.5 * (prev.E.z[i] + cur.E.z[i]);
  }
  const ScalarField divE = div(e_mid);
  const ScalarField rho = rho_at(S, g, 0.5 * (prev.t + cur.t));
  ScalarField res(g);
  const double inv_cdt = 1.0 / (c * dt);
  for (std::size_t i = 0; i < res.size(); ++i)
    res.v[i] = divE.v[i] - (cur.T.v[i] - prev.T.v[i]) * inv_cdt - kFourPi * rho.v[i];
  return l2_norm(res);
}

DiagnosticsRow make_row(int step, const FieldState& F, double gauss_l2) {
  DiagnosticsRow row;
  row.step = step;
  row.t = F.t;
  row.energy_u = energy_u(F);
  row.pseudo_energy_q = pseudo_energy(F);
  row.divB_l2 = l2_norm(div(F.B));
  row.gauss_residual_l2 = gauss_l2;
  row.maxT = linf_norm(F.T);
  return row;
}

bool state_finite(const FieldState& F) {
  return all_finite(F.T) && all_finite(F.E) && all_finite(F.B);
}

}  // namespace

RunResult run(const FieldState& F0, const Sources& S, const EvolutionConfig& cfg,
              const std::function<void(int, const FieldState&)>& on_step) {
  validate_config(cfg, F0.T.grid, F0.c);

  RunResult result;
  result.state = F0;
  result.state.has_rates = false;
  result.state.Tt = {};
  result.state.Et = {};
  result.state.Bt = {};
  apply_filter(result.state, cfg.spectral_filter);
  result.rows.push_back(make_row(0, result.state, 0.0));

  for (int s = 1; s <= cfg.steps; ++s) {
    FieldState next = step(result.state, S, cfg);
    if (!state_finite(next)) {
      result.aborted_at = s;
      break;
    }
    const double gauss = gauss_residual(result.state, next, S, cfg.dt);
    result.state = std::move(next);
    result.rows.push_back(make_row(s, result.state, gauss));
    if (on_step) on_step(s, result.state);
  }
  return result;
}

ScalarField source_consistency_residual(const std::array<FieldState, 5>& history,
                                        const Sources& S, double dt) {
  const Grid& g = history[2].T.grid;
  for (const auto& F : history) require_same_grid(F.T.grid, g);
  if (!(dt > 0.0))
    throw std::invalid_argument("source_consistency_residual: dt must be > 0");
  const double c = history[2].c;

  // Composed centered second difference, matching the spatial stencils'
  // composition structure.
  const double h = 0.5 / dt;
  ScalarField Ttt(g);
  for (std::size_t i = 0; i < Ttt.size(); ++i) {
    const double left = (history[2].T.v[i] - history[0].T.v[i]) * h;
    const double right = (history[4].T.v[i] - history[2].T.v[i]) * h;
    Ttt.v[i] = (right - left) * h;
  }

  const ScalarField lapT = laplacian(history[2].T);
  const double t_mid = history[2].t;
  const ScalarField divJ =
      S.mode == SourceMode::Explicit ? div(current_at(S, g, t_mid)) : ScalarField(g);
  const double drho_dt = S.mode == SourceMode::Explicit ? S.rho_rate : 0.0;

  ScalarField res(g);
  const double inv_c2 = 1.0 / (c * c);
  const double four_pi_over_c = kFourPi / c;
  for (std::size_t i = 0; i < res.size(); ++i)
    res.v[i] = inv_c2 * Ttt.v[i] + lapT.v[i] + four_pi_over_c * (drho_dt + divJ.v[i]);
  return res;
}

FieldState init_transverse_wave(const Grid& g, double c, int mode, double amplitude) {
  if (mode == 0) throw std::invalid_argument("transverse_wave: mode must be nonzero");
  FieldState F = zero_state(g, c);
  const double k = 2.0 * std::numbers::pi * mode / g.length_x();
  for (int kk = 0; kk < g.nz; ++kk)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double s = amplitude * std::sin(k * (i * g.dx));
        F.E.y[g.idx(i, j, kk)] = s;
        F.B.z[g.idx(i, j, kk)] = s;
      }
  F.has_rates = false;
  F.Tt = {};
  F.Et = {};
  F.Bt = {};
  return F;
}

FieldState init_scalar_mode(const Grid& g, double c, int mode, double epsilon) {
  if (mode == 0) throw std::invalid_argument("scalar_mode: mode must be nonzero");
  FieldState F = zero_state(g, c);
  const double k = 2.0 * std::numbers::pi * mode / g.length_x();
  for (int kk = 0; kk < g.nz; ++kk)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        F.T.v[g.idx(i, j, kk)] = epsilon * std::sin(k * (i * g.dx));
  F.has_rates = false;
  F.Tt = {};
  F.Et = {};
  F.Bt = {};
  return F;
}

FieldState init_gaussian_pulse(const Grid& g, double c, double amplitude, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_T_pulse: width must be > 0");
  FieldState F = zero_state(g, c);
  const double cx = 0.5 * g.length_x(), cy = 0.5 * g.length_y(),
               cz = 0.5 * g.length_z();
  const double inv2w2 = 1.0 / (2.0 * width * width);
  for (int kk = 0; kk < g.nz; ++kk)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double ddx = g.nx > 1 ? i * g.dx - cx : 0.0;
        const double ddy = g.ny > 1 ? j * g.dy - cy : 0.0;
        const double ddz = g.nz > 1 ? kk * g.dz - cz : 0.0;
        F.T.v[g.idx(i, j, kk)] =
            amplitude * std::exp(-(ddx * ddx + ddy * ddy + ddz * ddz) * inv2w2);
      }
  F.has_rates = false;
  F.Tt = {};
  F.Et = {};
  F.Bt = {};
  return F;
}

FieldState init_from_potential(const TrigPotential& spec, const Grid& g, double c,
                               double dt) {
  const PotentialField P = sampled_series(spec, g, c, 0.0, dt, 5);
  FieldState F = fields_from_potential(P);
  F.t = 0.0;
  return F;
}

}  // namespace qmx
