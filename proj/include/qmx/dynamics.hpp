#pragma once

// Explicit RK4 evolution of the seven-component (T, E, B) system:
//   dE/dt = c curl B - c grad T - 4 pi J
//   dB/dt = -c curl E
//   dT/dt = c div E - 4 pi c rho
// with diagnostics per step. The scalar sector grows (cosh in time, one rate
// per Fourier mode); that growth is measured and reported, not suppressed.
// An optional sharp spectral low-pass per step bounds the active band for
// longer demonstrations.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "qmx/field_engine.hpp"

namespace qmx {

enum class Scheme { RK4 };

struct EvolutionConfig {
  double dt = 0.0;
  int steps = 0;
  Scheme scheme = Scheme::RK4;
  double cfl_safety = 1.0;                // dt must be <= cfl_safety * cfl_limit
  std::optional<double> spectral_filter;  // cutoff fraction in (0, 1]
};

struct FieldRate {
  ScalarField T;
  VectorField E;
  VectorField B;
};

// The right sides above, with sources evaluated at the state's time.
FieldRate evolution_rhs(const FieldState& F, const Sources& S);

// Conservative explicit-step bound min(dx,dy,dz)/(c sqrt 3), used for every
// grid including degenerate (1-D/2-D) ones.
double cfl_limit(const Grid& g, double c);

// Q = integral of (E^2 + B^2 - T^2) / 8 pi. Exactly conserved by the
// semi-discrete vacuum system (the centered grad/div pair is skew-adjoint on
// the periodic grid), so its drift isolates the time integrator's error.
double pseudo_energy(const FieldState& F);

// U = integral of (E^2 + B^2 + T^2) / 8 pi. Not conserved when T is active:
// semi-discretely dU/dt = (1/ 2 pi) * integral of T dT/dt.
double energy_u(const FieldState& F);

// One RK4 step (plus the configured filter). The returned state carries no
// rate fields; use evolution_rhs when rates are needed.
FieldState step(const FieldState& F, const Sources& S, const EvolutionConfig& cfg);

struct DiagnosticsRow {
  int step = 0;
  double t = 0.0;
  double energy_u = 0.0;
  double pseudo_energy_q = 0.0;
  double divB_l2 = 0.0;
  double gauss_residual_l2 = 0.0;  // midpoint residual of dT/dt = c div E - 4 pi c rho
  double maxT = 0.0;
};

struct RunResult {
  std::vector<DiagnosticsRow> rows;  // rows[0] describes the initial state
  FieldState state;                  // final state (last finite one on abort)
  std::optional<int> aborted_at;     // step whose result went non-finite
};

// Advances cfg.steps steps with one diagnostics row each (plus row 0 for the
// initial state). When a spectral filter is configured it is also applied to
// the initial state, so the whole run lives in the retained band. on_step,
// when set, observes every accepted state (step >= 1).
RunResult run(const FieldState& F0, const Sources& S, const EvolutionConfig& cfg,
              const std::function<void(int, const FieldState&)>& on_step = {});

// (1/c^2) d2T/dt2 + lap T + (4 pi / c) (drho/dt + div J), evaluated at the
// center of five consecutive states spaced dt apart. Zero for consistent
// evolutions up to O(dt^2); in IdentifiedWithT mode the source terms vanish
// and the expression is exactly the identified charge continuity equation.
ScalarField source_consistency_residual(const std::array<FieldState, 5>& history,
                                        const Sources& S, double dt);

// ---- initial data constructors ----

// E = y_hat A sin(k x), B = z_hat A sin(k x), T = 0, k = 2 pi mode / Lx: an
// exact traveling eigenstate of the discrete vacuum system.
FieldState init_transverse_wave(const Grid& g, double c, int mode, double amplitude);

// T = eps sin(k x), E = B = 0: the growing scalar mode.
FieldState init_scalar_mode(const Grid& g, double c, int mode, double epsilon);

// T = A exp(-|x - center|^2 / (2 w^2)), E = B = 0.
FieldState init_gaussian_pulse(const Grid& g, double c, double amplitude, double width);

// Fields of a random band-limited potential, with discrete time derivatives
// taken at the run's dt (five samples).
FieldState init_from_potential(const TrigPotential& spec, const Grid& g, double c,
                               double dt);

}  // namespace qmx
