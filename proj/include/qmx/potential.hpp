#pragma once

// The grid-sampled potential (scalar U, vector A) together with its time
// derivatives at the evaluation instant. Derivatives either come from a
// uniformly spaced sample series (centered differences; the second derivative
// is the centered first difference applied twice, so it commutes exactly with
// every spatial operator) or are filled in analytically by manufactured
// cases.

#include <cstdint>
#include <vector>

#include "qmx/fields.hpp"

namespace qmx {

struct PotentialField {
  double c = 1.0;
  ScalarField U;
  VectorField A;
  ScalarField Ut;   // dU/dt
  VectorField At;   // dA/dt
  ScalarField Utt;  // d2U/dt2, meaningful only when has_second
  VectorField Att;  // d2A/dt2, meaningful only when has_second
  bool has_second = false;
};

struct PotentialSample {
  ScalarField U;
  VectorField A;
};

// 3 samples give first derivatives at the middle slice; 5 give first and
// second. Spacing dt must be positive.
PotentialField potential_from_series(const std::vector<PotentialSample>& slices,
                                     double dt, double c);

// Band-limited trigonometric potential with per-mode temporal oscillation;
// can be sampled at any time, so series of any length are available.
struct TrigPotential {
  struct Mode {
    int component;  // 0 = U, 1..3 = A components
    double amp;
    int mx, my, mz;  // integer wavenumbers per axis
    double phase;
    double omega;  // temporal angular frequency
    double tphase;
  };
  std::vector<Mode> modes;
};

TrigPotential random_trig_potential(std::uint64_t seed, int max_wavenumber,
                                    int modes_per_component, double amp_scale,
                                    double omega_max);

PotentialSample sample_potential(const TrigPotential& spec, const Grid& g, double t);

// Samples the analytic potential at nslices (3 or 5) instants centered on t0
// and builds the discrete-derivative PotentialField.
PotentialField sampled_series(const TrigPotential& spec, const Grid& g, double c,
                              double t0, double dt, int nslices);

// Vacuum plane wave: A = y_hat * amp * sin(k (x - c t)), U = 0, with
// k = 2 pi mode / Lx. Satisfies the evolution equations in the continuum.
TrigPotential plane_wave_potential(const Grid& g, double c, int mode, double amp);

}  // namespace qmx
