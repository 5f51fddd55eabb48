#pragma once

// FFT-backed solves on the periodic grid. The inverse laplacian inverts the
// symbol of the composed centered-difference operator div(grad(.)), i.e.
// -sum_a sin^2(2 pi m_a / n_a) / d_a^2, so real-space div(grad(phi)) returns
// the right-hand side to rounding. Modes where that symbol vanishes (mean and
// Nyquist combinations) are outside the operator's range; they are removed
// and their magnitude reported. All transforms are serial and use
// deterministic plans, so results are bit-stable across runs and worker
// counts.

#include "qmx/fields.hpp"

namespace qmx {

struct PoissonResult {
  ScalarField phi;     // zero-mean solution of div(grad(phi)) = rhs
  double dropped_rms;  // L2 norm of the rhs content in the operator's null space
};

PoissonResult poisson_periodic(const ScalarField& rhs);

// Sharp low-pass: keeps a mode iff, on every axis, its integer frequency
// magnitude is <= cutoff * (n_a / 2). cutoff in (0, 1]; 1 keeps everything.
void spectral_lowpass(ScalarField& f, double cutoff);
void spectral_lowpass(VectorField& f, double cutoff);

// w minus the gradient part: result has zero discrete divergence.
VectorField divergence_free_part(const VectorField& w);

// Solves curl(B) = w for divergence-free w, with div(B) = 0 and zero mean.
// Null-space content of w (unreachable by a curl) is dropped.
VectorField solve_curl_system(const VectorField& w);

}  // namespace qmx
