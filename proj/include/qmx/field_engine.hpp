#pragma once

// Quaternion derivative of the grid potential, extraction of the field state
// (temporal T, electric E, magnetic B), and the residuals that separate
// physical laws (generically nonzero) from algebraic identities (zero to
// rounding for every potential).

#include "qmx/fields.hpp"
#include "qmx/potential.hpp"
#include "qmx/quaternion.hpp"

namespace qmx {

// The five named parts of the quaternion derivative of a potential.
// curl_part carries its side-dependent sign (+curl A acting right, -curl A
// acting left), so recombination is a plain sum.
struct FivePartDerivative {
  ScalarField time_scalar;  // (1/c) dU/dt
  ScalarField div_part;     // div A
  VectorField time_vector;  // (1/c) dA/dt
  VectorField grad_part;    // grad U
  VectorField curl_part;    // +/- curl A depending on side
  ProductSide side = ProductSide::RightAction;
};

FivePartDerivative quat_derivative(const PotentialField& P, ProductSide side);

// scalar = time_scalar - div_part; vector = time_vector + grad_part + curl_part.
QuatField recombine(const FivePartDerivative& d);

// One instant of the seven-component field system, with optional time
// derivatives carried alongside for residual evaluation.
struct FieldState {
  double t = 0.0;
  double c = 1.0;
  ScalarField T;
  VectorField E;
  VectorField B;
  bool has_rates = false;  // when set, Tt/Et/Bt hold d/dt of the state
  ScalarField Tt;
  VectorField Et;
  VectorField Bt;
};

FieldState zero_state(const Grid& g, double c);

// T = -(1/c) dU/dt + div A;  E = -grad U - (1/c) dA/dt;  B = curl A.
// Computed both through the symmetric/antisymmetric derivative combinators
// and through the component formulas; the paths must agree to 1e-13 relative.
// Rates are filled in when the potential carries second time derivatives.
FieldState fields_from_potential(const PotentialField& P);

// The two extraction paths individually, for equivalence testing.
FieldState fields_direct(const PotentialField& P);
FieldState fields_via_combinators(const PotentialField& P);

// Full quaternion derivative of a quaternion-valued field X with time
// derivative Xt: scalar = (1/c) dX0/dt - div Xv;
// vector = (1/c) dXv/dt + grad X0 +/- curl Xv.
QuatField apply_ddr(const QuatField& X, const QuatField& Xt, double c,
                    ProductSide side);

// Symmetric half: the curl terms cancel between the two sides.
QuatField apply_ddr_sym(const QuatField& X, const QuatField& Xt, double c);

// Antisymmetric half: only the curl survives; the scalar part is identically
// zero (never computed, so it is zero bitwise).
QuatField apply_ddr_antisym(const QuatField& X);

// [d/dr, B] - {d/dr, E}. Scalar part = -((1/c) dT/dt - div E); vector part =
// curl B - (1/c) dE/dt - grad T. Vanishes only when the evolution laws hold:
// generically O(1) on random potentials, O(grid^2) on manufactured solutions.
QuatField law_residual(const FieldState& F);

// [d/dr, E] + {d/dr, B}. Scalar part = -div B; vector part =
// curl E + (1/c) dB/dt. Vanishes to rounding for every potential-derived
// state because the discrete operators commute; a nonzero value flags a
// state that is not potential-derived.
QuatField identity_residual(const FieldState& F);

enum class SourceMode {
  IdentifiedWithT,  // the T terms themselves play the source role
  Explicit,         // independent charge/current arrays
};

struct Sources {
  SourceMode mode = SourceMode::IdentifiedWithT;
  // Explicit mode only. Empty arrays mean zero; the rates add a spatially
  // uniform linear-in-time ramp (for deliberately non-conserving tests).
  ScalarField rho;
  VectorField J;
  double rho_rate = 0.0;
  Vec3 J_rate{};
};

Sources zero_sources();

// Effective charge density / current at time t on grid g (zero in
// IdentifiedWithT mode: the identified terms live inside T already).
ScalarField rho_at(const Sources& S, const Grid& g, double t);
VectorField current_at(const Sources& S, const Grid& g, double t);

// Wave operator through nested one-sided derivatives:
//   d/dr->(d/dr->A) + (A<-d/dr)<-d/dr - 8 pi (rho, J/c).
// Zero at second order when the potential solves the sourced field equations.
// Requires second time derivatives; sources are evaluated at t = 0.
QuatField potential_equation_residual(const PotentialField& P, const Sources& S);
QuatField potential_equation_residual(const PotentialField& P);

// d/dr->(A<-d/dr) - (d/dr->A)<-d/dr. The mixed one-sided derivatives
// commute discretely, so this vanishes to rounding for every potential.
QuatField potential_identity_residual(const PotentialField& P);

// Reads the T terms as sources: rho = (1/(4 pi c)) dT/dt, J = (c/(4 pi)) grad T.
Sources identified_sources(const FieldState& F);

}  // namespace qmx
