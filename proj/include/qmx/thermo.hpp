#pragma once

// Heat/work ledger of the temporal field: probe work, the four-term heat
// balance, Thomson specific heat with current reversal, the E_T / D / H
// field splits, and the Seebeck-jump and heated-ball scenarios.

#include <vector>

#include "qmx/field_engine.hpp"
#include "qmx/quaternion.hpp"

namespace qmx {

// Uniform material constants at an evaluation point. sigma is the electrical
// conductivity; dTdK couples the temporal field to temperature, dT = dTdK dK.
struct MaterialPoint {
  double sigma = 1.0;
  double dTdK = 0.0;
};

struct ProbeCharge {
  double q = 0.0;
  Vec3 x{};
  Vec3 v{};
};

// The four rates that sum to zero when curl B = (1/c) dE/dt + grad T
// + (4 pi / c) J holds at the point.
struct HeatBalanceTerms {
  double joule = 0.0;              // |J|^2 / sigma
  double thomson = 0.0;            // (c / 4 pi sigma) dTdK (J . grad K)
  double curl_term = 0.0;          // -(c / 4 pi sigma) (J . curl B)
  double displacement_term = 0.0;  // (1 / 4 pi sigma) (J . dE/dt)

  double total() const { return joule + thomson + curl_term + displacement_term; }
};

struct ThomsonResult {
  double dQ_dt = 0.0;  // |J|^2 / sigma - h_T (J . grad K)
  double h_T = 0.0;    // -(c / 4 pi sigma) dTdK
};

// W = -q c * trapezoid(T) over the uniformly sampled path. Positive charge
// in positive T loses energy (the probe reads "cold").
double temporal_work(const ProbeCharge& probe, const std::vector<double>& T_along_path,
                     double dt, double c);

HeatBalanceTerms heat_balance(const Vec3& J, const MaterialPoint& m, const Vec3& gradK,
                              const Vec3& curlB, const Vec3& dEdt, double c);

ThomsonResult thomson_heat(const Vec3& J, const Vec3& gradK, const MaterialPoint& m,
                           double c);

// Manufactures curl B = dTdK grad K + (4 pi / c) J with dE/dt = 0, measures
// the net heat -(curl_term + displacement_term) for +J and -J, and isolates
// h_T from the difference (the Joule half cancels exactly). Throws when
// J . grad K = 0 (nothing to isolate).
double thomson_reversal_experiment(const Vec3& J, const Vec3& gradK,
                                   const MaterialPoint& m, double c);

struct ETSplit {
  VectorField E_T;     // curl-free representative: grad of the Poisson solve
  double source_mean;  // mean of (1/c) dT/dt (nonzero means the torus drops it)
  double dropped_rms;  // rhs content outside the discrete operator's range
};

// Solves div E_T = (1/c) dT/dt with E_T = grad phi, zero mean. Requires the
// state to carry its rates.
ETSplit split_ET(const FieldState& F);

struct DHSplit {
  VectorField D;              // E - E_T
  VectorField H;              // B - B_T
  VectorField B_T;            // solves curl B_T = divergence-free part of W
  double incompatibility_l2;  // |div W|, W = (1/c) dE_T/dt + grad T
};

// W above is a gradient for every state reachable by this construction, so
// its divergence-free part - and hence B_T - is zero up to rounding; the
// incompatibility norm reports how far W is from a curl's range.
DHSplit build_DH(const FieldState& F, const VectorField& E_T, const ScalarField& Ttt);

struct SeebeckResult {
  std::vector<double> x;    // sample positions
  std::vector<double> T;    // smoothed-step temporal field profile
  std::vector<double> E_T;  // comoving-model field (v/c)(T(x) - T(x0))
  double kick = 0.0;        // asymptotic E_T; force on the probe is q * kick
};

// 1-D comoving model of a probe crossing a temporal-field step of height
// delta_T smoothed over width w: (1/c) dT/dt along the trajectory equals
// (v/c) dT/dx, integrating to E_T = (v/c)(T(x) - T(-inf)).
SeebeckResult seebeck_jump(int n, double dx, double T_base, double delta_T, double width,
                           double v, double c);

// Spherically symmetric solution of div E_T = (1/c) dTdK Kdot inside radius
// R (zero outside): E_T(r) = (r / 3c) dTdK Kdot inside, (R^3 / 3 c r^2) ...
// outside, radially directed.
double heated_ball_field(double r, double R, double dTdK, double Kdot, double c);

}  // namespace qmx
