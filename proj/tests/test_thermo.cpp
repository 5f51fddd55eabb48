#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qmx/field_ops.hpp"
#include "qmx/thermo.hpp"

using namespace qmx;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Grid line(int n) { return make_grid(n, 1, 1, kTau / n, 1.0, 1.0); }

}  // namespace

TEST_CASE("temporal work integrates the probe history") {
  ProbeCharge probe;
  probe.q = 2.0;
  // Trapezoid over {1, 1, 1} with dt = 0.25 is 0.5, times -q c.
  CHECK(temporal_work(probe, {1.0, 1.0, 1.0}, 0.25, 3.0) == -3.0);

  probe.q = 1.0;
  const std::vector<double> flat(9, 1.0);
  CHECK(temporal_work(probe, flat, 0.25, 1.0) == -2.0);

  ProbeCharge negated = probe;
  negated.q = -probe.q;
  CHECK(temporal_work(negated, flat, 0.25, 1.0) ==
        -temporal_work(probe, flat, 0.25, 1.0));

  CHECK(temporal_work(probe, {5.0}, 0.25, 1.0) == 0.0);
  CHECK_THROWS_AS(temporal_work(probe, {}, 0.25, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(temporal_work(probe, flat, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("heat balance closes on the manufactured configuration") {
  const Vec3 J{3.0, 0.0, 0.0};
  const Vec3 gradK{0.2, 0.0, 0.0};
  const MaterialPoint m{2.0, 0.5};
  const double c = 1.0;

  // curl B manufactured so the balance holds with dE/dt = 0.
  const Vec3 curlB{m.dTdK * gradK.x + 4.0 * std::numbers::pi * J.x / c, 0.0, 0.0};
  const HeatBalanceTerms t = heat_balance(J, m, gradK, curlB, Vec3{}, c);

  const double eight_pi = 8.0 * std::numbers::pi;
  CHECK(t.joule == 4.5);
  CHECK(t.thomson == doctest::Approx(0.3 / eight_pi).epsilon(1e-15));
  CHECK(t.curl_term == doctest::Approx(-(4.5 + 0.3 / eight_pi)).epsilon(1e-15));
  CHECK(t.displacement_term == 0.0);
  CHECK(std::fabs(t.total()) <= 1e-12 * t.joule);

  // Reversing the current with the same field flips every current-linear term.
  const HeatBalanceTerms r = heat_balance(-J, m, gradK, curlB, Vec3{}, c);
  CHECK(r.joule == t.joule);
  CHECK(r.thomson == -t.thomson);
  CHECK(r.curl_term == -t.curl_term);
  CHECK(r.displacement_term == 0.0);

  CHECK_THROWS_AS(heat_balance(J, MaterialPoint{0.0, 0.5}, gradK, curlB, Vec3{}, c),
                  std::invalid_argument);
}

TEST_CASE("thomson heat worked numbers") {
  const MaterialPoint m{2.0, 0.5};
  const ThomsonResult r = thomson_heat({3.0, 0.0, 0.0}, {0.2, 0.0, 0.0}, m, 1.0);
  CHECK(r.dQ_dt == doctest::Approx(4.5119366207318921).epsilon(1e-15));
  CHECK(r.h_T == doctest::Approx(-0.019894367886486918).epsilon(1e-15));
  CHECK_THROWS_AS(thomson_heat({1.0, 0.0, 0.0}, {}, MaterialPoint{-1.0, 0.0}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("reversal experiment isolates the specific heat") {
  const Vec3 J{3.0, 0.0, 0.0};
  const Vec3 gradK{0.2, 0.0, 0.0};
  const MaterialPoint m{2.0, 0.5};

  const double h = thomson_reversal_experiment(J, gradK, m, 1.0);
  const double expected = thomson_heat(J, gradK, m, 1.0).h_T;
  CHECK(std::fabs(h - expected) <= 1e-12 * std::fabs(expected));

  // h_T scales like 1/sigma and vanishes with the coupling.
  const double h_double_sigma = thomson_reversal_experiment(J, gradK, {4.0, 0.5}, 1.0);
  CHECK(h_double_sigma == doctest::Approx(0.5 * h).epsilon(1e-12));
  CHECK(thomson_reversal_experiment(J, gradK, {2.0, 0.0}, 1.0) == 0.0);

  // Works for oblique geometry too.
  const double h_oblique =
      thomson_reversal_experiment({1.0, 2.0, -0.5}, {0.3, 0.1, 0.2}, m, 1.7);
  const double expected_oblique = thomson_heat({1.0, 2.0, -0.5}, {0.3, 0.1, 0.2}, m, 1.7).h_T;
  CHECK(std::fabs(h_oblique - expected_oblique) <= 1e-12 * std::fabs(expected_oblique));

  CHECK_THROWS_AS(thomson_reversal_experiment(J, {0.0, 1.0, 0.0}, m, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(thomson_reversal_experiment(J, gradK, {0.0, 0.5}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("split_ET solves for the curl-free driving piece") {
  const Grid g = line(64);
  const double c = 1.3, a = 0.8;
  const int m = 3;
  const double keff = std::sin(m * g.dx) / g.dx;

  FieldState F = zero_state(g, c);
  for (int i = 0; i < g.nx; ++i) F.Tt.v[i] = c * a * std::sin(m * (i * g.dx));

  const ETSplit split = split_ET(F);
  CHECK(std::fabs(split.source_mean) <= 1e-14);
  CHECK(split.dropped_rms <= 1e-14);

  // div E_T reproduces (1/c) dT/dt to solver tolerance.
  ScalarField rhs(g);
  for (int i = 0; i < g.nx; ++i) rhs.v[i] = a * std::sin(m * (i * g.dx));
  CHECK(l2_norm(div(split.E_T) - rhs) <= 1e-10);
  CHECK(l2_norm(curl(split.E_T)) == 0.0);  // 1-D: no transverse structure at all

  // Single mode: E_T = -(a / k_eff) cos(m x), the discrete wavenumber.
  double gap = 0.0;
  for (int i = 0; i < g.nx; ++i)
    gap = std::max(gap,
                   std::fabs(split.E_T.x[i] + a / keff * std::cos(m * (i * g.dx))));
  CHECK(gap <= 1e-12);

  // The k vs k_eff distinction is visible: amplitude exceeds the continuum
  // a/m by (m dx)^2/6 to leading order.
  const double excess = linf_norm(split.E_T) * m / a - 1.0;
  const double predicted = m * m * g.dx * g.dx / 6.0;
  CHECK(excess >= 0.8 * predicted);
  CHECK(excess <= 1.2 * predicted);

  FieldState no_rates = F;
  no_rates.has_rates = false;
  CHECK_THROWS_AS(split_ET(no_rates), std::invalid_argument);
}

TEST_CASE("build_DH reports gradient-compatible states with zero B_T") {
  const Grid g = line(64);
  FieldState F = zero_state(g, 1.0);
  for (int i = 0; i < g.nx; ++i) F.T.v[i] = 0.3 * std::sin(i * g.dx);

  const DHSplit out = build_DH(F, VectorField(g), ScalarField(g));

  // With E_T = 0 and Ttt = 0, W reduces to grad T, so the incompatibility
  // norm is exactly the norm of the discrete laplacian of T.
  CHECK(out.incompatibility_l2 == l2_norm(laplacian(F.T)));
  const double keff = std::sin(g.dx) / g.dx;
  CHECK(out.incompatibility_l2 ==
        doctest::Approx(0.3 * keff * keff / std::sqrt(2.0)).epsilon(1e-13));

  // W is a pure gradient, so its divergence-free part, and hence B_T, vanish.
  CHECK(l2_norm(out.B_T) <= 1e-12);
  CHECK(l2_norm(out.D) == 0.0);
  CHECK(l2_norm(out.H) <= 1e-12);

  // The report scales linearly with the state.
  FieldState F2 = F;
  for (auto& v : F2.T.v) v *= 2.0;
  const DHSplit out2 = build_DH(F2, VectorField(g), ScalarField(g));
  CHECK(out2.incompatibility_l2 ==
        doctest::Approx(2.0 * out.incompatibility_l2).epsilon(1e-12));

  const Grid other = line(32);
  CHECK_THROWS_AS(build_DH(F, VectorField(other), ScalarField(g)),
                  std::invalid_argument);
}

TEST_CASE("two-source state recovers the charge through the working field") {
  const Grid g = line(64);
  const double c = 1.3;

  ScalarField phi_T(g), phi_rho(g);
  for (int i = 0; i < g.nx; ++i) {
    const double x = i * g.dx;
    phi_T.v[i] = std::sin(2.0 * x);
    phi_rho.v[i] = std::cos(3.0 * x);
  }

  // Build the state so both pieces are discretely exact: the T rate is the
  // discrete laplacian of its own potential, and the charge is read from the
  // discrete laplacian of the other.
  FieldState F = zero_state(g, c);
  const ScalarField lap_T = laplacian(phi_T);
  for (std::size_t i = 0; i < lap_T.size(); ++i) F.Tt.v[i] = c * lap_T.v[i];
  F.E = grad(phi_T) - grad(phi_rho);

  const ScalarField lap_rho = laplacian(phi_rho);
  ScalarField four_pi_rho(g);
  for (std::size_t i = 0; i < lap_rho.size(); ++i) four_pi_rho.v[i] = -lap_rho.v[i];

  const ETSplit split = split_ET(F);
  const ScalarField recovered = div(F.E - split.E_T);
  CHECK(l2_norm(recovered - four_pi_rho) <=
        1e-11 * std::max(1.0, l2_norm(four_pi_rho)));
}

TEST_CASE("seebeck jump produces the comoving kick") {
  const SeebeckResult r = seebeck_jump(256, 0.05, 1.0, 2.0, 0.25, 0.1, 1.0);
  REQUIRE(r.x.size() == 256);
  REQUIRE(r.T.size() == 256);
  REQUIRE(r.E_T.size() == 256);

  CHECK(r.E_T.front() == 0.0);
  CHECK(r.kick == r.E_T.back());
  // The tanh tails decay far below rounding across 6+ widths.
  CHECK(std::fabs(r.kick - 0.1 * 2.0) <= 1e-15);
  for (std::size_t i = 1; i < r.T.size(); ++i) CHECK(r.T[i] >= r.T[i - 1]);
  CHECK(r.T.front() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.T.back() == doctest::Approx(3.0).epsilon(1e-12));

  // Odd in the probe velocity.
  const SeebeckResult rev = seebeck_jump(256, 0.05, 1.0, 2.0, 0.25, -0.1, 1.0);
  for (std::size_t i = 0; i < r.E_T.size(); ++i) CHECK(rev.E_T[i] == -r.E_T[i]);

  CHECK_THROWS_AS(seebeck_jump(7, 0.05, 1.0, 2.0, 0.25, 0.1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(seebeck_jump(256, 0.0, 1.0, 2.0, 0.25, 0.1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(seebeck_jump(256, 0.05, 1.0, 2.0, 0.15, 0.1, 1.0),
                  std::invalid_argument);
  CHECK_NOTHROW(seebeck_jump(256, 0.05, 1.0, 2.0, 0.2, 0.1, 1.0));
  CHECK_THROWS_AS(seebeck_jump(256, 0.05, 1.0, 2.0, 0.25, 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("heated ball field closed form") {
  const double R = 1.0, dTdK = 0.6, Kdot = 2.0, c = 1.0;

  CHECK(heated_ball_field(0.0, R, dTdK, Kdot, c) == 0.0);
  CHECK(heated_ball_field(0.5, R, dTdK, Kdot, c) ==
        doctest::Approx(0.2).epsilon(1e-15));

  // Continuous across the surface and inverse-square outside.
  const double at_R = heated_ball_field(R, R, dTdK, Kdot, c);
  const double just_outside = heated_ball_field(R * (1.0 + 1e-12), R, dTdK, Kdot, c);
  CHECK(std::fabs(at_R - just_outside) <= 1e-11);
  CHECK(4.0 * heated_ball_field(2.0 * R, R, dTdK, Kdot, c) ==
        doctest::Approx(at_R).epsilon(1e-15));
  CHECK(9.0 * heated_ball_field(3.0 * R, R, dTdK, Kdot, c) ==
        doctest::Approx(at_R).epsilon(1e-15));

  CHECK_THROWS_AS(heated_ball_field(1.0, 0.0, dTdK, Kdot, c), std::invalid_argument);
  CHECK_THROWS_AS(heated_ball_field(-1.0, R, dTdK, Kdot, c), std::invalid_argument);
  CHECK_THROWS_AS(heated_ball_field(1.0, R, dTdK, Kdot, 0.0), std::invalid_argument);
}
