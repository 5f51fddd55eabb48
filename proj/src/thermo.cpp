#include "qmx/thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmx/field_ops.hpp"
#include "qmx/spectral.hpp"

namespace qmx {

namespace {

constexpr double kPi = std::numbers::pi;

void require_conductor(const MaterialPoint& m) {
  if (!(m.sigma > 0.0)) throw std::invalid_argument("material: sigma must be > 0");
}

}  // namespace

double temporal_work(const ProbeCharge& probe, const std::vector<double>& T_along_path,
                     double dt, double c) {
  if (T_along_path.empty()) throw std::invalid_argument("temporal_work: empty series");
  if (!(dt > 0.0)) throw std::invalid_argument("temporal_work: dt must be > 0");
  if (T_along_path.size() == 1) return 0.0;
  double acc = 0.5 * (T_along_path.front() + T_along_path.back());
  for (std::size_t i = 1; i + 1 < T_along_path.size(); ++i) acc += T_along_path[i];
  return -probe.q * c * acc * dt;
}

HeatBalanceTerms heat_balance(const Vec3& J, const MaterialPoint& m, const Vec3& gradK,
                              const Vec3& curlB, const Vec3& dEdt, double c) {
  require_conductor(m);
  const double denom = 4.0 * kPi * m.sigma;
  HeatBalanceTerms t;
  t.joule = dot(J, J) / m.sigma;
  t.thomson = c / denom * m.dTdK * dot(J, gradK);
  t.curl_term = -(c / denom) * dot(J, curlB);
  t.displacement_term = dot(J, dEdt) / denom;
  return t;
}

ThomsonResult thomson_heat(const Vec3& J, const Vec3& gradK, const MaterialPoint& m,
                           double c) {
  require_conductor(m);
  const double denom = 4.0 * kPi * m.sigma;
  ThomsonResult r;
  r.h_T = -(c / denom) * m.dTdK;
  r.dQ_dt = dot(J, J) / m.sigma - r.h_T * dot(J, gradK);
  return r;
}

namespace {

Vec3 manufactured_curlB(const Vec3& J, const Vec3& gradK, const MaterialPoint& m,
                        double c) {
  return {m.dTdK * gradK.x + 4.0 * kPi * J.x / c,
          m.dTdK * gradK.y + 4.0 * kPi * J.y / c,
          m.dTdK * gradK.z + 4.0 * kPi * J.z / c};
}

}  // namespace

double thomson_reversal_experiment(const Vec3& J, const Vec3& gradK,
                                   const MaterialPoint& m, double c) {
  require_conductor(m);
  const double drive = dot(J, gradK);
  if (drive == 0.0)
    throw std::invalid_argument(
        "thomson_reversal_experiment: J . grad K = 0, nothing to isolate");

  // The manufactured field satisfies the balance with dE/dt = 0, so the net
  // heat is read off the measured (curl + displacement) side.
  auto net_heat = [&](const Vec3& current) {
    const Vec3 curlB = manufactured_curlB(current, gradK, m, c);
    const HeatBalanceTerms t = heat_balance(current, m, gradK, curlB, Vec3{}, c);
    return -(t.curl_term + t.displacement_term);
  };

  const double forward = net_heat(J);
  const double reversed = net_heat(-J);
  return -(forward - reversed) / (2.0 * drive);
}

ETSplit split_ET(const FieldState& F) {
  if (!F.has_rates) throw std::invalid_argument("split_ET: dT/dt unavailable");
  const Grid& g = F.T.grid;
  ScalarField rhs(g);
  const double inv_c = 1.0 / F.c;
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs.v[i] = inv_c * F.Tt.v[i];

  ETSplit out;
  out.source_mean = mean(rhs);
  PoissonResult p = poisson_periodic(rhs);
  out.dropped_rms = p.dropped_rms;
  out.E_T = grad(p.phi);
  return out;
}

DHSplit build_DH(const FieldState& F, const VectorField& E_T, const ScalarField& Ttt) {
  const Grid& g = F.T.grid;
  require_same_grid(E_T.grid, g);
  require_same_grid(Ttt.grid, g);
  const double inv_c = 1.0 / F.c;

  // dE_T/dt = grad psi with lap psi = (1/c) d2T/dt2, the time derivative of
  // the split_ET construction.
  ScalarField rhs(g);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs.v[i] = inv_c * Ttt.v[i];
  const VectorField dET_dt = grad(poisson_periodic(rhs).phi);

  const VectorField gradT = grad(F.T);
  VectorField W(g);
  for (std::size_t i = 0; i < W.size(); ++i) {
    W.x[i] = inv_c * dET_dt.x[i] + gradT.x[i];
    W.y[i] = inv_c * dET_dt.y[i] + gradT.y[i];
    W.z[i] = inv_c * dET_dt.z[i] + gradT.z[i];
  }

  DHSplit out;
  out.incompatibility_l2 = l2_norm(div(W));
  out.B_T = solve_curl_system(divergence_free_part(W));
  out.D = F.E - E_T;
  out.H = F.B - out.B_T;
  return out;
}

SeebeckResult seebeck_jump(int n, double dx, double T_base, double delta_T, double width,
                           double v, double c) {
  if (n < 8) throw std::invalid_argument("seebeck_jump: need at least 8 samples");
  if (!(dx > 0.0)) throw std::invalid_argument("seebeck_jump: dx must be > 0");
  if (!(width >= 4.0 * dx))
    throw std::invalid_argument("seebeck_jump: step width under 4 cells is unresolved");
  if (!(std::fabs(v) < c)) throw std::invalid_argument("seebeck_jump: require |v| < c");

  SeebeckResult r;
  r.x.resize(n);
  r.T.resize(n);
  r.E_T.resize(n);
  const double xc = 0.5 * (n - 1) * dx;
  for (int i = 0; i < n; ++i) {
    const double x = i * dx;
    r.x[i] = x;
    r.T[i] = T_base + delta_T * 0.5 * (1.0 + std::tanh((x - xc) / width));
  }
  const double ratio = v / c;
  for (int i = 0; i < n; ++i) r.E_T[i] = ratio * (r.T[i] - r.T[0]);
  r.kick = r.E_T[n - 1];
  return r;
}

double heated_ball_field(double r, double R, double dTdK, double Kdot, double c) {
  if (!(R > 0.0)) throw std::invalid_argument("heated_ball_field: R must be > 0");
  if (!(r >= 0.0)) throw std::invalid_argument("heated_ball_field: r must be >= 0");
  if (!(c > 0.0)) throw std::invalid_argument("heated_ball_field: c must be > 0");
  if (r <= R) return dTdK * Kdot * r / (3.0 * c);
  return dTdK * Kdot * R * R * R / (3.0 * c * r * r);
}

}  // namespace qmx
