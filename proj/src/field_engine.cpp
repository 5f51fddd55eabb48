#include "qmx/field_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmx/field_ops.hpp"

namespace qmx {

namespace {

void validate_potential(const PotentialField& P) {
  if (!(P.c > 0.0)) throw std::invalid_argument("potential: c must be > 0");
  require_same_grid(P.U.grid, P.A.grid);
  if (P.Ut.size() != P.U.size() || P.At.size() != P.A.size())
    throw std::invalid_argument("potential: time derivatives missing");
  if (P.has_second && (P.Utt.size() != P.U.size() || P.Att.size() != P.A.size()))
    throw std::invalid_argument("potential: second time derivatives missing");
}

ScalarField scaled(const ScalarField& f, double s) {
  ScalarField out(f.grid);
  for (std::size_t c = 0; c < out.size(); ++c) out.v[c] = s * f.v[c];
  return out;
}

VectorField scaled(const VectorField& f, double s) {
  VectorField out(f.grid);
  for (std::size_t c = 0; c < out.size(); ++c) {
    out.x[c] = s * f.x[c];
    out.y[c] = s * f.y[c];
    out.z[c] = s * f.z[c];
  }
  return out;
}

}  // namespace

FivePartDerivative quat_derivative(const PotentialField& P, ProductSide side) {
  validate_potential(P);
  const double inv_c = 1.0 / P.c;
  FivePartDerivative d;
  d.side = side;
  d.time_scalar = scaled(P.Ut, inv_c);
  d.div_part = div(P.A);
  d.time_vector = scaled(P.At, inv_c);
  d.grad_part = grad(P.U);
  d.curl_part = curl(P.A);
  if (side == ProductSide::LeftAction) d.curl_part = scaled(d.curl_part, -1.0);
  return d;
}

QuatField recombine(const FivePartDerivative& d) {
  QuatField out(d.time_scalar.grid);
  out.s = d.time_scalar - d.div_part;
  out.v = d.time_vector + d.grad_part + d.curl_part;
  return out;
}

FieldState zero_state(const Grid& g, double c) {
  FieldState F;
  F.c = c;
  F.T = ScalarField(g);
  F.E = VectorField(g);
  F.B = VectorField(g);
  F.has_rates = true;
  F.Tt = ScalarField(g);
  F.Et = VectorField(g);
  F.Bt = VectorField(g);
  return F;
}

QuatField apply_ddr(const QuatField& X, const QuatField& Xt, double c,
                    ProductSide side) {
  require_same_grid(X.s.grid, Xt.s.grid);
  const double inv_c = 1.0 / c;
  QuatField out(X.s.grid);
  out.s = scaled(Xt.s, inv_c) - div(X.v);
  const VectorField sym_vec = scaled(Xt.v, inv_c) + grad(X.s);
  const VectorField c_part = curl(X.v);
  out.v = side == ProductSide::RightAction ? sym_vec + c_part
                                           : sym_vec + scaled(c_part, -1.0);
  return out;
}

QuatField apply_ddr_sym(const QuatField& X, const QuatField& Xt, double c) {
  require_same_grid(X.s.grid, Xt.s.grid);
  const double inv_c = 1.0 / c;
  QuatField out(X.s.grid);
  out.s = scaled(Xt.s, inv_c) - div(X.v);
  out.v = scaled(Xt.v, inv_c) + grad(X.s);
  return out;
}

QuatField apply_ddr_antisym(const QuatField& X) {
  QuatField out(X.s.grid);
  out.v = curl(X.v);
  return out;
}

namespace {

QuatField potential_quat(const ScalarField& s, const VectorField& v) {
  QuatField q(s.grid);
  q.s = s;
  q.v = v;
  return q;
}

}  // namespace

FieldState fields_via_combinators(const PotentialField& P) {
  validate_potential(P);
  const QuatField X = potential_quat(P.U, P.A);
  const QuatField Xt = potential_quat(P.Ut, P.At);

  FieldState F;
  F.c = P.c;
  const QuatField e_quat = apply_ddr_sym(X, Xt, P.c);
  const QuatField b_quat = apply_ddr_antisym(X);
  F.T = scaled(e_quat.s, -1.0);
  F.E = scaled(e_quat.v, -1.0);
  F.B = b_quat.v;

  if (P.has_second) {
    const QuatField Xtt = potential_quat(P.Utt, P.Att);
    const QuatField et_quat = apply_ddr_sym(Xt, Xtt, P.c);
    const QuatField bt_quat = apply_ddr_antisym(Xt);
    F.Tt = scaled(et_quat.s, -1.0);
    F.Et = scaled(et_quat.v, -1.0);
    F.Bt = bt_quat.v;
    F.has_rates = true;
  }
  return F;
}

FieldState fields_direct(const PotentialField& P) {
  validate_potential(P);
  const Grid& g = P.U.grid;
  const double inv_c = 1.0 / P.c;

  auto extract = [&](const ScalarField& U, const VectorField& A,
                     const ScalarField& Ut, const VectorField& At, ScalarField& T,
                     VectorField& E, VectorField& B) {
    const ScalarField dA = div(A);
    const VectorField gU = grad(U);
    T = ScalarField(g);
    E = VectorField(g);
    for (std::size_t c = 0; c < g.cells(); ++c) {
      T.v[c] = -(inv_c * Ut.v[c]) + dA.v[c];
      E.x[c] = -gU.x[c] - inv_c * At.x[c];
      E.y[c] = -gU.y[c] - inv_c * At.y[c];
      E.z[c] = -gU.z[c] - inv_c * At.z[c];
    }
    B = curl(A);
  };

  FieldState F;
  F.c = P.c;
  extract(P.U, P.A, P.Ut, P.At, F.T, F.E, F.B);
  if (P.has_second) {
    extract(P.Ut, P.At, P.Utt, P.Att, F.Tt, F.Et, F.Bt);
    F.has_rates = true;
  }
  return F;
}

namespace {

double rel_linf_gap(const FieldState& a, const FieldState& b) {
  double gap = linf_norm(a.T - b.T);
  gap = std::max(gap, linf_norm(a.E - b.E));
  gap = std::max(gap, linf_norm(a.B - b.B));
  double scale = std::max({linf_norm(a.T), linf_norm(a.E), linf_norm(a.B), 1.0});
  return gap / scale;
}

}  // namespace

FieldState fields_from_potential(const PotentialField& P) {
  FieldState combinator = fields_via_combinators(P);
  const FieldState direct = fields_direct(P);
  if (rel_linf_gap(combinator, direct) > 1e-13)
    throw std::logic_error("field extraction paths disagree beyond 1e-13");
  return combinator;
}

QuatField law_residual(const FieldState& F) {
  if (!F.has_rates)
    throw std::invalid_argument("law_residual: state carries no time derivatives");
  const QuatField e_quat = potential_quat(F.T, F.E);
  const QuatField et_quat = potential_quat(F.Tt, F.Et);
  QuatField b_quat(F.T.grid);
  b_quat.v = F.B;
  return apply_ddr_antisym(b_quat) - apply_ddr_sym(e_quat, et_quat, F.c);
}

QuatField identity_residual(const FieldState& F) {
  if (!F.has_rates)
    throw std::invalid_argument("identity_residual: state carries no time derivatives");
  const QuatField e_quat = potential_quat(F.T, F.E);
  QuatField b_quat(F.T.grid);
  b_quat.v = F.B;
  QuatField bt_quat(F.T.grid);
  bt_quat.v = F.Bt;
  return apply_ddr_antisym(e_quat) + apply_ddr_sym(b_quat, bt_quat, F.c);
}

Sources zero_sources() { return Sources{SourceMode::Explicit, {}, {}, 0.0, {}}; }

ScalarField rho_at(const Sources& S, const Grid& g, double t) {
  ScalarField out(g);
  if (S.mode == SourceMode::IdentifiedWithT) return out;
  if (S.rho.size() != 0) {
    require_same_grid(S.rho.grid, g);
    out = S.rho;
  }
  if (S.rho_rate != 0.0)
    for (auto& v : out.v) v += S.rho_rate * t;
  return out;
}

VectorField current_at(const Sources& S, const Grid& g, double t) {
  VectorField out(g);
  if (S.mode == SourceMode::IdentifiedWithT) return out;
  if (S.J.size() != 0) {
    require_same_grid(S.J.grid, g);
    out = S.J;
  }
  if (S.J_rate != Vec3{})
    for (std::size_t c = 0; c < out.size(); ++c) {
      out.x[c] += S.J_rate.x * t;
      out.y[c] += S.J_rate.y * t;
      out.z[c] += S.J_rate.z * t;
    }
  return out;
}

QuatField potential_equation_residual(const PotentialField& P, const Sources& S) {
  validate_potential(P);
  if (!P.has_second)
    throw std::invalid_argument(
        "potential_equation_residual: second time derivatives required");
  const Grid& g = P.U.grid;
  const QuatField X = potential_quat(P.U, P.A);
  const QuatField Xt = potential_quat(P.Ut, P.At);
  const QuatField Xtt = potential_quat(P.Utt, P.Att);

  const QuatField R = apply_ddr(X, Xt, P.c, ProductSide::RightAction);
  const QuatField Rt = apply_ddr(Xt, Xtt, P.c, ProductSide::RightAction);
  const QuatField L = apply_ddr(X, Xt, P.c, ProductSide::LeftAction);
  const QuatField Lt = apply_ddr(Xt, Xtt, P.c, ProductSide::LeftAction);

  QuatField res = apply_ddr(R, Rt, P.c, ProductSide::RightAction) +
                  apply_ddr(L, Lt, P.c, ProductSide::LeftAction);

  const double eight_pi = 8.0 * std::numbers::pi;
  const ScalarField rho = rho_at(S, g, 0.0);
  const VectorField J = current_at(S, g, 0.0);
  const double inv_c = 1.0 / P.c;
  for (std::size_t c = 0; c < g.cells(); ++c) {
    res.s.v[c] -= eight_pi * rho.v[c];
    res.v.x[c] -= eight_pi * (J.x[c] * inv_c);
    res.v.y[c] -= eight_pi * (J.y[c] * inv_c);
    res.v.z[c] -= eight_pi * (J.z[c] * inv_c);
  }
  return res;
}

QuatField potential_equation_residual(const PotentialField& P) {
  return potential_equation_residual(P, zero_sources());
}

QuatField potential_identity_residual(const PotentialField& P) {
  validate_potential(P);
  if (!P.has_second)
    throw std::invalid_argument(
        "potential_identity_residual: second time derivatives required");
  const QuatField X = potential_quat(P.U, P.A);
  const QuatField Xt = potential_quat(P.Ut, P.At);
  const QuatField Xtt = potential_quat(P.Utt, P.Att);

  const QuatField R = apply_ddr(X, Xt, P.c, ProductSide::RightAction);
  const QuatField Rt = apply_ddr(Xt, Xtt, P.c, ProductSide::RightAction);
  const QuatField L = apply_ddr(X, Xt, P.c, ProductSide::LeftAction);
  const QuatField Lt = apply_ddr(Xt, Xtt, P.c, ProductSide::LeftAction);

  return apply_ddr(L, Lt, P.c, ProductSide::RightAction) -
         apply_ddr(R, Rt, P.c, ProductSide::LeftAction);
}

Sources identified_sources(const FieldState& F) {
  if (!F.has_rates)
    throw std::invalid_argument("identified_sources: dT/dt unavailable");
  const double four_pi = 4.0 * std::numbers::pi;
  Sources S;
  S.mode = SourceMode::Explicit;
  S.rho = scaled(F.Tt, 1.0 / (four_pi * F.c));
  S.J = scaled(grad(F.T), F.c / four_pi);
  return S;
}

}  // namespace qmx
