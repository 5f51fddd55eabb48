#pragma once

// Second-order centered-difference vector calculus on the periodic grid.
// The laplacian is the composition div(grad(.)) rather than a direct 7-point
// stencil, so discrete operator identities (curl of grad = 0, div of curl = 0,
// curl curl = grad div - laplacian) hold to rounding for any field. Degenerate
// axes (n == 1) wrap onto themselves and contribute exactly zero.

#include <vector>

#include "qmx/fields.hpp"

namespace qmx {

VectorField grad(const ScalarField& s);
ScalarField div(const VectorField& v);
VectorField curl(const VectorField& v);
ScalarField laplacian(const ScalarField& s);

enum class DiffOp { Identity, Grad, Div, Curl, Laplacian };

// Manufactured analytic inputs for the convergence harness; the case arity
// must match the operator (scalar in for Identity/Grad/Laplacian, vector in
// for Div/Curl).
enum class AnalyticCase { TrigScalar, TrigVector };

// Least-squares slope of log(L2 error) vs log(spacing) for the named operator
// applied to the named manufactured field on an n^3 unit cube, measured at
// the given resolutions. Returns +infinity when the error sits at rounding
// level everywhere (the operator is exact on the test field).
double convergence_order(DiffOp op, AnalyticCase c, const std::vector<int>& resolutions);

}  // namespace qmx
