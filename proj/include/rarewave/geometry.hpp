#pragma once

// The two implicit-function problems attached to a curve:
//   Z(x, y):  y - Z - phi(x - Z) = 0   (residual slope <= -d0, unique root)
//   G(xi):   -xi + G - phi(G)    = 0   (residual slope >= d0, unique root)
// plus the derivative identities of Z.

#include "rarewave/curve.hpp"

namespace rarewave {

struct ImplicitResult {
  double value;
  double residual;
  int iterations;
};

ImplicitResult solve_Z(const Curve& curve, double x, double y, double tol = 1e-12);
// Same, but starting from a caller-supplied guess (warm starts in grid sweeps).
ImplicitResult solve_Z_from(const Curve& curve, double x, double y, double tol, double guess);

struct ZDerivs {
  double z;
  double zx, zy;
  double zxx, zxy, zyy;
};

// Analytic first and second derivatives of Z at (x, y):
//   Z_x = -phi'/(1-phi'), Z_y = 1/(1-phi') at x - Z,
//   Z_xx = Z_yy = -Z_xy = -phi''/(1-phi')^3.
ZDerivs dZ(const Curve& curve, double x, double y, double tol = 1e-12);

ImplicitResult solve_G(const Curve& curve, double xi, double tol = 1e-12);
ImplicitResult solve_G_from(const Curve& curve, double xi, double tol, double guess);

inline double G_prime_at(const Curve& curve, double g) { return 1.0 / (1.0 - curve.dphi(g)); }

}  // namespace rarewave
