#include "rarewave/geometry.hpp"

#include <cmath>

#include "rarewave/numerics.hpp"

namespace rarewave {

ImplicitResult solve_Z_from(const Curve& curve, double x, double y, double tol, double guess) {
  auto fdf = [&](double z) {
    const CurveEval e = curve.eval(x - z);
    return std::pair<double, double>{y - z - e.phi, -(1.0 - e.dphi)};
  };
  const RootResult r = solve_monotone(fdf, guess, tol, curve.d0());
  return {r.value, r.residual, r.iterations};
}

ImplicitResult solve_Z(const Curve& curve, double x, double y, double tol) {
  // sign-correct initial guess: sgn Z = sgn(y - phi(x))
  const double guess = (y - curve.phi(x)) * curve.d0();
  return solve_Z_from(curve, x, y, tol, guess);
}

ZDerivs dZ(const Curve& curve, double x, double y, double tol) {
  const ImplicitResult zr = solve_Z(curve, x, y, tol);
  const CurveEval e = curve.eval(x - zr.value);
  const double den = 1.0 - e.dphi;
  const double den3 = den * den * den;
  ZDerivs d;
  d.z = zr.value;
  d.zx = -e.dphi / den;
  d.zy = 1.0 / den;
  d.zxx = -e.ddphi / den3;
  d.zyy = d.zxx;
  d.zxy = -d.zxx;
  return d;
}

ImplicitResult solve_G_from(const Curve& curve, double xi, double tol, double guess) {
  auto fdf = [&](double g) {
    const CurveEval e = curve.eval(g);
    return std::pair<double, double>{-xi + g - e.phi, 1.0 - e.dphi};
  };
  const RootResult r = solve_monotone(fdf, guess, tol, curve.d0());
  return {r.value, r.residual, r.iterations};
}

ImplicitResult solve_G(const Curve& curve, double xi, double tol) {
  return solve_G_from(curve, xi, tol, xi);
}

}  // namespace rarewave
