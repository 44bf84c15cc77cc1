#pragma once

// Admissible initial-discontinuity curves y = phi(x). Every constructed
// curve satisfies 1 - phi'(x) >= d0 > 0 (checked on a dense grid plus the
// analytic slope extremum where one exists). Mollified polylines carry
// exact straight tails: phi'(x) = k1 for x <= -eps0 and k2 for x >= eps0.

#include <optional>
#include <utility>

#include "rarewave/errors.hpp"

namespace rarewave {

enum class CurveKind { Line, MollifiedPolyline, SmoothPerturbedLine };

struct CurveEval {
  double phi;
  double dphi;
  double ddphi;
};

// Unit mollifier alpha_1: support [-1,1], even, unit mass. The eps0-scaled
// family is alpha_eps(x) = alpha_1(x/eps0)/eps0.
double mollifier(double s);
double mollifier_derivative(double s);
double mollifier_cdf(double s);           // integral of alpha_1 over (-inf, s]
double mollifier_first_moment(double s);  // integral of t alpha_1(t) over (-inf, s]
double mollifier_normalization();         // the constant C in alpha_1 = C exp(-1/(1-s^2))

struct CurvatureSupport {
  bool none = false;     // phi'' identically zero
  bool compact = false;  // phi'' vanishes outside [lo, hi]
  double lo = 0.0, hi = 0.0;
};

class Curve {
 public:
  static Curve line(double k, double c);
  // Convolution alpha_eps0 * L of the two-piece polyline L(x) = k1 x + c1
  // (x <= 0) / k2 x + c2 (x > 0). Throws HyperbolicityViolated when the
  // smoothed slope reaches 1 anywhere (the jump term c2 - c1 can do that).
  static Curve mollified_polyline(double k1, double c1, double k2, double c2, double eps0);
  // k x + c plus a smoothed step of height `amplitude` and width `scale`:
  // phi = k x + c + amplitude/2 (1 + (2/pi) atan(x/scale)).
  static Curve smooth_perturbed_line(double k, double c, double amplitude, double scale);

  CurveEval eval(double x) const;
  double phi(double x) const { return eval(x).phi; }
  double dphi(double x) const { return eval(x).dphi; }
  double ddphi(double x) const { return eval(x).ddphi; }

  CurveKind kind() const { return kind_; }
  double d0() const { return d0_; }
  double slope_min() const { return slope_min_; }
  double slope_max() const { return slope_max_; }
  double slope_left() const { return k1_; }
  double slope_right() const { return kind_ == CurveKind::MollifiedPolyline ? k2_ : k1_; }
  double eps0() const { return eps0_; }
  CurvatureSupport curvature_support() const;

  double param_k1() const { return k1_; }
  double param_c1() const { return c1_; }
  double param_k2() const { return k2_; }
  double param_c2() const { return c2_; }
  double param_amplitude() const { return amp_; }
  double param_scale() const { return scale_; }

 private:
  Curve() = default;
  void finalize();

  CurveKind kind_ = CurveKind::Line;
  double k1_ = 0.0, c1_ = 0.0;
  double k2_ = 0.0, c2_ = 0.0, eps0_ = 0.0;
  double amp_ = 0.0, scale_ = 1.0;
  double d0_ = 0.0, slope_min_ = 0.0, slope_max_ = 0.0;
};

}  // namespace rarewave
