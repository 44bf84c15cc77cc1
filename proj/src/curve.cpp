#include "rarewave/curve.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "rarewave/numerics.hpp"

namespace rarewave {

namespace {

double bump_raw(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

// Cumulative tables for the unit mollifier: cdf(s) = int alpha_1 over
// (-inf, s], mom(s) = int t alpha_1(t) dt over (-inf, s]. Built on the left
// half by 16-point Gauss-Legendre panels and mirrored (alpha_1 is even), so
// cdf(1) = 1 and mom(1) = 0 hold exactly and the straight polyline tails are
// reproduced bit for bit. Node slopes are the analytic integrands, which
// keeps the Hermite interpolation error around 1e-15 at this resolution.
struct MollifierTables {
  double norm = 0.0;  // C = 1 / int exp(-1/(1-s^2))
  HermiteTable cdf;
  HermiteTable mom;

  MollifierTables() {
    constexpr int half = 8192;  // intervals on [-1, 0]
    const int n = 2 * half;
    const double dx = 1.0 / half;
    std::vector<double> raw_cdf(n + 1, 0.0), raw_mom(n + 1, 0.0);
    const auto& gx = gl16_nodes();
    const auto& gw = gl16_weights();
    for (int i = 0; i < half; ++i) {
      const double a = -1.0 + i * dx, b = a + dx;
      double s0 = 0.0, s1 = 0.0;
      for (int q = 0; q < 16; ++q) {
        const double t = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
        const double f = bump_raw(t);
        s0 += gw[q] * f;
        s1 += gw[q] * t * f;
      }
      raw_cdf[i + 1] = raw_cdf[i] + 0.5 * (b - a) * s0;
      raw_mom[i + 1] = raw_mom[i] + 0.5 * (b - a) * s1;
    }
    const double total = 2.0 * raw_cdf[half];
    norm = 1.0 / total;
    std::vector<double> cdf_v(n + 1), mom_v(n + 1), cdf_m(n + 1), mom_m(n + 1);
    for (int i = 0; i <= half; ++i) {
      cdf_v[i] = raw_cdf[i] * norm;
      mom_v[i] = raw_mom[i] * norm;
    }
    for (int i = 1; i <= half; ++i) {  // mirror: cdf(s) = 1 - cdf(-s), mom even
      cdf_v[half + i] = 1.0 - cdf_v[half - i];
      mom_v[half + i] = mom_v[half - i];
    }
    for (int i = 0; i <= n; ++i) {
      const double s = -1.0 + i * dx;
      const double a = norm * bump_raw(s);
      cdf_m[i] = a;
      mom_m[i] = s * a;
    }
    cdf = HermiteTable(-1.0, dx, std::move(cdf_v), std::move(cdf_m), true);
    mom = HermiteTable(-1.0, dx, std::move(mom_v), std::move(mom_m), false);
  }
};

const MollifierTables& tables() {
  static const MollifierTables t;
  return t;
}

}  // namespace

double mollifier_normalization() { return tables().norm; }

double mollifier(double s) { return tables().norm * bump_raw(s); }

double mollifier_derivative(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double d = 1.0 - s * s;
  return mollifier(s) * (-2.0 * s) / (d * d);
}

double mollifier_cdf(double s) {
  if (s <= -1.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return tables().cdf(s);
}

double mollifier_first_moment(double s) {
  if (s <= -1.0 || s >= 1.0) return 0.0;
  return tables().mom(s);
}

Curve Curve::line(double k, double c) {
  Curve cv;
  cv.kind_ = CurveKind::Line;
  cv.k1_ = k;
  cv.c1_ = c;
  cv.finalize();
  return cv;
}

Curve Curve::mollified_polyline(double k1, double c1, double k2, double c2, double eps0) {
  if (!(eps0 > 0.0)) throw ConfigError("mollified_polyline requires eps0 > 0");
  if (!(std::max(k1, k2) < 1.0))
    throw HyperbolicityViolated("polyline tail slope max(k1, k2) = " +
                                std::to_string(std::max(k1, k2)) + " >= 1");
  Curve cv;
  cv.kind_ = CurveKind::MollifiedPolyline;
  cv.k1_ = k1;
  cv.c1_ = c1;
  cv.k2_ = k2;
  cv.c2_ = c2;
  cv.eps0_ = eps0;
  cv.finalize();
  return cv;
}

Curve Curve::smooth_perturbed_line(double k, double c, double amplitude, double scale) {
  if (!(scale > 0.0)) throw ConfigError("smooth_perturbed_line requires scale > 0");
  Curve cv;
  cv.kind_ = CurveKind::SmoothPerturbedLine;
  cv.k1_ = k;
  cv.c1_ = c;
  cv.amp_ = amplitude;
  cv.scale_ = scale;
  cv.finalize();
  return cv;
}

CurveEval Curve::eval(double x) const {
  switch (kind_) {
    case CurveKind::Line:
      return {k1_ * x + c1_, k1_, 0.0};
    case CurveKind::MollifiedPolyline: {
      if (x <= -eps0_) return {k1_ * x + c1_, k1_, 0.0};
      if (x >= eps0_) return {k2_ * x + c2_, k2_, 0.0};
      // alpha * L with L = affine + (k2-k1) x_+ + (c2-c1) H:
      //   phi   = k1 x + c1 + dk (x A(x) - eps Q(x/eps)) + dc A(x)
      //   phi'  = k1 + dk A(x) + dc alpha_eps(x)
      //   phi'' = dk alpha_eps(x) + dc alpha_eps'(x)
      const double u = x / eps0_;
      const double A = mollifier_cdf(u);
      const double al = mollifier(u) / eps0_;
      const double alp = mollifier_derivative(u) / (eps0_ * eps0_);
      const double dk = k2_ - k1_, dc = c2_ - c1_;
      const double P = x * A - eps0_ * mollifier_first_moment(u);
      return {k1_ * x + c1_ + dk * P + dc * A, k1_ + dk * A + dc * al, dk * al + dc * alp};
    }
    case CurveKind::SmoothPerturbedLine: {
      const double s = scale_, r = s * s + x * x;
      const double phi = k1_ * x + c1_ + 0.5 * amp_ * (1.0 + M_2_PI * std::atan(x / s));
      const double dphi = k1_ + (amp_ / M_PI) * s / r;
      const double ddphi = -(amp_ / M_PI) * 2.0 * x * s / (r * r);
      return {phi, dphi, ddphi};
    }
  }
  return {0.0, 0.0, 0.0};
}

void Curve::finalize() {
  constexpr int kGridPoints = 100000;
  double smin, smax;
  switch (kind_) {
    case CurveKind::Line:
      smin = smax = k1_;
      break;
    case CurveKind::MollifiedPolyline: {
      smin = std::min(k1_, k2_);
      smax = std::max(k1_, k2_);
      const double h = 2.0 * eps0_ / (kGridPoints - 1);
      for (int i = 0; i < kGridPoints; ++i) {
        const double d = eval(-eps0_ + i * h).dphi;
        smin = std::min(smin, d);
        smax = std::max(smax, d);
      }
      break;
    }
    case CurveKind::SmoothPerturbedLine: {
      // analytic extremum of phi' sits at x = 0
      const double peak = k1_ + amp_ / (M_PI * scale_);
      smin = std::min(k1_, peak);
      smax = std::max(k1_, peak);
      const double span = 20.0 * scale_;
      const double h = 2.0 * span / (kGridPoints - 1);
      for (int i = 0; i < kGridPoints; ++i) {
        const double d = eval(-span + i * h).dphi;
        smin = std::min(smin, d);
        smax = std::max(smax, d);
      }
      break;
    }
  }
  slope_min_ = smin;
  slope_max_ = smax;
  d0_ = 1.0 - smax;
  if (!(d0_ > 0.0))
    throw HyperbolicityViolated("1 - phi' reaches " + std::to_string(d0_) +
                                " (slope max " + std::to_string(smax) + ")");
}

CurvatureSupport Curve::curvature_support() const {
  CurvatureSupport s;
  switch (kind_) {
    case CurveKind::Line:
      s.none = true;
      break;
    case CurveKind::MollifiedPolyline:
      if (k1_ == k2_ && c1_ == c2_) {
        s.none = true;
      } else {
        s.compact = true;
        s.lo = -eps0_;
        s.hi = eps0_;
      }
      break;
    case CurveKind::SmoothPerturbedLine:
      if (amp_ == 0.0) s.none = true;
      break;
  }
  return s;
}

}  // namespace rarewave
