#include "rarewave/numerics.hpp"

#include <algorithm>
#include <thread>

namespace rarewave {

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int max_depth) {
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = simpson(a, fa, fm, b, fb);
  return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

namespace {

// Legendre nodes by Newton iteration on P_n, weights 2/((1-x^2) P_n'(x)^2).
std::pair<std::array<double, 16>, std::array<double, 16>> make_gl16() {
  constexpr int n = 16;
  std::array<double, 16> x{}, w{};
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

const auto& gl16_data() {
  static const auto data = make_gl16();
  return data;
}

}  // namespace

const std::array<double, 16>& gl16_nodes() { return gl16_data().first; }
const std::array<double, 16>& gl16_weights() { return gl16_data().second; }

HermiteTable::HermiteTable(double x0, double dx, std::vector<double> values,
                           std::vector<double> slopes, bool enforce_monotone)
    : x0_(x0), dx_(dx), y_(std::move(values)), m_(std::move(slopes)) {
  if (enforce_monotone) {
    // Fritsch-Carlson: clamp slopes so each cubic piece stays monotone.
    for (std::size_t i = 0; i + 1 < y_.size(); ++i) {
      const double delta = (y_[i + 1] - y_[i]) / dx_;
      if (delta == 0.0) {
        m_[i] = m_[i + 1] = 0.0;
        continue;
      }
      const double a = m_[i] / delta, b = m_[i + 1] / delta;
      if (a < 0.0) m_[i] = 0.0;
      if (b < 0.0) m_[i + 1] = 0.0;
      const double s = a * a + b * b;
      if (s > 9.0) {
        const double tau = 3.0 / std::sqrt(s);
        m_[i] = tau * a * delta;
        m_[i + 1] = tau * b * delta;
      }
    }
  }
}

double HermiteTable::operator()(double x) const {
  const std::size_t n = y_.size();
  const double s = (x - x0_) / dx_;
  if (s <= 0.0) return y_.front();
  if (s >= static_cast<double>(n - 1)) return y_.back();
  std::size_t i = static_cast<std::size_t>(s);
  if (i > n - 2) i = n - 2;
  const double t = s - static_cast<double>(i);
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * y_[i] + h10 * dx_ * m_[i] + h01 * y_[i + 1] + h11 * dx_ * m_[i + 1];
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (n <= 0) return;
  const std::int64_t nw = std::clamp<std::int64_t>(workers, 1, n);
  if (nw == 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  const std::int64_t chunk = (n + nw - 1) / nw;
  for (std::int64_t w = 0; w < nw; ++w) {
    const std::int64_t b = w * chunk;
    const std::int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rarewave
