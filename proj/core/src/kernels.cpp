#include "alphadisk/kernels.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>

namespace alphadisk {

namespace {

constexpr double kDiagonalCutoff = 1e-14;  // |z-w| below this counts as the diagonal

void require_off_diagonal(const DiskPoint& z, const DiskPoint& w) {
  if (std::abs(z.value() - w.value()) < kDiagonalCutoff) {
    throw SingularityError("Green kernel evaluated on the diagonal z = w");
  }
}

}  // namespace

void GreenEvalConfig::validate() const {
  if (!(std::isfinite(c_alpha) && c_alpha > 0.0)) {
    throw DomainError("c_alpha must be positive and finite");
  }
}

double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w) {
  return std::abs(z.value() - w.value()) / std::abs(1.0 - std::conj(w.value()) * z.value());
}

DiskPoint mobius(const DiskPoint& w, const DiskPoint& z) {
  return DiskPoint((w.value() - z.value()) / (1.0 - std::conj(w.value()) * z.value()));
}

double h_alpha_log_offset(const AlphaWeight& a) {
  // (1/2) * int_0^1 (t^a - 1)/(1 - t) dt = -(digamma(a+1) + euler)/2
  return -0.5 * (boost::math::digamma(a.alpha() + 1.0) +
                 boost::math::constants::euler<double>());
}

double h_alpha(double r, const AlphaWeight& a) {
  if (!std::isfinite(r) || r <= 0.0 || r > 1.0) {
    throw DomainError("h is defined for r in (0, 1] only");
  }
  const double al = a.alpha();
  const double x = (1.0 - r) * (1.0 + r);  // 1 - r^2 without cancellation
  if (x <= 0.0) return 0.0;

  if (x <= 0.5) {
    // expand 1/(1-t) and integrate term by term:
    //   h = (1/2) sum_{k>=0} x^(a+1+k) / (a+1+k),  ratio of terms < x <= 1/2
    double p = std::pow(x, al + 1.0);
    double s = 0.0;
    for (int k = 0; k < 400; ++k) {
      const double term = p / (al + 1.0 + static_cast<double>(k));
      s += term;
      if (term < 1e-17 * s) break;
      p *= x;
    }
    return 0.5 * s;
  }

  // log split: h(r) = -log r + K(a) - V(r^2) where
  //   V(y) = (1/2) int_0^y ((1-u)^a - 1)/u du = (1/2) sum_{m>=1} c_m y^m / m,
  //   c_1 = -a, c_m = c_{m-1} (m-1-a)/m  (signed binomial coefficients).
  // Here y = r^2 < 1/2, so the series is geometric-or-better.
  const double y = r * r;
  double c = -al;
  double yp = y;
  double v = 0.0;
  for (int m = 1; m < 400; ++m) {
    const double term = c * yp / static_cast<double>(m);
    v += term;
    if (std::abs(term) < 1e-17 * (std::abs(v) + 1e-300)) break;
    c *= (static_cast<double>(m) - al) / (static_cast<double>(m) + 1.0);
    yp *= y;
  }
  return -std::log(r) + h_alpha_log_offset(a) - 0.5 * v;
}

cplx poisson_kernel_alpha(const DiskPoint& z, const AlphaWeight& a) {
  const double num = std::pow(z.one_minus_abs2(), a.alpha() + 1.0);
  const cplx den = (1.0 - z.value()) * powc(1.0 - std::conj(z.value()), a.alpha() + 1.0);
  return num / den;
}

cplx v_kernel(const DiskPoint& w, const BoundaryAngle& theta, const AlphaWeight& a) {
  const cplx z = theta.point();
  const double num = std::pow(w.one_minus_abs2(), a.alpha() + 1.0);
  const cplx den = (1.0 - z * std::conj(w.value())) *
                   powc(1.0 - std::conj(z) * w.value(), a.alpha() + 1.0);
  return num / den;
}

cplx green_alpha(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a) {
  require_off_diagonal(z, w);
  const double q = pseudo_hyperbolic(z, w);
  return powc(1.0 - std::conj(z.value()) * w.value(), a.alpha()) * h_alpha(q, a) / two_pi;
}

double green_dw_bound(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a,
                      const GreenEvalConfig& cfg) {
  cfg.validate();
  if (a.alpha() < 0.0) throw DomainError("the d/dw estimate requires alpha >= 0");
  require_off_diagonal(z, w);
  const double al = a.alpha();
  const double q = pseudo_hyperbolic(z, w);
  const double one_minus_q2 = (1.0 - q) * (1.0 + q);
  const double zw = std::abs(1.0 - std::conj(z.value()) * w.value());
  const double log_part = al * cfg.c_alpha * std::pow(zw, al - 1.0) *
                          std::pow(one_minus_q2, al + 1.0) * (1.0 - 2.0 * std::log(q));
  const double cauchy_part = std::pow(z.one_minus_abs2(), al + 1.0) *
                             std::pow(w.one_minus_abs2(), al) /
                             (2.0 * std::pow(zw, al + 1.0) * std::abs(z.value() - w.value()));
  return (log_part + cauchy_part) / two_pi;
}

double green_dwbar_bound(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a) {
  require_off_diagonal(z, w);
  const double al = a.alpha();
  const double zw = std::abs(1.0 - std::conj(z.value()) * w.value());
  return std::pow(z.one_minus_abs2(), al + 1.0) * std::pow(w.one_minus_abs2(), al) /
         (2.0 * std::pow(zw, al + 1.0) * std::abs(z.value() - w.value())) / two_pi;
}

}  // namespace alphadisk
