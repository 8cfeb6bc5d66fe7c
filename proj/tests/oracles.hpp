#pragma once

// Reference values computed independently of the library: textbook closed
// forms, a brute-force DFT, and a tanh-sinh integrator for one-off integrals
// with endpoint singularities.  Nothing here shares code with core/.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline double integral(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, a, b);
}

// (1/2) int_0^{1-r^2} t^a / (1-t) dt, straight from the definition; tanh-sinh
// absorbs the t^a endpoint singularity for a < 0
inline double h_profile(double r, double alpha) {
  const double x = (1.0 - r) * (1.0 + r);
  if (x <= 0.0) return 0.0;
  return 0.5 * integral([alpha](double t) { return std::pow(t, alpha) / (1.0 - t); }, 0.0, x);
}

// the same profile in closed form at integer alpha
inline double h_profile_a0(double r) { return -std::log(r); }
inline double h_profile_a1(double r) { return 0.5 * (r * r - 1.0) - std::log(r); }
inline double h_profile_a2(double r) {
  const double x = (1.0 - r) * (1.0 + r);
  return -std::log(r) - 0.5 * x - 0.25 * x * x;
}

// area integral of 1/|z - r| over the unit disk: 4 E(r), E = complete
// elliptic integral of the second kind
inline double m1_closed(double r) { return 4.0 * std::comp_ellint_2(r); }

// O(n^2) DFT with the library's normalization c_k = (1/n) sum_j s_j e^{-ik theta_j},
// bins in FFT layout (index k holds frequency k, or k - n for k >= n/2)
inline std::vector<cplx> brute_dft(const std::vector<cplx>& s) {
  const std::size_t n = s.size();
  std::vector<cplx> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * pi * static_cast<double>(k) * static_cast<double>(j) /
                           static_cast<double>(n);
      acc += s[j] * cplx(std::cos(angle), std::sin(angle));
    }
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

// deterministic area-uniform disk sampler
class DiskSampler {
 public:
  explicit DiskSampler(std::uint64_t seed) : rng_(seed) {}

  std::pair<double, double> next(double rmax = 0.999) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = rmax * std::sqrt(u(rng_));
    const double t = 2.0 * pi * u(rng_);
    return {r * std::cos(t), r * std::sin(t)};
  }

  double uniform(double a, double b) {
    std::uniform_real_distribution<double> u(a, b);
    return u(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
