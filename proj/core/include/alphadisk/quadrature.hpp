#pragma once

// Deterministic quadrature rules on the circle and the disk.
//
// The disk engine is a tensor rule in polar coordinates around a chosen
// center: equispaced angles (spectrally accurate for the periodic direction)
// times graded Gauss-Legendre panels along each ray.  Radial panels shrink
// geometrically toward the ray origin (to absorb |z-c|^-1 and log|z-c|
// singularities against the polar weight) and are clustered toward the rim
// with node density proportional to (1-r)^(-1/2) (to absorb the fractional
// powers of 1-|z|^2 that every weighted kernel carries).
//
// Every disk integral is evaluated at the requested spec and once more at a
// coarsened spec; disagreement beyond tolerances raises ToleranceError.
// Summation order is fixed (ray-major), so results are bit-reproducible for
// a fixed spec regardless of thread count.

#include <cstddef>
#include <functional>
#include <vector>

#include "alphadisk/core.hpp"

namespace alphadisk::quadrature {

// Gauss-Legendre rule on [-1, 1]; computed once per n and cached.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(std::size_t n);

// Equispaced angular rule theta_j = 2*pi*j/n; exact for trigonometric
// polynomials of degree < n.
class CircleRule {
public:
  explicit CircleRule(std::size_t n);
  std::size_t size() const noexcept { return n_; }
  double node(std::size_t j) const { return two_pi * static_cast<double>(j) / static_cast<double>(n_); }
  double weight() const noexcept { return two_pi / static_cast<double>(n_); }

private:
  std::size_t n_;
};

// Materialized polar rule for the disk.  Nodes are grouped by ray so that
// partial sums can be formed per ray and reduced in index order.
struct DiskRule {
  struct Node {
    cplx z;
    double weight;
  };

  std::vector<Node> nodes;
  std::vector<std::size_t> ray_offsets;  // size = ray count + 1

  double total_weight() const;

  // polar rule centered at `center` (pass 0 for the plain disk rule);
  // ray lengths are the exact chord lengths to the unit circle
  static DiskRule centered(cplx center, const QuadratureSpec& spec);

  // rule obtained by pulling the integral back through the disk
  // automorphism z = (w - zeta)/(1 - conj(w) zeta); the Jacobian
  // (1-|w|^2)^2/|1-conj(w) zeta|^4 is folded into the weights, and the
  // center rings of the zeta-rule absorb singularities at z = w
  static DiskRule mobius_pulled(const DiskPoint& w, const QuadratureSpec& spec);
};

// integral of f over [0, 2*pi) by the equispaced rule; NonFiniteError if a
// sample is not finite
cplx integrate_circle(const std::function<cplx(double)>& f, const QuadratureSpec& spec);

// area integral of f over the unit disk (rule centered at the origin)
cplx integrate_disk(const std::function<cplx(const DiskPoint&)>& f, const QuadratureSpec& spec);

// area integral with the polar rule recentered at w; the polar weight
// cancels a |z-w|^-1 singularity exactly and the geometric center rings
// absorb log|z-w|
cplx integrate_disk_recentered(const std::function<cplx(const DiskPoint&)>& f, const DiskPoint& w,
                               const QuadratureSpec& spec);

// area integral through the Moebius substitution at w (alternative scheme
// for integrands singular at w; useful as a cross-check of the recentered
// rule)
cplx integrate_disk_mobius(const std::function<cplx(const DiskPoint&)>& f, const DiskPoint& w,
                           const QuadratureSpec& spec);

// adaptive Gauss-Kronrod integral on a finite interval (utility used for
// one-dimensional constants; deterministic)
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

}  // namespace alphadisk::quadrature
