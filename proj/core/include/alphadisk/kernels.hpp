#pragma once

// Pointwise evaluation of the kernels attached to the weighted Laplacian on
// the unit disk: the pseudo-hyperbolic distance q, the disk automorphism
// phi_w, the radial profile h, the weighted Poisson kernel P_a, the conjugate
// boundary kernel used by the Dirichlet representation, the Green function
// G_a, and the right-hand sides of the two Green derivative estimates.
//
// Complex powers use the principal branch throughout; every base that gets a
// fractional exponent here has the form 1 - conj(z)*w with |z|,|w| < 1, which
// keeps it in the right half-plane where the branch is smooth.

#include "alphadisk/core.hpp"

namespace alphadisk {

// Tuning for the first Green derivative estimate.  The constant multiplying
// the logarithmic summand is existential (no sharp value is available), so it
// stays configurable; checks against that bound are reported "up to c_alpha".
struct GreenEvalConfig {
  double c_alpha = 1.0;

  void validate() const;  // DomainError unless c_alpha > 0 and finite
};

// |z - w| / |1 - conj(w) z|, the Moebius-invariant distance; in [0, 1).
double pseudo_hyperbolic(const DiskPoint& z, const DiskPoint& w);

// phi_w(z) = (w - z) / (1 - conj(w) z); an involution of the disk.
DiskPoint mobius(const DiskPoint& w, const DiskPoint& z);

// h(r) = (1/2) * integral of t^a / (1 - t) over t in (0, 1 - r^2).
// Strictly decreasing on (0, 1], h(1) = 0, logarithmic blow-up at r = 0.
// DomainError for r <= 0 or r > 1.
//
// Evaluated via the split h(r) = -log r + K(a) - V(r^2): the log term carries
// the full singularity, K(a) = (1/2) * integral of (t^a - 1)/(1 - t) over
// (0, 1) is a digamma value, and V is an entire series in r^2 (see the
// implementation for the derivation).  For r^2 >= 1/2 a direct power series
// in 1 - r^2 is used instead.  Both branches agree with the defining integral
// to machine precision and cost a few dozen multiply-adds.
double h_alpha(double r, const AlphaWeight& a);

// K(a) from the h split above: (1/2) * integral of (t^a - 1)/(1 - t), t in (0,1).
double h_alpha_log_offset(const AlphaWeight& a);

// P_a(z) = (1 - |z|^2)^(a+1) / ((1 - z) (1 - conj(z))^(a+1)).
// Real and classical at a = 0; complex-valued otherwise.
cplx poisson_kernel_alpha(const DiskPoint& z, const AlphaWeight& a);

// Integrand kernel of the boundary part of the Dirichlet representation:
// (1 - |w|^2)^(a+1) / ((1 - z conj(w)) (1 - conj(z) w)^(a+1)) with z = e^{i theta}.
// Equals conj(P_a(w e^{-i theta})).
cplx v_kernel(const DiskPoint& w, const BoundaryAngle& theta, const AlphaWeight& a);

// G_a(z, w) = (1 - conj(z) w)^a h(q(z, w)) / (2 pi).
// SingularityError when |z - w| < 1e-14 (h blows up on the diagonal).
cplx green_alpha(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a);

// Right-hand side of the |d/dw G_a| estimate, divided by 2 pi:
//   [ a * c_alpha * |1-conj(z)w|^(a-1) (1-q^2)^(a+1) (1 - log q^2)
//     + (1-|z|^2)^(a+1) (1-|w|^2)^a / (2 |1-conj(z)w|^(a+1) |z-w|) ] / (2 pi).
// Requires a >= 0 (DomainError otherwise); SingularityError on the diagonal.
double green_dw_bound(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a,
                      const GreenEvalConfig& cfg);

// Right-hand side of the |d/dwbar G_a| estimate, divided by 2 pi:
//   (1-|z|^2)^(a+1) (1-|w|^2)^a / (2 |1-conj(z)w|^(a+1) |z-w|) / (2 pi).
// This one is in fact an identity for |d/dwbar G_a| (the derivative's modulus
// collapses to exactly this expression), which the tests exploit.
double green_dwbar_bound(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a);

}  // namespace alphadisk
