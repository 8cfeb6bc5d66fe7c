#pragma once

// Numerical verification of the estimate chain behind the Lipschitz result:
// the circle power integral, the M1 / I1 / I2 area integrals with their
// companion ratios, the two Green derivative estimates checked against finite
// differences, Lipschitz difference quotients, and the bounded-derivative
// sweep for Green potentials with admissible sources.

#include <functional>
#include <utility>
#include <vector>

#include "alphadisk/core.hpp"
#include "alphadisk/kernels.hpp"

namespace alphadisk {

struct CirclePowerResult {
  double value = 0.0;  // int_0^2pi dt / |1 - r rho e^{it}|^beta
  double ratio = 0.0;  // value * (1 - r rho)^(beta - 1)
};

// Requires 0 < r, rho < 1 and beta > 1.  The node count scales with
// 1/(1 - r rho) so the near-rim peak stays resolved at any grid point.
CirclePowerResult circle_power_integral(double r, double rho, double beta,
                                        const QuadratureSpec& spec);

// M1(r): area integral of 1/|z - r|; the polar rule recentered at r turns the
// integrand into exact ray lengths, so the result is quadrature-exact.
double compute_M1(double r, const QuadratureSpec& spec);

// I1(w): area integral of
//   (1-|z|^2)^(a+1) (1-|w|^2)^a / (2 |1-conj(z)w|^(a+1) |z-w|),
// recentered at w; requires a >= 0.  Callers divide by (1-|w|^2)^a for the
// companion ratio.
double compute_I1(const DiskPoint& w, const AlphaWeight& a, const QuadratureSpec& spec);

// I2(w) in the substituted variable zeta = phi_w(z), where the integrand
// becomes (1-|w|^2)^(a+1) (1-|zeta|^2)^(a+1) (1 - log|zeta|^2)
//         / |1 - conj(w) zeta|^(a+3)
// with the logarithmic singularity pinned at zeta = 0 (handled by the rule's
// geometric inner rings).  Requires a > 0.
double compute_I2(const DiskPoint& w, const AlphaWeight& a, const QuadratureSpec& spec);

// Finite-difference d/dw and d/dwbar of the Green function at (z, w), checked
// against the two estimate right-hand sides.  Rows "dw" and "dwbar"; the
// report admits ratio 1 + 1e-3 (finite-difference slack).  StepError when the
// pair is closer than 10 steps or w is within 4 steps of the rim.
BoundReport verify_green_derivative_bounds(const DiskPoint& z, const DiskPoint& w,
                                           const AlphaWeight& a, const GreenEvalConfig& cfg,
                                           double step);

// max over pairs of |field(z1) - field(z2)| / |z1 - z2|.
// DegeneratePairError on a coincident pair.
double lipschitz_quotient(const std::function<cplx(const DiskPoint&)>& field,
                          const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs);

// Samples d/dw and d/dwbar of the Green potential of g on the given circles
// (8 angles per circle, finite differences with step (1-r)/16) and reports
// per-radius maxima.  Every row is gated against twice the maximum over the
// non-largest radii: the largest circle exceeding that doubles as numerical
// evidence of blow-up.  EnvelopeError when g grows faster than
// (1-|z|^2)^-alpha (declared or probed); requires alpha > 0.
BoundReport grin_lip_sweep(const AlphaWeight& a, const DiskField& g,
                           const std::vector<double>& radii, const QuadratureSpec& spec);

}  // namespace alphadisk
