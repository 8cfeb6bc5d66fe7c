#pragma once

// Boundary machinery: Fourier spectra of periodic signals, harmonic and
// weighted-harmonic extension into the disk, the periodic Hilbert transform
// in both principal-value and Fourier-multiplier form, the conjugate-function
// identity check, Hardy circle means, and the boundary singular integral
// operator S.

#include <vector>

#include "alphadisk/core.hpp"

namespace alphadisk {

// Fourier coefficients c_k, k in [-n/2, n/2), of a uniformly sampled
// 2pi-periodic signal; forward transform normalized by 1/n so that
// psi(theta) = sum_k c_k e^{i k theta} for band-limited signals.
class FourierSpectrum {
 public:
  static FourierSpectrum analyze(const BoundarySignal& psi);

  std::size_t size() const { return coeffs_.size(); }

  // k in [-n/2, n/2); k = -n/2 is the Nyquist bin
  cplx coeff(long k) const;

  // inverse transform back to samples (exact round trip up to round-off)
  BoundarySignal synthesize() const;

  // c_k -> -i sgn(k) c_k with c_0 -> 0; the Nyquist bin is zeroed because its
  // sign is ambiguous and keeping it would break conjugate symmetry
  FourierSpectrum hilbert() const;

  // c_k -> i k c_k (d/dtheta); Nyquist bin zeroed
  FourierSpectrum derivative() const;

 private:
  explicit FourierSpectrum(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<cplx> coeffs_;  // FFT layout: index j holds frequency j, or j-n for j >= n/2
};

enum class HilbertMethod { pv, multiplier };

// Classical harmonic extension: (1/2pi) int P(z e^{-i theta}) psi(theta) dtheta,
// evaluated by the trapezoid rule over the signal's own nodes (spectrally
// accurate for smooth data).
cplx poisson_extend(const BoundarySignal& psi, const DiskPoint& z);

// Weighted-harmonic extension with the kernel P_a in place of P.
cplx alpha_poisson_extend(const BoundarySignal& psi, const DiskPoint& z, const AlphaWeight& a);

// Periodic Hilbert transform, sign convention
//   H(psi)(phi) = -(1/2pi) int_0^pi [psi(phi+t) - psi(phi-t)] / tan(t/2) dt,
// so H(cos) = sin and H(sin) = -cos.
//
// The pv method integrates that difference quotient by the trapezoid rule on
// [0, pi] with the continuous extension 4 psi'(phi) (central difference) as
// the t = 0 value and 0 at t = pi; the extended integrand is smooth, even and
// periodic, so the rule converges fast.  The multiplier method applies
// c_k -> -i sgn(k) c_k on the spectrum and is the reference implementation.
BoundarySignal hilbert_transform(const BoundarySignal& psi, HilbertMethod method);

// Checks r d/dr P[psi] = P[H(psi')] at radius r over the signal's nodes.
// psi' is computed spectrally.  Sample rows carry the per-node discrepancy
// against max(abs_tol, rel_tol * scale of the right-hand side).
BoundReport conjugate_identity_check(const BoundarySignal& psi, double r,
                                     const QuadratureSpec& spec);

// p-th integral mean of |f| on the circle of radius r; p = infinity gives the
// max over the angular nodes.
double hardy_mean(const DiskField& f, double p, double r, std::size_t nodes = 1024);

struct HardyNormOptions {
  std::size_t max_j = 20;   // radii r_j = 1 - 2^-j, j = 1..max_j
  double ceiling = 1e6;     // means beyond this set the divergence flag
  std::size_t nodes = 1024; // angular resolution of each mean
};

struct HardyNormResult {
  double value = 0.0;          // sup of the sampled means
  bool divergence_flag = false;
  std::vector<double> radii;
  std::vector<double> means;
};

// Sup of hardy_mean over the geometric radius grid approaching the boundary;
// the flag records numerical evidence that the means blow up.
HardyNormResult hardy_norm(const DiskField& f, double p, const HardyNormOptions& opt = {});

// Boundary singular integral
//   S[f'](w) = (1/pi) int_0^2pi (1-|w|^2)^a / (1 - z conj(w))^a
//              * Im(w conj(z)) / |z - w|^2 * f'(theta) dtheta,  z = e^{i theta}.
// MarginError when |w| > 1 - 10 * (2pi/n) for the node count n in use: closer
// to the rim the |z-w|^-2 peak is unresolved at that resolution.
cplx s_operator(const BoundarySignal& fprime, const DiskPoint& w, const AlphaWeight& a,
                const QuadratureSpec& spec);

}  // namespace alphadisk
