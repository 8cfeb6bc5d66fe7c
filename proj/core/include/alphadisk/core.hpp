#pragma once

// Core vocabulary for weighted potential theory on the unit disk: the weight
// parameter, points, boundary signals, interior fields, quadrature settings
// and the error taxonomy shared by every other header in this library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphadisk {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// ---------------------------------------------------------------------------
// Error taxonomy.  Everything numerical that can go wrong maps onto one of
// these so callers (and the CLI) can translate failures into exit codes.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// invalid mathematical input (alpha out of range, point outside the disk, ...)
class DomainError : public Error {
public:
  using Error::Error;
};

// evaluation requested on top of a non-integrable kernel singularity
class SingularityError : public Error {
public:
  using Error::Error;
};

// a NaN/Inf appeared where a finite number was required
class NonFiniteError : public Error {
public:
  using Error::Error;
};

// two refinement levels of a quadrature disagree beyond the requested tolerance
class ToleranceError : public Error {
public:
  using Error::Error;
};

// source term grows too fast for the weighted potential to converge
class IntegrabilityError : public Error {
public:
  using Error::Error;
};

// finite-difference step too large for the distance to the boundary
class StepError : public Error {
public:
  using Error::Error;
};

// evaluation point too close to the rim for the requested angular resolution
class MarginError : public Error {
public:
  using Error::Error;
};

// a probe grid refuted a declared growth envelope
class EnvelopeError : public Error {
public:
  using Error::Error;
};

// a pair of points that must be distinct coincides
class DegeneratePairError : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// AlphaWeight: the parameter alpha > -1 of the radial weight
// rho_alpha(z) = (1 - |z|^2)^(-alpha).
// ---------------------------------------------------------------------------

class DiskPoint;

class AlphaWeight {
public:
  explicit AlphaWeight(double alpha);

  double alpha() const noexcept { return alpha_; }

  // rho_alpha at an interior point
  double rho(const DiskPoint& z) const;

private:
  double alpha_;
};

// factory used by parsing layers; throws DomainError unless alpha > -1
AlphaWeight validate_alpha(double alpha);

// ---------------------------------------------------------------------------
// DiskPoint: a point strictly inside the unit disk.  |z| < 1 is enforced at
// construction; values within 1e-15 of the rim are still representable.
// ---------------------------------------------------------------------------

class DiskPoint {
public:
  DiskPoint() : z_(0.0, 0.0), abs_(0.0) {}
  DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}
  explicit DiskPoint(cplx z);

  cplx value() const noexcept { return z_; }
  double re() const noexcept { return z_.real(); }
  double im() const noexcept { return z_.imag(); }
  double abs() const noexcept { return abs_; }
  double abs2() const noexcept { return abs_ * abs_; }

  // 1 - |z|^2, the quantity every weight and kernel is built from
  double one_minus_abs2() const noexcept { return (1.0 - abs_) * (1.0 + abs_); }

private:
  cplx z_;
  double abs_;
};

// weight value rho_alpha(z); free-function form of AlphaWeight::rho
double weight_rho(const DiskPoint& z, const AlphaWeight& a);

// ---------------------------------------------------------------------------
// BoundaryAngle: an angle on the unit circle, normalized into [0, 2*pi).
// ---------------------------------------------------------------------------

class BoundaryAngle {
public:
  explicit BoundaryAngle(double theta);

  double theta() const noexcept { return theta_; }
  cplx point() const { return cplx(std::cos(theta_), std::sin(theta_)); }

private:
  double theta_;
};

// ---------------------------------------------------------------------------
// BoundarySignal: data on the unit circle, sampled at n equispaced nodes
// theta_k = 2*pi*k/n.  n must be even and >= 4.  A closed-form rule may be
// attached; when both samples and a rule are given they must agree at nodes.
// ---------------------------------------------------------------------------

class BoundarySignal {
public:
  static BoundarySignal from_samples(std::vector<cplx> samples);
  static BoundarySignal from_rule(std::function<cplx(double)> rule, std::size_t n);
  static BoundarySignal from_samples_and_rule(std::vector<cplx> samples,
                                              std::function<cplx(double)> rule,
                                              double agreement_tol = 1e-9);

  std::size_t size() const noexcept { return samples_.size(); }
  double node(std::size_t k) const { return two_pi * static_cast<double>(k) / static_cast<double>(size()); }
  const std::vector<cplx>& samples() const noexcept { return samples_; }
  cplx sample(std::size_t k) const { return samples_[k % samples_.size()]; }

  bool has_rule() const noexcept { return static_cast<bool>(rule_); }
  cplx rule_at(double theta) const;

  cplx mean() const;

private:
  BoundarySignal(std::vector<cplx> samples, std::function<cplx(double)> rule);

  std::vector<cplx> samples_;
  std::function<cplx(double)> rule_;
};

// ---------------------------------------------------------------------------
// DiskField: data on the open disk, either a callable rule or a polar grid
// of samples (bilinearly interpolated).  An optional growth envelope
// |f(z)| <~ (1-|z|^2)^(-envelope_exponent) may be declared; consumers use it
// for integrability gating.
// ---------------------------------------------------------------------------

struct PolarGrid {
  std::vector<double> radii;   // strictly increasing, all in [0, 1)
  std::size_t angular = 0;     // number of equispaced angles, >= 4
  std::vector<cplx> values;    // radius-major: values[i*angular + j]
};

class DiskField {
public:
  static DiskField from_rule(std::function<cplx(const DiskPoint&)> rule,
                             std::optional<double> envelope_exponent = std::nullopt);
  static DiskField from_grid(PolarGrid grid,
                             std::optional<double> envelope_exponent = std::nullopt);

  cplx operator()(const DiskPoint& z) const;

  bool has_rule() const noexcept { return static_cast<bool>(rule_); }
  std::optional<double> envelope_exponent() const noexcept { return envelope_; }

private:
  DiskField() = default;

  std::function<cplx(const DiskPoint&)> rule_;
  std::optional<PolarGrid> grid_;
  std::optional<double> envelope_;
};

// ---------------------------------------------------------------------------
// QuadratureSpec: resolution and tolerance settings shared by all quadrature
// driven operations.  All node counts must be >= 4 and tolerances positive.
// ---------------------------------------------------------------------------

struct QuadratureSpec {
  std::size_t circle_nodes = 256;        // equispaced angular nodes
  std::size_t radial_nodes = 12;         // Gauss-Legendre points per radial panel
  std::size_t singular_ring_levels = 8;  // geometric panel levels per radial end
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;

  // throws DomainError when a count is < 4 or a tolerance is not positive
  void validate() const;

  static QuadratureSpec checked(std::size_t circle_nodes, std::size_t radial_nodes,
                                std::size_t singular_ring_levels, double abs_tol,
                                double rel_tol);
};

// ---------------------------------------------------------------------------
// BoundReport: the common result shape for inequality sweeps and identity
// checks: one row per sample with a left-hand side, a right-hand side and
// their ratio (or discrepancy), plus an overall verdict.
// ---------------------------------------------------------------------------

struct BoundSample {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = true;
};

struct BoundReport {
  std::string name;
  std::vector<BoundSample> samples;
  double ratio_limit = 1.0;  // per-sample pass threshold on `ratio`
  bool pass = true;
  std::string notes;

  void add(std::string label, double lhs, double rhs, double ratio);
  // convenience: ratio = lhs/rhs
  void add(std::string label, double lhs, double rhs);

  double max_ratio() const;
  double min_ratio() const;
  double max_lhs() const;
  double min_lhs() const;
};

// ---------------------------------------------------------------------------
// Small numeric helpers shared across modules.
// ---------------------------------------------------------------------------

// principal-branch complex power with fast paths for small integer exponents
cplx powc(cplx base, double exponent);

// 1 - |z|^2 for a raw complex value (no disk membership check)
inline double one_minus_abs2(cplx z) {
  return 1.0 - (z.real() * z.real() + z.imag() * z.imag());
}

inline bool finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// number of worker threads honored by the parallel loops (ALPHA_DISK_THREADS
// caps it; defaults to the hardware concurrency)
unsigned thread_count();

// deterministic parallel map: fills out[i] = fn(i) for i in [0, count);
// results are identical for any thread count because each slot is
// independent and reductions happen in index order at the call site
void parallel_fill(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace alphadisk
