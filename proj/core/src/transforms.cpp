#include "alphadisk/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include <fftw3.h>

#include "alphadisk/kernels.hpp"

namespace alphadisk {

namespace {

// FFTW planning is not thread-safe; execution through a fresh plan is cheap
// at the sizes used here, so everything runs under one lock with FFTW_ESTIMATE
// (deterministic plans, bit-stable output for identical input).
std::mutex& fft_mutex() {
  static std::mutex m;
  return m;
}

std::vector<cplx> run_fft(const std::vector<cplx>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n);
  std::lock_guard lock(fft_mutex());
  fftw_complex* buf_in = fftw_alloc_complex(n);
  fftw_complex* buf_out = fftw_alloc_complex(n);
  for (std::size_t j = 0; j < n; ++j) {
    buf_in[j][0] = in[j].real();
    buf_in[j][1] = in[j].imag();
  }
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf_in, buf_out, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (std::size_t j = 0; j < n; ++j) out[j] = cplx(buf_out[j][0], buf_out[j][1]);
  fftw_free(buf_in);
  fftw_free(buf_out);
  return out;
}

}  // namespace

FourierSpectrum FourierSpectrum::analyze(const BoundarySignal& psi) {
  std::vector<cplx> c = run_fft(psi.samples(), FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(c.size());
  for (cplx& v : c) v *= scale;
  return FourierSpectrum(std::move(c));
}

cplx FourierSpectrum::coeff(long k) const {
  const long n = static_cast<long>(coeffs_.size());
  if (k < -n / 2 || k >= n / 2) {
    std::ostringstream os;
    os << "frequency " << k << " outside [-" << n / 2 << ", " << n / 2 << ")";
    throw DomainError(os.str());
  }
  return coeffs_[static_cast<std::size_t>(k >= 0 ? k : k + n)];
}

BoundarySignal FourierSpectrum::synthesize() const {
  return BoundarySignal::from_samples(run_fft(coeffs_, FFTW_BACKWARD));
}

FourierSpectrum FourierSpectrum::hilbert() const {
  const std::size_t n = coeffs_.size();
  std::vector<cplx> c(n);
  c[0] = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    if (j < n / 2) {
      c[j] = cplx(0.0, -1.0) * coeffs_[j];
    } else if (j == n / 2) {
      c[j] = 0.0;
    } else {
      c[j] = cplx(0.0, 1.0) * coeffs_[j];
    }
  }
  return FourierSpectrum(std::move(c));
}

FourierSpectrum FourierSpectrum::derivative() const {
  const std::size_t n = coeffs_.size();
  std::vector<cplx> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == n / 2) {
      c[j] = 0.0;
      continue;
    }
    const double k = j < n / 2 ? static_cast<double>(j)
                               : static_cast<double>(j) - static_cast<double>(n);
    c[j] = cplx(0.0, k) * coeffs_[j];
  }
  return FourierSpectrum(std::move(c));
}

cplx poisson_extend(const BoundarySignal& psi, const DiskPoint& z) {
  const std::size_t n = psi.size();
  const double d = z.one_minus_abs2();
  cplx acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx zt = z.value() * std::polar(1.0, -psi.node(k));
    acc += psi.sample(k) * (d / std::norm(1.0 - zt));
  }
  return acc / static_cast<double>(n);
}

cplx alpha_poisson_extend(const BoundarySignal& psi, const DiskPoint& z, const AlphaWeight& a) {
  const std::size_t n = psi.size();
  cplx acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const DiskPoint zt(z.value() * std::polar(1.0, -psi.node(k)));
    acc += psi.sample(k) * poisson_kernel_alpha(zt, a);
  }
  return acc / static_cast<double>(n);
}

namespace {

BoundarySignal hilbert_pv(const BoundarySignal& psi) {
  const std::size_t n = psi.size();
  const auto& s = psi.samples();
  const double dt = two_pi / static_cast<double>(n);
  std::vector<cplx> out(n);
  // tan(j dt / 2), j = 1 .. n/2-1, shared across evaluation points
  std::vector<double> tan_half(n / 2, 0.0);
  for (std::size_t j = 1; j < n / 2; ++j) tan_half[j] = std::tan(0.5 * dt * static_cast<double>(j));
  for (std::size_t m = 0; m < n; ++m) {
    // continuous extension of the difference quotient at t = 0 is 4 psi'(phi)
    const cplx g0 = 2.0 * (s[(m + 1) % n] - s[(m + n - 1) % n]) / dt;
    cplx acc = 0.5 * g0;
    for (std::size_t j = 1; j < n / 2; ++j) {
      acc += (s[(m + j) % n] - s[(m + n - j) % n]) / tan_half[j];
    }
    // the t = pi term vanishes identically by periodicity
    out[m] = -acc / static_cast<double>(n);
  }
  return BoundarySignal::from_samples(std::move(out));
}

}  // namespace

BoundarySignal hilbert_transform(const BoundarySignal& psi, HilbertMethod method) {
  if (method == HilbertMethod::multiplier) {
    return FourierSpectrum::analyze(psi).hilbert().synthesize();
  }
  return hilbert_pv(psi);
}

BoundReport conjugate_identity_check(const BoundarySignal& psi, double r,
                                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
  const std::size_t n = psi.size();

  const BoundarySignal hpsi_prime =
      FourierSpectrum::analyze(psi).derivative().hilbert().synthesize();

  const double h = std::min({1e-4, (1.0 - r) / 10.0, r / 10.0});
  std::vector<cplx> lhs(n), rhs(n);
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx dir = std::polar(1.0, psi.node(k));
    const cplx up = poisson_extend(psi, DiskPoint((r + h) * dir));
    const cplx dn = poisson_extend(psi, DiskPoint((r - h) * dir));
    lhs[k] = r * (up - dn) / (2.0 * h);
    rhs[k] = poisson_extend(hpsi_prime, DiskPoint(r * dir));
    scale = std::max(scale, std::abs(rhs[k]));
  }
  const double tol = std::max(spec.abs_tol, spec.rel_tol * scale);

  BoundReport report;
  report.name = "conjugate-identity";
  for (std::size_t k = 0; k < n; ++k) {
    std::ostringstream label;
    label << "node " << k;
    report.add(label.str(), std::abs(lhs[k] - rhs[k]), tol);
  }
  std::ostringstream notes;
  notes << "r = " << r << ", radial step " << h << ", tolerance " << tol;
  report.notes = notes.str();
  return report;
}

double hardy_mean(const DiskField& f, double p, double r, std::size_t nodes) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
  if (nodes < 4) throw DomainError("need at least 4 angular nodes");
  const bool is_inf = std::isinf(p);
  if (!is_inf && !(p > 0.0)) throw DomainError("p must be positive or infinity");

  std::vector<double> mags(nodes);
  parallel_fill(nodes, [&](std::size_t k) {
    const double theta = two_pi * static_cast<double>(k) / static_cast<double>(nodes);
    mags[k] = std::abs(f(DiskPoint(std::polar(r, theta))));
  });
  for (std::size_t k = 0; k < nodes; ++k) {
    if (!std::isfinite(mags[k])) throw NonFiniteError("field sample is not finite on the circle");
  }
  if (is_inf) return *std::max_element(mags.begin(), mags.end());
  double acc = 0.0;
  for (double m : mags) acc += std::pow(m, p);
  return std::pow(acc / static_cast<double>(nodes), 1.0 / p);
}

HardyNormResult hardy_norm(const DiskField& f, double p, const HardyNormOptions& opt) {
  if (opt.max_j < 1) throw DomainError("need at least one radius");
  HardyNormResult res;
  for (std::size_t j = 1; j <= opt.max_j; ++j) {
    const double r = 1.0 - std::pow(2.0, -static_cast<double>(j));
    const double m = hardy_mean(f, p, r, opt.nodes);
    res.radii.push_back(r);
    res.means.push_back(m);
    res.value = std::max(res.value, m);
    if (m > opt.ceiling) res.divergence_flag = true;
  }
  return res;
}

cplx s_operator(const BoundarySignal& fprime, const DiskPoint& w, const AlphaWeight& a,
                const QuadratureSpec& spec) {
  spec.validate();
  const bool use_rule = fprime.has_rule();
  const std::size_t n = use_rule ? std::max(spec.circle_nodes, fprime.size()) : fprime.size();
  const double margin = 10.0 * two_pi / static_cast<double>(n);
  if (w.abs() > 1.0 - margin) {
    std::ostringstream os;
    os << "|w| = " << w.abs() << " exceeds 1 - " << margin
       << "; the |z-w|^-2 peak is unresolved at " << n << " nodes";
    throw MarginError(os.str());
  }
  const double al = a.alpha();
  const double dw = std::pow(w.one_minus_abs2(), al);
  cplx acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = two_pi * static_cast<double>(k) / static_cast<double>(n);
    const cplx z = std::polar(1.0, theta);
    const cplx sample = use_rule ? fprime.rule_at(theta) : fprime.sample(k);
    const cplx kernel = dw / powc(1.0 - z * std::conj(w.value()), al) *
                        (std::imag(w.value() * std::conj(z)) / std::norm(z - w.value()));
    acc += kernel * sample;
  }
  return acc * (2.0 / static_cast<double>(n));
}

}  // namespace alphadisk
